#pragma once

#include <vector>

#include "tabtype/diagram.hpp"

namespace tabtype {

// A "type": an assignment theta(c) in [0, hook_length(c)-1] for every box.
class TypeFilling {
 public:
  TypeFilling() = default;
  // theta parallel to shape.boxes().  Throws "invalid-type" when out of range
  // or sizes differ.
  TypeFilling(Diagram shape, std::vector<int> theta);

  const Diagram& shape() const { return shape_; }
  const std::vector<int>& theta() const { return theta_; }
  int theta_at(const Box& b) const;  // throws "box-not-in-diagram"

  friend bool operator==(const TypeFilling&, const TypeFilling&) = default;

 private:
  Diagram shape_;
  std::vector<int> theta_;
};

// theta identically 0.
TypeFilling standard_type(const Diagram& d);
// theta(c) = arm length of c.
TypeFilling balanced_type(const Diagram& d);

}  // namespace tabtype
