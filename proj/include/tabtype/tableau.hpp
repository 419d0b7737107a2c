#pragma once

#include <vector>

#include "tabtype/diagram.hpp"
#include "tabtype/type_filling.hpp"

namespace tabtype {

// Bijective filling of a diagram with 1..n.
class Tableau {
 public:
  Tableau() = default;
  // entries parallel to shape.boxes(); must be a permutation of 1..n.
  // Throws "invalid-tableau" otherwise.
  Tableau(Diagram shape, std::vector<int> entries);

  const Diagram& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int entry_at(const Box& b) const;  // throws "box-not-in-diagram"
  Box box_of(int entry) const;       // throws "invalid-tableau" when out of range

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Diagram shape_;
  std::vector<int> entries_;
};

// theta(c) = #{d in Hook(c) : T(d) < T(c)} (the box itself never counts:
// T(c) < T(c) is false).
TypeFilling type_of(const Tableau& t);

// Boxes in increasing entry order — the order the boxes get erased (the
// i-th erased box carries entry i).
std::vector<Box> filling_sequence_of(const Tableau& t);
// Inverse: seq[i] gets entry i+1.  Throws "duplicate-box"/"malformed-input"
// via the Diagram constructor on bad sequences.
Tableau tableau_from_filling_sequence(const std::vector<Box>& seq);

}  // namespace tabtype
