#include "tabtype/type_filling.hpp"

#include <string>

#include "tabtype/error.hpp"

namespace tabtype {

TypeFilling::TypeFilling(Diagram shape, std::vector<int> theta)
    : shape_(std::move(shape)), theta_(std::move(theta)) {
  if (theta_.size() != shape_.size())
    throw error("invalid-type", "theta size " + std::to_string(theta_.size()) +
                                    " vs " + std::to_string(shape_.size()) + " boxes");
  for (std::size_t i = 0; i < theta_.size(); ++i) {
    int h = hook_length(shape_, shape_.boxes()[i]);
    if (theta_[i] < 0 || theta_[i] >= h)
      throw error("invalid-type",
                  "theta " + std::to_string(theta_[i]) + " out of [0," +
                      std::to_string(h - 1) + "] at (" +
                      std::to_string(shape_.boxes()[i].row) + "," +
                      std::to_string(shape_.boxes()[i].col) + ")");
  }
}

int TypeFilling::theta_at(const Box& b) const {
  return theta_[shape_.index_of(b)];
}

TypeFilling standard_type(const Diagram& d) {
  return TypeFilling(d, std::vector<int>(d.size(), 0));
}

TypeFilling balanced_type(const Diagram& d) {
  std::vector<int> theta;
  theta.reserve(d.size());
  for (const Box& b : d.boxes())
    theta.push_back(static_cast<int>(hook_cells(d, b).arm.size()));
  return TypeFilling(d, std::move(theta));
}

}  // namespace tabtype
