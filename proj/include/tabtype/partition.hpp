#pragma once

#include <vector>

#include "tabtype/diagram.hpp"
#include "tabtype/numbers.hpp"

namespace tabtype {

// Weakly decreasing positive parts.  The empty partition is allowed unless a
// particular operation says otherwise.
class Partition {
 public:
  Partition() = default;
  // Throws "malformed-input" unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of boxes, sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const;  // 1-based, 0 beyond the last row

  Partition conjugate() const;

  // Outer corners: boxes (a, lambda_a) whose removal leaves a partition.
  std::vector<Box> corners() const;

  // Top-left justified diagram {(r,c) : 1<=r<=rows, 1<=c<=part(r)}.
  Diagram ferrers() const;

  int hook_length(int row, int col) const;  // arm + leg + 1 in the Ferrers diagram
  BigInt hook_product() const;
  // n! / hook_product: the number of standard fillings.
  BigInt hook_length_formula() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// (n-1, n-2, ..., 1).  Throws "n-too-small" when n < 2.
Partition staircase_partition(int n);

// Row lengths of d, sorted decreasingly (zeros dropped).
Partition stack_yx(const Diagram& d);
// Conjugate of the sorted column lengths: the partition whose columns are
// the column lengths of d.
Partition stack_xy(const Diagram& d);

// All partitions of n in lex-decreasing order, e.g. 4: (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
std::vector<Partition> partitions_of(int n);

}  // namespace tabtype
