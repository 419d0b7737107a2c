#include "tabtype/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tabtype/error.hpp"

namespace tabtype {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw error("malformed-input", "part " + std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw error("malformed-input", "parts not weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

std::vector<Box> Partition::corners() const {
  std::vector<Box> out;
  for (int i = 1; i <= rows(); ++i)
    if (part(i) > part(i + 1)) out.push_back({i, part(i)});
  return out;
}

Diagram Partition::ferrers() const {
  std::vector<Box> boxes;
  boxes.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= part(r); ++c) boxes.push_back({r, c});
  return Diagram(std::move(boxes));
}

int Partition::hook_length(int row, int col) const {
  int arm = part(row) - col;
  int leg = 0;
  for (int r = row + 1; r <= rows(); ++r)
    if (part(r) >= col) ++leg;
  return arm + leg + 1;
}

BigInt Partition::hook_product() const {
  BigInt prod = 1;
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= part(r); ++c) prod *= hook_length(r, c);
  return prod;
}

BigInt Partition::hook_length_formula() const {
  return factorial(size()) / hook_product();
}

Partition staircase_partition(int n) {
  if (n < 2) throw error("n-too-small", "staircase needs n >= 2, got " + std::to_string(n));
  std::vector<int> parts;
  for (int p = n - 1; p >= 1; --p) parts.push_back(p);
  return Partition(std::move(parts));
}

Partition stack_yx(const Diagram& d) {
  std::vector<int> lens = d.row_lengths();
  std::erase(lens, 0);
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(std::move(lens));
}

Partition stack_xy(const Diagram& d) {
  std::vector<int> lens = d.col_lengths();
  std::erase(lens, 0);
  std::sort(lens.begin(), lens.end(), std::greater<>());
  if (lens.empty()) return {};
  return Partition(std::move(lens)).conjugate();
}

static void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

}  // namespace tabtype
