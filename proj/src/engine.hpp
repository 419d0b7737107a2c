#pragma once

// Internal erase/restore machinery shared by the filling and schur
// translation units.  Not installed.

#include <cstdint>
#include <vector>

#include "tabtype/type_filling.hpp"

namespace tabtype::detail {

// Mutable erase/restore state over one type.  Boxes are referred to by their
// row-major index.  watchers[i] lists the boxes whose hook contains box i
// (same row strictly left, or same column strictly above); those are exactly
// the thetas that drop when i is erased, and the boxes that can block i's
// erasability.
struct Engine {
  const Diagram& shape;
  std::vector<int> theta;
  std::vector<char> present;
  std::vector<std::vector<int>> watchers;
  int alive = 0;

  explicit Engine(const TypeFilling& t)
      : shape(t.shape()),
        theta(t.theta()),
        present(t.shape().size(), 1),
        watchers(t.shape().size()),
        alive(static_cast<int>(t.shape().size())) {
    const auto& bs = shape.boxes();
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j) {
        if (i == j) continue;
        bool row_left = bs[j].row == bs[i].row && bs[j].col < bs[i].col;
        bool col_above = bs[j].col == bs[i].col && bs[j].row < bs[i].row;
        if (row_left || col_above) watchers[i].push_back(static_cast<int>(j));
      }
  }

  bool erasable(std::size_t i) const {
    if (!present[i] || theta[i] != 0) return false;
    for (int j : watchers[i])
      if (present[static_cast<std::size_t>(j)] && theta[static_cast<std::size_t>(j)] == 0)
        return false;
    return true;
  }

  void erase(std::size_t i) {
    present[i] = 0;
    --alive;
    for (int j : watchers[i])
      if (present[static_cast<std::size_t>(j)]) --theta[static_cast<std::size_t>(j)];
  }

  // Exact inverse of erase, valid when the present-set matches the state
  // right after that erase (LIFO discipline).
  void restore(std::size_t i) {
    for (int j : watchers[i])
      if (present[static_cast<std::size_t>(j)]) ++theta[static_cast<std::size_t>(j)];
    present[i] = 1;
    ++alive;
  }

  bool keyable() const { return shape.size() <= 64; }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < present.size(); ++i)
      if (present[i]) k |= std::uint64_t{1} << i;
    return k;
  }
};

}  // namespace tabtype::detail
