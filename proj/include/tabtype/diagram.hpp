#pragma once

#include <cstddef>
#include <vector>

#include "tabtype/box.hpp"

namespace tabtype {

// Finite set of boxes, kept sorted row-major and duplicate-free.
class Diagram {
 public:
  Diagram() = default;
  // Throws "malformed-input" on coordinates < 1, "duplicate-box" on repeats.
  explicit Diagram(std::vector<Box> boxes);

  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }

  bool contains(const Box& b) const;
  // Position of b in row-major order; throws "box-not-in-diagram" if absent.
  std::size_t index_of(const Box& b) const;

  int max_row() const;  // 0 when empty
  int max_col() const;

  // Boxes of one row/column, in increasing col/row order.
  std::vector<Box> row_boxes(int row) const;
  std::vector<Box> col_boxes(int col) const;

  // Number of boxes in each row 1..max_row (resp. col 1..max_col).
  std::vector<int> row_lengths() const;
  std::vector<int> col_lengths() const;

  Diagram translated(int drow, int dcol) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Box> boxes_;
};

struct HookCells {
  std::vector<Box> arm;   // same row, strictly right, in the diagram
  std::vector<Box> leg;   // same col, the box itself and strictly below
  std::vector<Box> hook;  // arm + leg, row-major sorted
};

// Throws "box-not-in-diagram" when b is not in d.
HookCells hook_cells(const Diagram& d, const Box& b);

// Hook length |arm| + |leg| (the box itself counts via the leg).
int hook_length(const Diagram& d, const Box& b);

// Connected components under 4-adjacency, ordered by smallest box.
std::vector<Diagram> connected_components(const Diagram& d);

}  // namespace tabtype
