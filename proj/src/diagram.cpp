#include "tabtype/diagram.hpp"

#include <algorithm>
#include <string>

#include "tabtype/error.hpp"

namespace tabtype {

static std::string box_str(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

Diagram::Diagram(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  for (const Box& b : boxes_)
    if (b.row < 1 || b.col < 1) throw error("malformed-input", "box " + box_str(b));
  std::sort(boxes_.begin(), boxes_.end());
  auto dup = std::adjacent_find(boxes_.begin(), boxes_.end());
  if (dup != boxes_.end()) throw error("duplicate-box", box_str(*dup));
}

bool Diagram::contains(const Box& b) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

std::size_t Diagram::index_of(const Box& b) const {
  auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
  if (it == boxes_.end() || *it != b) throw error("box-not-in-diagram", box_str(b));
  return static_cast<std::size_t>(it - boxes_.begin());
}

int Diagram::max_row() const {
  int r = 0;
  for (const Box& b : boxes_) r = std::max(r, b.row);
  return r;
}

int Diagram::max_col() const {
  int c = 0;
  for (const Box& b : boxes_) c = std::max(c, b.col);
  return c;
}

std::vector<Box> Diagram::row_boxes(int row) const {
  std::vector<Box> out;
  for (const Box& b : boxes_)
    if (b.row == row) out.push_back(b);
  return out;  // already col-sorted by row-major order
}

std::vector<Box> Diagram::col_boxes(int col) const {
  std::vector<Box> out;
  for (const Box& b : boxes_)
    if (b.col == col) out.push_back(b);
  return out;
}

std::vector<int> Diagram::row_lengths() const {
  std::vector<int> out(static_cast<std::size_t>(max_row()), 0);
  for (const Box& b : boxes_) ++out[static_cast<std::size_t>(b.row - 1)];
  return out;
}

std::vector<int> Diagram::col_lengths() const {
  std::vector<int> out(static_cast<std::size_t>(max_col()), 0);
  for (const Box& b : boxes_) ++out[static_cast<std::size_t>(b.col - 1)];
  return out;
}

Diagram Diagram::translated(int drow, int dcol) const {
  std::vector<Box> out;
  out.reserve(boxes_.size());
  for (const Box& b : boxes_) out.push_back({b.row + drow, b.col + dcol});
  return Diagram(std::move(out));
}

HookCells hook_cells(const Diagram& d, const Box& b) {
  d.index_of(b);  // throws box-not-in-diagram
  HookCells out;
  for (const Box& x : d.boxes()) {
    if (x.row == b.row && x.col > b.col) out.arm.push_back(x);
    if (x.col == b.col && x.row >= b.row) out.leg.push_back(x);
  }
  out.hook = out.arm;
  out.hook.insert(out.hook.end(), out.leg.begin(), out.leg.end());
  std::sort(out.hook.begin(), out.hook.end());
  return out;
}

int hook_length(const Diagram& d, const Box& b) {
  return static_cast<int>(hook_cells(d, b).hook.size());
}

std::vector<Diagram> connected_components(const Diagram& d) {
  const auto& bs = d.boxes();
  std::vector<int> comp(bs.size(), -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (comp[i] >= 0) continue;
    // BFS from i over 4-adjacent boxes
    std::vector<std::size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      const Box& b = bs[j];
      for (const Box& nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col},
                            Box{b.row, b.col - 1}, Box{b.row, b.col + 1}}) {
        if (nb.row < 1 || nb.col < 1 || !d.contains(nb)) continue;
        std::size_t k = d.index_of(nb);
        if (comp[k] < 0) {
          comp[k] = ncomp;
          stack.push_back(k);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<Box>> grouped(static_cast<std::size_t>(ncomp));
  for (std::size_t i = 0; i < bs.size(); ++i)
    grouped[static_cast<std::size_t>(comp[i])].push_back(bs[i]);
  // components come out ordered by their smallest (row-major) box because
  // seeds are visited in row-major order
  std::vector<Diagram> out;
  out.reserve(grouped.size());
  for (auto& g : grouped) out.emplace_back(std::move(g));
  return out;
}

}  // namespace tabtype
