#include "tabtype/exchange.hpp"

#include <algorithm>
#include <string>

#include "tabtype/error.hpp"

namespace tabtype {

BoxMapping BoxMapping::identity_on(const Diagram& d) {
  std::map<Box, Box> m;
  for (const Box& b : d.boxes()) m[b] = b;
  return BoxMapping(std::move(m));
}

Box BoxMapping::apply(const Box& b) const {
  auto it = map_.find(b);
  if (it == map_.end())
    throw error("box-not-in-diagram",
                "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ") unmapped");
  return it->second;
}

Box BoxMapping::preimage(const Box& b) const {
  for (const auto& [from, to] : map_)
    if (to == b) return from;
  throw error("box-not-in-diagram",
              "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ") not an image");
}

BoxMapping BoxMapping::then(const BoxMapping& next) const {
  std::map<Box, Box> m;
  for (const auto& [from, mid] : map_) m[from] = next.apply(mid);
  return BoxMapping(std::move(m));
}

namespace {

// Row a of the shape, as (col, theta) pairs.
std::vector<std::pair<int, int>> row_thetas(const TypeFilling& t, int a) {
  std::vector<std::pair<int, int>> out;
  const auto& bs = t.shape().boxes();
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (bs[i].row == a) out.emplace_back(bs[i].col, t.theta()[i]);
  return out;
}

std::vector<std::pair<int, int>> col_thetas(const TypeFilling& t, int b) {
  std::vector<std::pair<int, int>> out;
  const auto& bs = t.shape().boxes();
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (bs[i].col == b) out.emplace_back(bs[i].row, t.theta()[i]);
  return out;
}

// Rebuild a TypeFilling from (box, theta) pairs.
TypeFilling from_pairs(std::vector<std::pair<Box, int>> cells) {
  std::sort(cells.begin(), cells.end());
  std::vector<Box> boxes;
  std::vector<int> theta;
  boxes.reserve(cells.size());
  theta.reserve(cells.size());
  for (auto& [b, th] : cells) {
    boxes.push_back(b);
    theta.push_back(th);
  }
  return TypeFilling(Diagram(std::move(boxes)), std::move(theta));
}

// Exchange two parallel lines (rows when row_mode, else columns): `moving`
// trades places with `other` and its thetas change by delta; the other line
// moves unchanged.  swap_down(a) pairs a with a+1 and delta=-1, swap_up(a)
// pairs a with a-1 and delta=+1 (column analogues likewise).
ExchangeResult swap_lines(const TypeFilling& t, bool row_mode, int moving, int other,
                          int delta) {
  std::vector<std::pair<Box, int>> cells;
  std::map<Box, Box> to_origin;
  const auto& bs = t.shape().boxes();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    Box b = bs[i];
    int line = row_mode ? b.row : b.col;
    int th = t.theta()[i];
    Box dest = b;
    if (line == moving) {
      (row_mode ? dest.row : dest.col) = other;
      th += delta;
    } else if (line == other) {
      (row_mode ? dest.row : dest.col) = moving;
    }
    cells.emplace_back(dest, th);
    to_origin[dest] = b;
  }
  ExchangeResult out{from_pairs(std::move(cells)), BoxMapping(std::move(to_origin)), {}};
  return out;
}

}  // namespace

bool is_dominant_row(const TypeFilling& t, int a) {
  auto row = row_thetas(t, a);
  if (row.empty()) return false;
  for (const auto& [col, th] : row) {
    if (!t.shape().contains({a + 1, col})) return false;
    if (th <= t.theta_at({a + 1, col})) return false;
  }
  return true;
}

bool is_dominant_col(const TypeFilling& t, int b) {
  auto col = col_thetas(t, b);
  if (col.empty()) return false;
  for (const auto& [row, th] : col) {
    if (!t.shape().contains({row, b + 1})) return false;
    if (th <= t.theta_at({row, b + 1})) return false;
  }
  return true;
}

bool is_dethroned_row(const TypeFilling& t, int a) {
  if (a < 2) return false;
  auto row = row_thetas(t, a);
  if (row.empty()) return false;
  for (const auto& [col, th] : row) {
    if (!t.shape().contains({a - 1, col})) return false;
    if (t.theta_at({a - 1, col}) > th) return false;
  }
  return true;
}

bool is_dethroned_col(const TypeFilling& t, int b) {
  if (b < 2) return false;
  auto col = col_thetas(t, b);
  if (col.empty()) return false;
  for (const auto& [row, th] : col) {
    if (!t.shape().contains({row, b - 1})) return false;
    if (t.theta_at({row, b - 1}) > th) return false;
  }
  return true;
}

ExchangeResult swap_down(const TypeFilling& t, int a) {
  if (!is_dominant_row(t, a)) throw error("row-not-dominant", "row " + std::to_string(a));
  ExchangeResult r = swap_lines(t, true, a, a + 1, -1);
  r.swaps = {{SwapStep::Kind::RowDown, a}};
  return r;
}

ExchangeResult swap_right(const TypeFilling& t, int b) {
  if (!is_dominant_col(t, b)) throw error("col-not-dominant", "col " + std::to_string(b));
  ExchangeResult r = swap_lines(t, false, b, b + 1, -1);
  r.swaps = {{SwapStep::Kind::ColRight, b}};
  return r;
}

ExchangeResult swap_up(const TypeFilling& t, int a) {
  if (!is_dethroned_row(t, a)) throw error("row-not-dethroned", "row " + std::to_string(a));
  ExchangeResult r = swap_lines(t, true, a, a - 1, +1);
  r.swaps = {{SwapStep::Kind::RowUp, a}};
  return r;
}

ExchangeResult swap_left(const TypeFilling& t, int b) {
  if (!is_dethroned_col(t, b)) throw error("col-not-dethroned", "col " + std::to_string(b));
  ExchangeResult r = swap_lines(t, false, b, b - 1, +1);
  r.swaps = {{SwapStep::Kind::ColLeft, b}};
  return r;
}

namespace {

Tableau tableau_swap_lines(const Tableau& t, int a, bool row_mode) {
  std::vector<std::pair<Box, int>> cells;
  const auto& bs = t.shape().boxes();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    Box dest = bs[i];
    int& line = row_mode ? dest.row : dest.col;
    if (line == a)
      line = a + 1;
    else if (line == a + 1)
      line = a;
    cells.emplace_back(dest, t.entries()[i]);
  }
  std::sort(cells.begin(), cells.end());
  std::vector<Box> boxes;
  std::vector<int> entries;
  for (auto& [b, e] : cells) {
    boxes.push_back(b);
    entries.push_back(e);
  }
  return Tableau(Diagram(std::move(boxes)), std::move(entries));
}

}  // namespace

Tableau tableau_swap_rows(const Tableau& t, int a) { return tableau_swap_lines(t, a, true); }
Tableau tableau_swap_cols(const Tableau& t, int b) { return tableau_swap_lines(t, b, false); }

namespace {

ExchangeResult compact_lines(const TypeFilling& t, bool row_mode) {
  std::vector<int> lines;
  for (const Box& b : t.shape().boxes()) lines.push_back(row_mode ? b.row : b.col);
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::vector<std::pair<Box, int>> cells;
  std::map<Box, Box> to_origin;
  const auto& bs = t.shape().boxes();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    Box dest = bs[i];
    int& line = row_mode ? dest.row : dest.col;
    line = static_cast<int>(std::lower_bound(lines.begin(), lines.end(), line) - lines.begin()) + 1;
    cells.emplace_back(dest, t.theta()[i]);
    to_origin[dest] = bs[i];
  }
  return {from_pairs(std::move(cells)), BoxMapping(std::move(to_origin)), {}};
}

ExchangeResult exchange_loop(const TypeFilling& t, bool row_mode) {
  ExchangeResult acc = compact_lines(t, row_mode);
  int max_line = row_mode ? acc.type.shape().max_row() : acc.type.shape().max_col();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < max_line; ++i) {
      bool dominant = row_mode ? is_dominant_row(acc.type, i) : is_dominant_col(acc.type, i);
      if (!dominant) continue;
      ExchangeResult step = row_mode ? swap_down(acc.type, i) : swap_right(acc.type, i);
      acc.type = step.type;
      acc.to_origin = step.to_origin.then(acc.to_origin);
      acc.swaps.push_back(step.swaps.front());
      moved = true;
      break;  // restart the scan from line 1
    }
  }
  return acc;
}

}  // namespace

ExchangeResult erase_empty_rows(const TypeFilling& t) { return compact_lines(t, true); }
ExchangeResult erase_empty_cols(const TypeFilling& t) { return compact_lines(t, false); }

ExchangeResult line_exchange(const TypeFilling& t) { return exchange_loop(t, true); }
ExchangeResult column_exchange(const TypeFilling& t) { return exchange_loop(t, false); }

ExchangeResult full_exchange(const TypeFilling& t) {
  ExchangeResult lines = line_exchange(t);
  ExchangeResult cols = column_exchange(lines.type);
  ExchangeResult out{cols.type, cols.to_origin.then(lines.to_origin), lines.swaps};
  out.swaps.insert(out.swaps.end(), cols.swaps.begin(), cols.swaps.end());
  return out;
}

TypeFilling reverse_line_exchange(const TypeFilling& t) {
  TypeFilling cur = compact_lines(t, true).type;
  int r = cur.shape().max_row();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = r; i >= 2; --i) {
      if (!is_dethroned_row(cur, i)) continue;
      cur = swap_up(cur, i).type;
      moved = true;
      break;  // restart the scan from row r
    }
  }
  return cur;
}

Permutation bar_normalize(const Permutation& sigma) {
  int p = 0, q = 0;
  for (int i = 1; i <= sigma.n(); ++i)
    if (sigma.apply(i) != i) {
      if (p == 0) p = i;
      q = i;
    }
  if (p == 0) return Permutation({1});
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(q - p + 1));
  for (int i = p; i <= q; ++i) w.push_back(sigma.apply(i) - (p - 1));
  return Permutation(std::move(w));
}

bool equivalent_v(const Permutation& sigma, const Permutation& omega) {
  return bar_normalize(sigma) == bar_normalize(omega);
}

Tableau transport_tableau(const Tableau& t, const BoxMapping& to_origin) {
  std::vector<std::pair<Box, int>> cells;
  const auto& bs = t.shape().boxes();
  for (std::size_t i = 0; i < bs.size(); ++i)
    cells.emplace_back(to_origin.apply(bs[i]), t.entries()[i]);
  std::sort(cells.begin(), cells.end());
  std::vector<Box> boxes;
  std::vector<int> entries;
  for (auto& [b, e] : cells) {
    boxes.push_back(b);
    entries.push_back(e);
  }
  return Tableau(Diagram(std::move(boxes)), std::move(entries));
}

}  // namespace tabtype
