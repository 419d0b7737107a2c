#pragma once

#include <map>
#include <vector>

#include "tabtype/permutation.hpp"
#include "tabtype/tableau.hpp"
#include "tabtype/type_filling.hpp"

namespace tabtype {

// Bijection between the boxes of two shapes, stored as an explicit map.
class BoxMapping {
 public:
  BoxMapping() = default;
  explicit BoxMapping(std::map<Box, Box> forward) : map_(std::move(forward)) {}

  static BoxMapping identity_on(const Diagram& d);

  Box apply(const Box& b) const;     // throws "box-not-in-diagram" when unmapped
  Box preimage(const Box& b) const;  // inverse lookup, same error

  // Composition: first *this, then next ((this ∘ then-applied-after) — i.e.
  // result.apply(b) == next.apply(this->apply(b)).
  BoxMapping then(const BoxMapping& next) const;

  const std::map<Box, Box>& forward() const { return map_; }

 private:
  std::map<Box, Box> map_;
};

struct SwapStep {
  enum class Kind { RowDown, RowUp, ColRight, ColLeft };
  Kind kind;
  int index;  // the row/column the swap was applied at

  friend bool operator==(const SwapStep&, const SwapStep&) = default;
};

struct ExchangeResult {
  TypeFilling type;
  // result box -> box of the ORIGINAL shape it came from.
  BoxMapping to_origin;
  std::vector<SwapStep> swaps;
};

// Row a is dominant when it is nonempty and every box (a,y) has (a+1,y)
// present with theta(a,y) > theta(a+1,y).  Row a is dethroned when it is
// nonempty, a >= 2, and every (a,y) has (a-1,y) present with
// theta(a-1,y) <= theta(a,y).  Column analogues transpose the roles.
bool is_dominant_row(const TypeFilling& t, int a);
bool is_dominant_col(const TypeFilling& t, int b);
bool is_dethroned_row(const TypeFilling& t, int a);
bool is_dethroned_col(const TypeFilling& t, int b);

// Decrement theta across row a by one, then exchange rows a and a+1.
// Throws "row-not-dominant" when the precondition fails.
ExchangeResult swap_down(const TypeFilling& t, int a);
// Column analogue (decrement column b, exchange columns b and b+1);
// throws "col-not-dominant".
ExchangeResult swap_right(const TypeFilling& t, int b);
// Inverse of swap_down at a-1: row a moves up (theta incremented), row a-1
// moves down unchanged.  Throws "row-not-dethroned".
ExchangeResult swap_up(const TypeFilling& t, int a);
ExchangeResult swap_left(const TypeFilling& t, int b);  // "col-not-dethroned"

// Move the entries of rows/cols a and a+1 across the swapped shape.
Tableau tableau_swap_rows(const Tableau& t, int a);
Tableau tableau_swap_cols(const Tableau& t, int b);

// Drop empty rows (renumbering the remaining ones 1..r in order); the
// mapping records where each box came from.
ExchangeResult erase_empty_rows(const TypeFilling& t);
ExchangeResult erase_empty_cols(const TypeFilling& t);

// Erase empty rows, then repeatedly scan rows 1,2,... and swap_down at the
// first dominant row, restarting the scan after each swap.  Terminates with
// a fixed point of itself.
ExchangeResult line_exchange(const TypeFilling& t);
ExchangeResult column_exchange(const TypeFilling& t);
// column_exchange(line_exchange(t)), mappings composed.
ExchangeResult full_exchange(const TypeFilling& t);

// Erase empty rows, then scan rows r, r-1, ... and swap_up at the first
// dethroned row, restarting at r after each swap.
TypeFilling reverse_line_exchange(const TypeFilling& t);

// Strip leading/trailing fixed points: with p the least moved index and q
// the greatest, returns [sigma(p)-(p-1), ..., sigma(q)-(p-1)].  The identity
// normalizes to [1].
Permutation bar_normalize(const Permutation& sigma);
bool equivalent_v(const Permutation& sigma, const Permutation& omega);

// Pull a tableau on result's shape back to the original shape of an
// exchange (entry of result box b lands on to_origin.apply(b)).
Tableau transport_tableau(const Tableau& t, const BoxMapping& to_origin);

}  // namespace tabtype
