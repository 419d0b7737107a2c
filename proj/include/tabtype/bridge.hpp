#pragma once

#include <optional>
#include <vector>

#include "tabtype/diagram.hpp"
#include "tabtype/numbers.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"

namespace tabtype {

struct StaircaseEmbedding {
  int k = 0;    // staircase size is k+1
  Box anchor;   // the corner of lambda achieving k, smallest row on ties
};

// k = max over corners (a,b) of lambda of lambda_a + lambda'_b - 1; lambda
// placed top-left fits in the staircase of k+1 with the anchor touching the
// boundary row+col == k+1.  Throws "empty-partition".
StaircaseEmbedding embed_in_staircase(const Partition& lambda);

// The falling construction: anchor boxes weakly north-west of a boundary
// corner, let the remaining components fall straight down (one step at a
// time, farthest first is irrelevant: components move one at a time in order
// of smallest box), repeat until everything is anchored.  The result's pair
// coordinates always form an inversion set; "falling-stuck" otherwise.
Diagram build_s_lambda(const Partition& lambda);

// permutation_from_inversion_set of the pair coordinates of S(lambda);
// vexillary with lambda(sigma)' = lambda.
Permutation sigma_lambda(const Partition& lambda);

// line_exchange(type_of_permutation(sigma_lambda(lambda))).type equals
// balanced_type(Ferrers(lambda)).
bool verify_bridge(const Partition& lambda);

struct Block {
  int first_row = 0;
  int last_row = 0;
  int part = 0;  // the common part length
  Box corner;    // (first_row, part)

  friend bool operator==(const Block&, const Block&) = default;
};

// Maximal runs of equal parts, top to bottom.
std::vector<Block> blocks(const Partition& lambda);

// |{balanced tableaux of lambda with entry 1 at c}| by filtered enumeration.
// Throws "box-outside-shape" when c is not in Ferrers(lambda).
BigInt count_balanced_with_one_at(const Partition& lambda, const Box& c);

using PartialFill = std::vector<Box>;

// |N_{sigma,U}|: tableaux of the full exchange of sigma's type whose first k
// erased boxes are exactly U in order.  Throws "not-vexillary" /
// "box-outside-shape".
BigInt partial_fill_count(const Permutation& sigma, const PartialFill& u);

// Pull U back through the exchange mapping to inversion pairs of sigma; when
// every prefix of that pair sequence is an inversion set (of tau_1, ...,
// tau_k, each a subset of Inv(sigma)), the count equals
// count_reduced_words(tau_k^{-1} * sigma) and that permutation is returned;
// otherwise absent (and the count is 0).
std::optional<Permutation> partial_fill_witness(const Permutation& sigma, const PartialFill& u);

// When U's removal leaves a remainder whose row-stacking and column-stacking
// agree on one partition mu AND U is actually reachable as a prefix, the
// count is hook_length_formula(mu) and mu is returned; otherwise absent.
std::optional<Partition> nice_partial(const Permutation& sigma, const PartialFill& u);

}  // namespace tabtype
