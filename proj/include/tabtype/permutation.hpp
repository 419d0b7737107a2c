#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tabtype/numbers.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/tableau.hpp"
#include "tabtype/type_filling.hpp"

namespace tabtype {

// One-line notation, 1-based: sigma maps i to one_line[i-1].
class Permutation {
 public:
  Permutation() = default;
  // Throws "invalid-permutation" unless one_line is a permutation of 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int n() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& one_line() const { return word_; }
  int apply(int i) const;  // sigma(i), 1-based

  Permutation inverse() const;
  // Composition: (p*q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  // sigma * s_i: swaps the values in positions i, i+1 (1 <= i <= n-1).
  Permutation right_multiply_adjacent(int i) const;

  bool is_identity() const;
  int length() const;  // number of inversions

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

struct InversionSet {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // (a,b), a<b, sorted lexicographically

  friend bool operator==(const InversionSet&, const InversionSet&) = default;
};

// Pairs a<b whose values appear out of order in sigma: position of a after
// position of b.
InversionSet inversion_set(const Permutation& sigma);

// Whether pairs is Inv(sigma) for some sigma in S_n.
bool is_inversion_set(const InversionSet& s);
// The unique such sigma; throws "not-an-inversion-set" when none exists.
Permutation permutation_from_inversion_set(const InversionSet& s);

// ---- reduced words --------------------------------------------------------

BigInt count_reduced_words(const Permutation& sigma);
// All reduced words in lexicographic order; throws "limit-exceeded" past limit.
std::vector<std::vector<int>> enumerate_reduced_words(const Permutation& sigma,
                                                      std::size_t limit = 1u << 20);
// Product s_{w[0]} s_{w[1]} ... in S_n.  Throws "invalid-word" on a letter
// outside [1, n-1].
Permutation evaluate_word(int n, const std::vector<int>& word);
bool is_reduced_word(int n, const std::vector<int>& word);

// ---- the pair <-> box embedding -------------------------------------------

// Pair (a,b), 1<=a<b<=n, sits at box (n+1-b, a).
Box box_for_pair(int a, int b, int n);
// Inverse; any box with 1<=col, col+row<=n.  Throws "box-outside-shape" else.
std::pair<int, int> pair_for_box(const Box& box, int n);

// The type on the full staircase where box (r,c) carries n-r-c.
// Throws "n-too-small" when n < 2.
TypeFilling staircase_type(int n);

// Shape = embedded Inv(sigma), theta(box of (a,b)) = b-a-1.
TypeFilling type_of_permutation(const Permutation& sigma);

// Tableaux of type_of_permutation(sigma) <-> reduced words of sigma.
// The pair sets {pairs of boxes with entries <= i} form a chain of inversion
// sets id -> ... -> sigma, each step adding one inversion; letter i is the j
// with sigma_i = sigma_{i-1} * s_j.  Throws "invalid-tableau-for-type" /
// "invalid-word" when the input is not in the promised set.
std::vector<int> tableau_to_reduced_word(const Permutation& sigma, const Tableau& t);
Tableau reduced_word_to_tableau(const Permutation& sigma, const std::vector<int>& word);

// ---- vexillary -------------------------------------------------------------

struct VexillaryData {
  std::vector<int> d;  // d_i = #{j > i : sigma(j) < sigma(i)}
  std::vector<int> g;  // g_i = #{j < i : sigma(j) > sigma(i)}
  Partition mu;        // d sorted decreasingly, zeros dropped
  Partition lambda;    // g sorted decreasingly, zeros dropped
  bool is_vexillary = false;  // lambda == mu'
};

VexillaryData vexillary_data(const Permutation& sigma);
bool is_vexillary(const Permutation& sigma);
// lambda(sigma); defined for every sigma, not only vexillary ones.
Partition shape_lambda(const Permutation& sigma);

// Rothe diagram {(a, sigma(b)) : a < b, sigma(a) > sigma(b)}.
Diagram rothe_diagram(const Permutation& sigma);

// All permutations of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace tabtype
