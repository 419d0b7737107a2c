#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "tabtype/exchange.hpp"
#include "tabtype/filling.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"
#include "tabtype/schur.hpp"

using namespace tabtype;

namespace {

Polynomial poly(int m, const std::vector<std::pair<std::vector<int>, long long>>& terms) {
  Polynomial p(m);
  for (const auto& [e, c] : terms) p.add_term(e, BigInt(c));
  return p;
}

}  // namespace

TEST_CASE("polynomial container") {
  Polynomial p(2);
  p.add_term({1, 0}, 1);
  p.add_term({1, 0}, 2);
  p.add_term({0, 1}, 3);
  p.add_term({0, 1}, -3);  // cancels away
  CHECK(p.terms().size() == 1);
  CHECK(p.terms().at({1, 0}) == 3);
  CHECK_FALSE(p.is_symmetric());
  p.add_term({0, 1}, 3);
  CHECK(p.is_symmetric());
}

TEST_CASE("column-strict membership") {
  TypeFilling col2 = standard_type(Partition({1, 1}).ferrers());
  CHECK_FALSE(is_sst(col2, LabelledFilling{col2.shape(), {1, 1}}));
  CHECK(is_sst(col2, LabelledFilling{col2.shape(), {1, 2}}));

  TypeFilling row2 = standard_type(Partition({2}).ferrers());
  CHECK(is_sst(row2, LabelledFilling{row2.shape(), {1, 1}}));

  // Entries of a member always pass: its own erase order is label-monotone.
  for (const Permutation& sigma : all_permutations(3)) {
    TypeFilling t = type_of_permutation(sigma);
    for (const Tableau& T : enumerate_tableaux(t))
      CHECK(is_sst(t, LabelledFilling{t.shape(), T.entries()}));
  }

  CHECK(throws_code(
      [&] { is_sst(col2, LabelledFilling{Partition({2}).ferrers(), {1, 1}}); },
      "shape-mismatch"));
}

TEST_CASE("generating polynomials on pinned examples") {
  TypeFilling one = standard_type(Partition({1}).ferrers());
  CHECK(sst_polynomial(one, 2) == poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));

  TypeFilling ex321 = full_exchange(type_of_permutation(Permutation({3, 2, 1}))).type;
  CHECK(sst_polynomial(ex321, 2) == poly(2, {{{2, 1}, 1}, {{1, 2}, 1}}));

  TypeFilling bal21 = balanced_type(Partition({2, 1}).ferrers());
  CHECK(sst_polynomial(bal21, 2) == classical_schur(Partition({2, 1}), 2));
}

TEST_CASE("classical Schur polynomials") {
  CHECK(classical_schur(Partition({1}), 3) ==
        poly(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
  CHECK(classical_schur(Partition({2}), 2) ==
        poly(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  CHECK(classical_schur(Partition({1, 1}), 2) == poly(2, {{{1, 1}, 1}}));
  // Column taller than the variable count: no fillings at all.
  CHECK(classical_schur(Partition({1, 1, 1}), 2).terms().empty());
}

TEST_CASE("the Schur identity for small vexillary permutations") {
  for (int n = 2; n <= 4; ++n)
    for (const Permutation& sigma : all_permutations(n)) {
      if (!is_vexillary(sigma)) continue;
      TypeFilling ex = full_exchange(type_of_permutation(sigma)).type;
      // The exchanged type lives on the conjugate of the code partition, and
      // its column-strict polynomial is the Schur polynomial of that shape.
      Partition mu = shape_lambda(sigma).conjugate();
      for (int m = 2; m <= 3; ++m) {
        Polynomial p = sst_polynomial(ex, m);
        CHECK(p == classical_schur(mu, m));
        CHECK(p.is_symmetric());
      }
    }
}

TEST_CASE("distinct labels recover the tableau count") {
  std::vector<TypeFilling> cases = {
      balanced_type(Partition({2, 2}).ferrers()),
      standard_type(Partition({2, 1}).ferrers()),
      type_of_permutation(Permutation({3, 2, 1})),
  };
  for (const TypeFilling& t : cases) {
    int n = static_cast<int>(t.shape().size());
    Polynomial p = sst_polynomial(t, n);
    BigInt squarefree = 0;
    for (const auto& [exps, coef] : p.terms())
      if (std::all_of(exps.begin(), exps.end(), [](int e) { return e <= 1; }))
        squarefree += coef;
    CHECK(squarefree == count_tableaux(t));
  }
}

TEST_CASE("budget guard") {
  CHECK(throws_code([] { sst_polynomial(balanced_type(Partition({3, 2}).ferrers()), 10, 100); },
                    "budget-exceeded"));
  CHECK(throws_code([] { classical_schur(Partition({4, 3, 2}), 9, 10); }, "budget-exceeded"));
}
