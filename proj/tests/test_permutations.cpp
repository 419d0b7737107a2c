#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tabtype/filling.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"

using namespace tabtype;

TEST_CASE("permutation basics") {
  Permutation p({3, 1, 2});
  CHECK(p.apply(1) == 3);
  CHECK(p.inverse() == Permutation({2, 3, 1}));
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.length() == 2);
  CHECK(Permutation::identity(4).length() == 0);
  CHECK(throws_code([] { Permutation({1, 1}); }, "invalid-permutation"));
  CHECK(throws_code([] { Permutation({2, 3}); }, "invalid-permutation"));
  CHECK(throws_code([] { Permutation(std::vector<int>{}); }, "invalid-permutation"));
}

TEST_CASE("inversion sets") {
  CHECK(inversion_set(Permutation({2, 1})).pairs ==
        std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(inversion_set(Permutation({3, 2, 1})).pairs ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(inversion_set(Permutation::identity(3)).pairs.empty());
}

TEST_CASE("inversion-set predicate and reconstruction") {
  InversionSet full{3, {{1, 2}, {1, 3}, {2, 3}}};
  CHECK(is_inversion_set(full));
  CHECK(permutation_from_inversion_set(full) == Permutation({3, 2, 1}));

  InversionSet gap{3, {{1, 3}}};
  CHECK_FALSE(is_inversion_set(gap));
  CHECK(throws_code([&] { permutation_from_inversion_set(gap); }, "not-an-inversion-set"));

  InversionSet empty{3, {}};
  CHECK(is_inversion_set(empty));
  CHECK(permutation_from_inversion_set(empty).is_identity());

  // Exhaustive: subsets of pairs for n <= 4 pass the predicate exactly when
  // they arise from a permutation.
  for (int n = 2; n <= 4; ++n) {
    std::set<std::vector<std::pair<int, int>>> genuine;
    for (const Permutation& p : all_permutations(n)) genuine.insert(inversion_set(p).pairs);

    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      InversionSet a{n, {}};
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1u << i)) a.pairs.push_back(pairs[i]);
      CHECK(is_inversion_set(a) == (genuine.count(a.pairs) > 0));
      if (is_inversion_set(a))
        CHECK(inversion_set(permutation_from_inversion_set(a)).pairs == a.pairs);
    }
  }
}

TEST_CASE("reduced word counting and enumeration against brute force") {
  CHECK(count_reduced_words(Permutation({3, 2, 1})) == 2);
  CHECK(count_reduced_words(Permutation({2, 1, 4, 3})) == 2);
  CHECK(count_reduced_words(Permutation::identity(3)) == 1);
  CHECK(enumerate_reduced_words(Permutation({3, 2, 1})) ==
        std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  CHECK(enumerate_reduced_words(Permutation::identity(2)) ==
        std::vector<std::vector<int>>{{}});

  for (const Permutation& p : all_permutations(4)) {
    std::vector<std::vector<int>> brute = oracles::brute_reduced_words(p.one_line());
    std::vector<std::vector<int>> mine = enumerate_reduced_words(p);
    std::sort(mine.begin(), mine.end());
    CHECK(mine == brute);
    CHECK(count_reduced_words(p) == BigInt(brute.size()));
    for (const auto& w : brute) {
      CHECK(is_reduced_word(p.n(), w));
      CHECK(evaluate_word(p.n(), w) == p);
    }
  }

  // Longest elements, frozen: 16 words in S_4, 768 in S_5.
  CHECK(count_reduced_words(Permutation({4, 3, 2, 1})) == 16);
  CHECK(count_reduced_words(Permutation({5, 4, 3, 2, 1})) == 768);
}

TEST_CASE("word evaluation validates letters") {
  CHECK(evaluate_word(3, {1, 2, 1}) == Permutation({3, 2, 1}));
  CHECK(throws_code([] { evaluate_word(3, {3}); }, "invalid-word"));
  CHECK_FALSE(is_reduced_word(3, {1, 1, 2, 2, 1, 1}));  // cancels to the identity
  CHECK(is_reduced_word(3, {1, 2}));                    // reduced, but not for [3,2,1]
  CHECK(evaluate_word(3, {1, 2}) != Permutation({3, 2, 1}));
}

TEST_CASE("staircase type") {
  TypeFilling a3 = staircase_type(3);
  CHECK(a3.shape() == Partition({2, 1}).ferrers());
  CHECK(a3.theta_at({1, 1}) == 1);
  CHECK(a3.theta_at({1, 2}) == 0);
  CHECK(a3.theta_at({2, 1}) == 0);

  TypeFilling a2 = staircase_type(2);
  CHECK(a2.shape().size() == 1);
  CHECK(a2.theta_at({1, 1}) == 0);
  CHECK(throws_code([] { staircase_type(1); }, "n-too-small"));

  // theta = (hook-1)/2 at every box of the staircase.
  for (int n = 2; n <= 6; ++n) {
    TypeFilling a = staircase_type(n);
    for (const Box& b : a.shape().boxes())
      CHECK(2 * a.theta_at(b) + 1 == hook_length(a.shape(), b));
  }

  // Pair embedding round trip covers the full staircase.
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      Box box = box_for_pair(a, b, 6);
      CHECK(pair_for_box(box, 6) == std::make_pair(a, b));
      CHECK(staircase_type(6).shape().contains(box));
    }
}

TEST_CASE("type of a permutation") {
  TypeFilling t = type_of_permutation(Permutation({3, 2, 1}));
  CHECK(t.shape() == Partition({2, 1}).ferrers());
  CHECK(t.theta_at({1, 1}) == 1);
  CHECK(t.theta_at({1, 2}) == 0);
  CHECK(t.theta_at({2, 1}) == 0);
  CHECK(count_tableaux(t) == 2);

  CHECK(type_of_permutation(Permutation::identity(4)).shape().empty());

  for (const Permutation& p : all_permutations(4))
    CHECK(count_tableaux(type_of_permutation(p)) == count_reduced_words(p));
}

TEST_CASE("tableau-word correspondence on the pinned example") {
  Permutation sigma({3, 2, 1});
  Tableau t121 = make_tableau({{{2, 1}, 1}, {{1, 1}, 2}, {{1, 2}, 3}});
  Tableau t212 = make_tableau({{{1, 2}, 1}, {{1, 1}, 2}, {{2, 1}, 3}});
  CHECK(tableau_to_reduced_word(sigma, t121) == std::vector<int>{1, 2, 1});
  CHECK(tableau_to_reduced_word(sigma, t212) == std::vector<int>{2, 1, 2});
  CHECK(reduced_word_to_tableau(sigma, {1, 2, 1}) == t121);
  CHECK(reduced_word_to_tableau(sigma, {2, 1, 2}) == t212);

  Permutation s2({2, 1});
  Tableau only = enumerate_tableaux(type_of_permutation(s2))[0];
  CHECK(tableau_to_reduced_word(s2, only) == std::vector<int>{1});

  CHECK(throws_code([&] { tableau_to_reduced_word(sigma, make_tableau({{{1, 1}, 1}})); },
                    "invalid-tableau-for-type"));
  CHECK(throws_code([&] { reduced_word_to_tableau(sigma, {1, 2}); }, "invalid-word"));
  CHECK(throws_code([&] { reduced_word_to_tableau(sigma, {1, 2, 2}); }, "invalid-word"));
}

TEST_CASE("tableau-word correspondence is a bijection on S_4") {
  for (const Permutation& sigma : all_permutations(4)) {
    std::vector<Tableau> tabs = enumerate_tableaux(type_of_permutation(sigma));
    std::set<std::vector<int>> words;
    for (const Tableau& t : tabs) {
      std::vector<int> w = tableau_to_reduced_word(sigma, t);
      CHECK(is_reduced_word(sigma.n(), w));
      CHECK(evaluate_word(sigma.n(), w) == sigma);
      CHECK(reduced_word_to_tableau(sigma, w) == t);
      words.insert(w);
    }
    CHECK(words.size() == tabs.size());
    std::vector<std::vector<int>> all = enumerate_reduced_words(sigma);
    CHECK(words == std::set<std::vector<int>>(all.begin(), all.end()));
  }
}

TEST_CASE("vexillary data") {
  VexillaryData v321 = vexillary_data(Permutation({3, 2, 1}));
  CHECK(v321.d == std::vector<int>{2, 1, 0});
  CHECK(v321.g == std::vector<int>{0, 1, 2});
  CHECK(v321.mu == Partition({2, 1}));
  CHECK(v321.lambda == Partition({2, 1}));
  CHECK(v321.is_vexillary);

  VexillaryData v2143 = vexillary_data(Permutation({2, 1, 4, 3}));
  CHECK(v2143.lambda == Partition({1, 1}));
  CHECK(v2143.mu == Partition({1, 1}));
  CHECK_FALSE(v2143.is_vexillary);

  CHECK(is_vexillary(Permutation({4, 8, 9, 5, 7, 6, 1, 3, 2})));
  CHECK(is_vexillary(Permutation::identity(3)));
}

TEST_CASE("Stanley identity for vexillary permutations") {
  for (int n = 2; n <= 5; ++n)
    for (const Permutation& sigma : all_permutations(n))
      if (is_vexillary(sigma))
        CHECK(count_reduced_words(sigma) == shape_lambda(sigma).hook_length_formula());
}

TEST_CASE("stacking characterizes vexillary") {
  for (int n = 2; n <= 5; ++n)
    for (const Permutation& sigma : all_permutations(n)) {
      Diagram sh = type_of_permutation(sigma).shape();
      CHECK((stack_xy(sh) == stack_yx(sh)) == is_vexillary(sigma));
    }
}

TEST_CASE("rothe diagram") {
  CHECK(rothe_diagram(Permutation::identity(3)).empty());
  CHECK(rothe_diagram(Permutation({2, 1})).boxes() == std::vector<Box>{{1, 1}});
  Permutation p({5, 3, 2, 1, 4});
  CHECK(rothe_diagram(p).size() == 7);
  CHECK(p.length() == 7);
  // The Rothe diagram always has exactly length-many boxes.
  for (const Permutation& q : all_permutations(4))
    CHECK(rothe_diagram(q).size() == static_cast<std::size_t>(q.length()));
}

TEST_CASE("all_permutations is lexicographic and complete") {
  std::vector<Permutation> s3 = all_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Permutation::identity(3));
  CHECK(s3.back() == Permutation({3, 2, 1}));
  CHECK(all_permutations(5).size() == 120);
}
