#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "tabtype/bridge.hpp"
#include "tabtype/exchange.hpp"
#include "tabtype/filling.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"

using namespace tabtype;

TEST_CASE("staircase embedding picks the maximal corner value") {
  StaircaseEmbedding big = embed_in_staircase(Partition({8, 7, 7, 7, 3, 3, 1}));
  CHECK(big.k == 10);
  CHECK(big.anchor == Box{4, 7});

  StaircaseEmbedding one = embed_in_staircase(Partition({1}));
  CHECK(one.k == 1);
  CHECK(one.anchor == Box{1, 1});

  StaircaseEmbedding two = embed_in_staircase(Partition({2, 1}));
  CHECK(two.k == 2);
  CHECK(two.anchor == Box{1, 2});  // smallest row among tied corners

  CHECK(throws_code([] { embed_in_staircase(Partition(std::vector<int>{})); }, "empty-partition"));

  // k is the max over all corners, so the embedded shape fits the staircase:
  // every box satisfies row + col <= k + 1.
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      int k = embed_in_staircase(lambda).k;
      Diagram shape = lambda.ferrers();
      for (const Box& b : shape.boxes()) CHECK(b.row + b.col <= k + 1);
    }
}

TEST_CASE("falling construction on pinned shapes") {
  CHECK(build_s_lambda(Partition({1})).boxes() == std::vector<Box>{{1, 1}});
  CHECK(build_s_lambda(Partition({2, 1})) == Partition({2, 1}).ferrers());
  CHECK(build_s_lambda(Partition({2, 2})) == Partition({2, 2}).ferrers());
  CHECK(build_s_lambda(Partition({3, 1})).boxes() ==
        std::vector<Box>{{1, 1}, {1, 2}, {1, 3}, {3, 1}});
}

TEST_CASE("sigma_lambda on pinned shapes") {
  CHECK(sigma_lambda(Partition({1})) == Permutation({2, 1}));
  CHECK(sigma_lambda(Partition({2, 1})) == Permutation({3, 2, 1}));
  CHECK(sigma_lambda(Partition({2, 2})) == Permutation({3, 4, 1, 2}));
  CHECK(sigma_lambda(Partition({3, 1})) == Permutation({4, 2, 1, 3}));
}

TEST_CASE("bridge identity for all small partitions") {
  CHECK(verify_bridge(Partition({2, 1})));
  CHECK(verify_bridge(Partition({1})));
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      Permutation sig = sigma_lambda(lambda);
      CHECK(is_vexillary(sig));
      CHECK(shape_lambda(sig).conjugate() == lambda);
      CHECK(verify_bridge(lambda));
    }
}

TEST_CASE("blocks of a partition") {
  std::vector<Block> b22 = blocks(Partition({2, 2}));
  REQUIRE(b22.size() == 1);
  CHECK(b22[0].corner == Box{1, 2});
  CHECK(b22[0].first_row == 1);
  CHECK(b22[0].last_row == 2);

  std::vector<Block> b21 = blocks(Partition({2, 1}));
  REQUIRE(b21.size() == 2);
  CHECK(b21[0].corner == Box{1, 2});
  CHECK(b21[1].corner == Box{2, 1});

  std::vector<Block> b331 = blocks(Partition({3, 3, 1}));
  REQUIRE(b331.size() == 2);
  CHECK(b331[0].corner == Box{1, 3});
  CHECK(b331[0].last_row == 2);
  CHECK(b331[1].corner == Box{3, 1});

  CHECK(blocks(Partition(std::vector<int>{})).empty());
}

TEST_CASE("where entry 1 can live in a balanced tableau") {
  CHECK(count_balanced_with_one_at(Partition({2, 2}), {1, 2}) == 2);
  CHECK(count_balanced_with_one_at(Partition({2, 2}), {1, 1}) == 0);
  CHECK(count_balanced_with_one_at(Partition({1}), {1, 1}) == 1);
  CHECK(throws_code([] { count_balanced_with_one_at(Partition({2, 2}), {3, 1}); },
                    "box-not-in-shape"));

  // Position-of-1: nonzero exactly at block corners, with the pinned value.
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      std::vector<Block> blks = blocks(lambda);
      Diagram shape = lambda.ferrers();
      for (const Box& c : shape.boxes()) {
        BigInt expected = 0;
        for (const Block& blk : blks)
          if (blk.corner == c) {
            std::vector<int> parts = lambda.parts();
            parts[static_cast<std::size_t>(blk.last_row - 1)] -= 1;
            std::erase(parts, 0);
            expected = Partition(parts).hook_length_formula();
          }
        CHECK(count_balanced_with_one_at(lambda, c) == expected);
      }
    }
}

TEST_CASE("partial fills of the pinned S_3 example") {
  Permutation sigma({3, 2, 1});
  CHECK(partial_fill_count(sigma, {{1, 2}}) == 1);
  CHECK(partial_fill_count(sigma, {{1, 1}}) == 0);
  CHECK(partial_fill_count(sigma, {}) == 2);
  CHECK(partial_fill_count(sigma, {{2, 1}}) == 1);

  std::optional<Permutation> w = partial_fill_witness(sigma, {{1, 2}});
  REQUIRE(w.has_value());
  CHECK(*w == Permutation({2, 3, 1}));
  CHECK(count_reduced_words(*w) == 1);

  std::optional<Permutation> full = partial_fill_witness(sigma, {});
  REQUIRE(full.has_value());
  CHECK(*full == sigma);

  CHECK_FALSE(partial_fill_witness(sigma, {{1, 1}}).has_value());

  CHECK(throws_code([&] { partial_fill_count(sigma, {{5, 5}}); }, "box-outside-shape"));
  CHECK(throws_code([] { partial_fill_count(Permutation({2, 1, 4, 3}), {}); }, "not-vexillary"));
  CHECK(throws_code([] { partial_fill_witness(Permutation({2, 1, 4, 3}), {}); }, "not-vexillary"));
  CHECK(throws_code([] { nice_partial(Permutation({2, 1, 4, 3}), {}); }, "not-vexillary"));
}

TEST_CASE("nice partial shapes") {
  Permutation sigma({3, 2, 1});
  std::optional<Partition> mu = nice_partial(sigma, {{1, 2}});
  REQUIRE(mu.has_value());
  CHECK(*mu == Partition({1, 1}));
  CHECK(mu->hook_length_formula() == 1);

  std::optional<Partition> whole = nice_partial(sigma, {});
  REQUIRE(whole.has_value());
  CHECK(*whole == Partition({2, 1}));

  // Both orders of {(1,2),(2,1)} strand the remaining box, so no tableau
  // realizes them even though the leftover boxes stack to a partition.
  CHECK(partial_fill_count(sigma, {{1, 2}, {2, 1}}) == 0);
  CHECK_FALSE(nice_partial(sigma, {{1, 2}, {2, 1}}).has_value());
  CHECK(partial_fill_count(sigma, {{2, 1}, {1, 2}}) == 0);
  CHECK_FALSE(nice_partial(sigma, {{2, 1}, {1, 2}}).has_value());

  // A one-box pin that is realizable.
  CHECK(partial_fill_count(sigma, {{2, 1}}) == 1);
  std::optional<Partition> tail = nice_partial(sigma, {{2, 1}});
  REQUIRE(tail.has_value());
  CHECK(*tail == Partition({2}));

  CHECK_FALSE(nice_partial(sigma, {{1, 2}, {1, 2}}).has_value());  // repeat
}

TEST_CASE("witness identity across vexillary S_4") {
  for (const Permutation& sigma : all_permutations(4)) {
    if (!is_vexillary(sigma)) continue;
    TypeFilling ex = full_exchange(type_of_permutation(sigma)).type;
    std::vector<Box> boxes = ex.shape().boxes();
    for (const Box& b : boxes) {
      BigInt count = partial_fill_count(sigma, {b});
      std::optional<Permutation> omega = partial_fill_witness(sigma, {b});
      if (count > 0) {
        REQUIRE(omega.has_value());
        CHECK(count_reduced_words(*omega) == count);
      } else {
        CHECK_FALSE(omega.has_value());
      }
      if (std::optional<Partition> mu = nice_partial(sigma, {b}))
        CHECK(mu->hook_length_formula() == count);
    }
  }
}

TEST_CASE("corner recurrence for balanced counts") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      BigInt total = count_tableaux(balanced_type(lambda.ferrers()));
      CHECK(total == lambda.hook_length_formula());
      BigInt corner_sum = 0;
      for (const Box& c : lambda.corners()) {
        std::vector<int> parts = lambda.parts();
        parts[static_cast<std::size_t>(c.row - 1)] -= 1;
        std::erase(parts, 0);
        corner_sum += count_tableaux(balanced_type(Partition(parts).ferrers()));
      }
      CHECK(total == corner_sum);
    }
}
