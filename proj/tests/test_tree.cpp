#include "doctest.h"

#include "divl1/oracle.hpp"
#include "divl1/random.hpp"
#include "divl1/tree.hpp"

using namespace divl1;

TEST_CASE("validate_tree rejects malformed inputs") {
  WeightedTree cyclic;
  cyclic.vertex_count = 3;
  cyclic.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}};
  CHECK_THROWS_AS(validate_tree(cyclic), ValidationError);

  WeightedTree disconnected;
  disconnected.vertex_count = 4;
  disconnected.edges = {{0, 1, 1.0}, {2, 3, 1.0}, {0, 1, 1.0}};
  CHECK_THROWS_AS(validate_tree(disconnected), ValidationError);

  WeightedTree bad_placement;
  bad_placement.vertex_count = 2;
  bad_placement.edges = {{0, 1, 1.0}};
  bad_placement.placement = {0, 5};
  CHECK_THROWS_AS(validate_tree(bad_placement), ValidationError);
}

TEST_CASE("tree_diversity rejects unplaced members") {
  WeightedTree t;
  t.vertex_count = 2;
  t.edges = {{0, 1, 1.0}};
  t.placement = {0};
  CHECK_THROWS_AS(tree_diversity(t, 0b11), ValidationError);
}

TEST_CASE("tree_to_l1 on the unit star") {
  WeightedTree t;
  t.vertex_count = 4;
  t.edges = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  t.placement = {1, 2, 3};
  const auto emb = tree_to_l1(t);
  CHECK(emb.k == 3);
  CHECK(eval_l1_diversity(emb, 0b111) == doctest::Approx(3.0));
  CHECK(eval_l1_diversity(emb, 0b111) == doctest::Approx(tree_diversity(t, 0b111)));
}

TEST_CASE("tree_to_l1 pair values are path lengths") {
  WeightedTree t;
  t.vertex_count = 3;
  t.edges = {{0, 1, 1.0}, {1, 2, 1.0}};
  t.placement = {0, 1, 2};
  const auto emb = tree_to_l1(t);
  CHECK(eval_l1_diversity(emb, 0b101) == doctest::Approx(2.0));
}

TEST_CASE("tree_to_l1 is exact on every subset of random trees") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    const auto t = random_tree(n + 3, n, seed);
    const auto emb = tree_to_l1(t);
    for (Mask a = 0; a <= full_mask(n); ++a) {
      CHECK(eval_l1_diversity(emb, a) == doctest::Approx(tree_diversity(t, a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tree_ground_distances is the tree metric on placements") {
  WeightedTree t;
  t.vertex_count = 5;
  t.edges = {{0, 1, 1.5}, {1, 2, 0.5}, {1, 3, 2.0}, {0, 4, 1.0}};
  t.placement = {2, 3, 4};
  const Matrix dt = tree_ground_distances(t);
  CHECK(dt(0, 1) == doctest::Approx(2.5));  // 2-1-3
  CHECK(dt(0, 2) == doctest::Approx(3.0));  // 2-1-0-4
  CHECK(dt(1, 2) == doctest::Approx(4.5));  // 3-1-0-4
}
