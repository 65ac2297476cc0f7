#include "doctest.h"

#include "divl1/distortion.hpp"
#include "divl1/random.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace divl1;

TEST_CASE("exact distortion of an l1-realized diversity is 1") {
  const auto t = random_tree(9, 7, 3);
  const auto delta = make_tree_oracle(t, 7);
  const auto emb = tree_to_l1(t);
  const auto report = exact_distortion(delta, emb);
  CHECK_FALSE(report.unbounded);
  CHECK(report.c == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.subsets_scanned == (1u << 7) - 7 - 1);
}

TEST_CASE("exact distortion of the coordinate embedding of discrete n=3") {
  const auto rho = make_discrete_oracle(3);
  const auto report = exact_distortion(rho, coordinate_embed(rho));
  CHECK(report.c == doctest::Approx(1.5));
  CHECK(report.c2 == doctest::Approx(3.0));       // ratio at the full set
  CHECK(1.0 / report.c1 == doctest::Approx(2.0)); // ratio at every pair
  CHECK(report.witness_max == full_mask(3));
  CHECK(mask_cardinality(report.witness_min) == 2);
}

TEST_CASE("distortion is invariant under uniform rescaling of the embedding") {
  const auto delta = testing::random_valid_diversity(6, 2);
  auto emb = coordinate_embed(delta);
  const auto base = exact_distortion(delta, emb);
  emb.coords *= 37.5;
  const auto scaled = exact_distortion(delta, emb);
  CHECK(scaled.c == doctest::Approx(base.c).epsilon(1e-12));
  CHECK(scaled.witness_min == base.witness_min);
  CHECK(scaled.witness_max == base.witness_max);
}

TEST_CASE("zero embedded value with positive delta reports unbounded") {
  const auto rho = make_discrete_oracle(3);
  PointEmbedding zero;
  zero.n = 3;
  zero.k = 2;
  zero.coords = Matrix::Zero(3, 2);
  const auto report = exact_distortion(rho, zero);
  CHECK(report.unbounded);
  CHECK(mask_cardinality(report.witness_min) >= 2);
}

TEST_CASE("zero delta on a nonsingleton subset is rejected") {
  DiversityOracle not_diversity(3, "table", [](Mask a) {
    return a == 0b011 ? 0.0 : discrete_diversity(a);
  });
  const auto emb = coordinate_embed(make_discrete_oracle(3));
  CHECK_THROWS_AS(exact_distortion(not_diversity, emb), ValidationError);
}

TEST_CASE("sampled distortion lower-bounds exact and matches under full coverage") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const int n = 6;
    const auto delta = testing::random_valid_diversity(n, seed + 100);
    const auto emb = coordinate_embed(delta);
    const auto exact = exact_distortion(delta, emb);
    const auto sampled = sampled_distortion(delta, emb, 10, seed);
    CHECK(sampled.c <= exact.c + 1e-12);
    const auto covered = sampled_distortion(delta, emb, 4096, seed);
    CHECK(covered.c == doctest::Approx(exact.c).epsilon(1e-12));
  }
}

TEST_CASE("sampled distortion records its mode and seed") {
  const auto delta = make_discrete_oracle(5);
  const auto emb = coordinate_embed(delta);
  const auto report = sampled_distortion(delta, emb, 7, 42);
  CHECK(report.mode == "sampled");
  CHECK(report.seed == 42);
}

TEST_CASE("sandwich_check passes the tsp and ball chains") {
  const auto d = points_metric(random_points(7, 2, 31), 2);
  const auto steiner = make_steiner_oracle(d);
  const auto tsp = make_tsp_oracle(d);
  CHECK(sandwich_check(steiner, tsp, steiner, 2.0).passed);
  const auto diam = make_diameter_oracle(d);
  const auto ball = make_ball_oracle(d);
  CHECK(sandwich_check(diam, ball, diam, 2.0).passed);
}

TEST_CASE("sandwich_check fails a corrupted oracle with a witness") {
  const auto d = points_metric(random_points(5, 2, 8), 2);
  const auto diam = make_diameter_oracle(d);
  DiversityOracle corrupt(5, "table", [d](Mask a) {
    return a == full_mask(5) ? 100.0 : diameter_diversity(d, a);
  });
  const auto result = sandwich_check(diam, corrupt, diam, 2.0);
  CHECK_FALSE(result.passed);
  CHECK(result.witness == full_mask(5));
}

TEST_CASE("ensemble stretch dominance and bookkeeping") {
  const auto d = discrete_metric(16);
  const auto ensemble = frt_sample_ensemble(d, 200, 9);
  const auto stats = ensemble_stretch(d, ensemble);
  CHECK(stats.sample_count == 200);
  CHECK(stats.max_mean_stretch <= 8.0 * std::log(16.0));
  // FRT dominance: every single-sample stretch is at least 1.
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j) CHECK(stats.mean_stretch(i, j) >= 1.0 - 1e-12);
}

TEST_CASE("coordinate embedding distortion stays below n on random diversities") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const auto delta = testing::random_valid_diversity(n, seed + 500);
    const auto report = exact_distortion(delta, coordinate_embed(delta));
    CHECK_FALSE(report.unbounded);
    CHECK(report.c <= n + 1e-9);
  }
}
