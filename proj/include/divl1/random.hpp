#pragma once

#include "divl1/families.hpp"
#include "divl1/metric.hpp"
#include "divl1/tree.hpp"

#include <random>

namespace divl1 {

/// splitmix64 step; used to derive independent per-trial streams from one
/// top-level seed so results are schedule-independent.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::mt19937_64 make_rng(std::uint64_t seed);

/// Uniform points in [0, 1]^dim with the Euclidean (p = 2) or l1 (p = 1)
/// pairwise metric. Resamples until all points are distinct.
Matrix random_points(int n, int dim, std::uint64_t seed);
FiniteMetric points_metric(const Matrix& points, int p);

/// Shortest-path metric of a random connected graph: a random spanning
/// tree plus extra edges, weights uniform in [0.5, 2].
FiniteMetric random_graph_metric(int n, double extra_edge_prob, std::uint64_t seed);

FiniteMetric discrete_metric(int n);
FiniteMetric path_metric(int n);
/// Center 0, leaves at distance 1 from it (leaf-leaf distance 2).
FiniteMetric star_metric(int n);

/// Connected random hypergraph with edge sizes in [2, max_size] and
/// weights uniform in [0.5, 2]; resamples until connected.
WeightedHypergraph random_hypergraph(int n, int edge_count, int max_size, std::uint64_t seed);

/// Random partition of [0, n) into at least two nonempty blocks.
Partition random_partition(int n, std::uint64_t seed);

/// Random tree with `vertices` vertices, weights uniform in [0.5, 2],
/// and an injective placement of n ground points (n <= vertices).
WeightedTree random_tree(int vertices, int n, std::uint64_t seed);

}  // namespace divl1
