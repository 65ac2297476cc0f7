#pragma once

#include "divl1/families.hpp"
#include "divl1/metric.hpp"
#include "divl1/oracle.hpp"
#include "divl1/tree.hpp"

#include <map>

namespace divl1 {

/// Rows are induced-metric distance vectors phi(x) = (d(x, x_1), ...,
/// d(x, x_n)); distortion at most n for any diversity.
PointEmbedding coordinate_embed(const DiversityOracle& delta);

/// FRT-sampled tree on vertex set X: random permutation plus radius scale
/// beta log-uniform in [1, 2), hierarchical ball partitioning from the
/// diameter scale down to the minimum distance, then the HST is contracted
/// onto cluster representatives so every vertex carries a ground point.
/// Postcondition (hard): tree distances dominate d on every pair.
WeightedTree frt_sample_tree(const FiniteMetric& d, std::uint64_t seed);

struct TreeEnsemble {
  std::vector<WeightedTree> trees;
  std::uint64_t seed = 0;
};

/// m independent samples with per-tree derived seeds; dominance is
/// verified for every tree at construction.
TreeEnsemble frt_sample_ensemble(const FiniteMetric& d, int m, std::uint64_t seed);

/// Concatenation of tree_to_l1 coordinates of m FRT samples, each scaled
/// by 1/m: the empirical mean of the tree diversities as one l1 diversity.
/// For every A the value is >= the Steiner diversity of d on A.
PointEmbedding frt_embed(const FiniteMetric& d, int m, std::uint64_t seed);
PointEmbedding frt_embed(const FiniteMetric& d, const TreeEnsemble& ensemble);

struct GraphReduction {
  FiniteMetric metric;  // shortest-path metric of the reduced graph
  std::vector<WeightedTree::Edge> edges;  // star edges, one group per hyperedge
};

/// Each hyperedge contributes a star centered at its minimum-index vertex,
/// every edge weighted w(U). Steiner diversity of the result sandwiches
/// the hypergraph Steiner diversity within a factor of (k - 1).
GraphReduction hypergraph_to_graph(const WeightedHypergraph& h);

struct BourgainConfig {
  int scales = 0;            // 0: default floor(log2 n)
  int samples_per_scale = 0; // 0: default 3 * ceil(log2 n)
  std::uint64_t seed = 0;
};

/// Coordinates d(x, A_{s,j}) for random sets of size 2^s, scaled uniformly.
PointEmbedding bourgain_embed_metric(const FiniteMetric& d, const BourgainConfig& cfg);

enum class PhiChoice {
  kMetricDistance,  // phi_A(x) = min_{a in A} delta({x, a})
  kSetAugmented,    // phi_A(x) = delta(A union {x})
};

struct SchemeWeights {
  std::map<Mask, double> coefficients;  // c_A >= 0, finitely many nonzero
  PhiChoice choice = PhiChoice::kSetAugmented;
};

/// Feature value phi_{delta,A}(x) under the selected choice.
double scheme_feature(const DiversityOracle& delta, Mask a, PhiChoice choice, int x);

/// One coordinate per nonzero weight: column A holds c_A * phi_A(x).
PointEmbedding scheme_embed(const DiversityOracle& delta, const SchemeWeights& w);

/// Generalized Bourgain value sum_A c_A * range over B of phi_A.
double scheme_eval(const DiversityOracle& delta, const SchemeWeights& w, Mask b);

}  // namespace divl1
