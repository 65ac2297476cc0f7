#pragma once

#include "divl1/metric.hpp"
#include "divl1/oracle.hpp"
#include "divl1/tree.hpp"

namespace divl1 {

struct WeightedHypergraph {
  struct Edge {
    std::vector<int> vertices;  // |vertices| >= 2
    double weight = 0.0;        // > 0
  };

  int n = 0;
  std::vector<Edge> edges;

  /// Largest hyperedge size, the k of the (k-1) reduction bound.
  int max_edge_size() const;
};

/// Throws ValidationError unless edges are well-formed and their union
/// connects all vertices.
void validate_hypergraph(const WeightedHypergraph& h);

struct Partition {
  std::vector<std::vector<int>> blocks;  // disjoint, nonempty, cover [0, n)
  int n = 0;
};

Partition make_partition(std::vector<std::vector<int>> blocks, int n);

/// Cardinality profile f[t] = delta(A) for |A| = t; validated against the
/// full axiom checker at construction (n <= 12).
struct SymmetricProfile {
  std::vector<double> f;  // length n + 1, f[0] = f[1] = 0, f[t] > 0 for t >= 2

  int n() const { return static_cast<int>(f.size()) - 1; }
};

SymmetricProfile make_symmetric_profile(std::vector<double> f);

// --- Point evaluators ---

/// max pairwise distance within A.
double diameter_diversity(const FiniteMetric& d, Mask a);

/// Exact minimum Steiner tree weight in the complete graph on X connecting
/// A (Dreyfus-Wagner, |A| <= 12; Steiner points range over X).
double steiner_diversity(const FiniteMetric& d, Mask a);

/// Steiner diversity of every subset at once (full-subset DP, n <= 14).
std::vector<double> steiner_all_subsets(const FiniteMetric& d);

/// Exact minimum total weight of a connected sub-hypergraph covering A
/// (edge-subset enumeration, |edges| <= 20).
double hypergraph_steiner(const WeightedHypergraph& h, Mask a);

/// 2 * min over centers x in X of max_{a in A} d(x, a).
double ball_diversity(const FiniteMetric& d, Mask a);

/// Exact shortest closed tour through A (Held-Karp, |A| <= 14);
/// 2 d(a, b) for pairs.
double tsp_diversity(const FiniteMetric& d, Mask a);

/// 1 if A intersects at least two blocks, 0 otherwise.
double partition_diversity(const Partition& p, Mask a);

double discrete_diversity(Mask a);
double cardinality_diversity(Mask a);

double symmetric_diversity(const SymmetricProfile& profile, Mask a);

// --- Oracle constructors ---

DiversityOracle make_diameter_oracle(const FiniteMetric& d);
DiversityOracle make_steiner_oracle(const FiniteMetric& d);
DiversityOracle make_hypergraph_oracle(const WeightedHypergraph& h);
DiversityOracle make_ball_oracle(const FiniteMetric& d);
DiversityOracle make_tsp_oracle(const FiniteMetric& d);
DiversityOracle make_partition_oracle(const Partition& p);
DiversityOracle make_discrete_oracle(int n);
DiversityOracle make_cardinality_oracle(int n);
DiversityOracle make_symmetric_oracle(const SymmetricProfile& profile);
DiversityOracle make_tree_oracle(const WeightedTree& t, int n);
DiversityOracle make_table_oracle(int n, std::vector<double> values);

}  // namespace divl1
