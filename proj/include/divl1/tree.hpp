#pragma once

#include "divl1/metric.hpp"
#include "divl1/types.hpp"

namespace divl1 {

/// Edge-weighted tree with a placement map from ground points to tree
/// vertices. Vertices without placed points act as Steiner vertices.
struct WeightedTree {
  struct Edge {
    int u = 0, v = 0;
    double weight = 0.0;
  };

  int vertex_count = 0;
  std::vector<Edge> edges;        // exactly vertex_count - 1, connected
  std::vector<int> placement;     // ground index -> tree vertex

  double total_length() const;
};

/// Throws ValidationError unless the edge list forms a tree and every
/// placement is a valid vertex.
void validate_tree(const WeightedTree& t);

/// Total weight of the minimal connected subtree spanning the placements
/// of A; 0 for |A| <= 1.
double tree_diversity(const WeightedTree& t, Mask a);

/// Pairwise tree distances between the placed ground points.
Matrix tree_ground_distances(const WeightedTree& t);

/// One coordinate per edge: a point gets the edge weight when its
/// placement lies on a fixed side of the edge, 0 otherwise. The l1
/// diversity of the result equals tree_diversity on every subset.
PointEmbedding tree_to_l1(const WeightedTree& t);

}  // namespace divl1
