#include "divl1/tree.hpp"

#include <queue>

namespace divl1 {

double WeightedTree::total_length() const {
  double total = 0.0;
  for (const auto& e : edges) total += e.weight;
  return total;
}

namespace {

std::vector<std::vector<std::pair<int, double>>> adjacency(const WeightedTree& t) {
  std::vector<std::vector<std::pair<int, double>>> adj(t.vertex_count);
  for (const auto& e : t.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  return adj;
}

// Iterative DFS order rooted at 0; parent[v] = preceding vertex.
void dfs_order(const WeightedTree& t, std::vector<int>& order, std::vector<int>& parent) {
  const auto adj = adjacency(t);
  order.clear();
  parent.assign(t.vertex_count, -1);
  std::vector<bool> seen(t.vertex_count, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto [w, _] : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
}

}  // namespace

void validate_tree(const WeightedTree& t) {
  if (t.vertex_count < 1) throw ValidationError("tree needs at least one vertex");
  if (static_cast<int>(t.edges.size()) != t.vertex_count - 1) {
    throw ValidationError("tree must have exactly vertex_count - 1 edges");
  }
  for (const auto& e : t.edges) {
    if (e.u < 0 || e.u >= t.vertex_count || e.v < 0 || e.v >= t.vertex_count || e.u == e.v) {
      throw ValidationError("tree edge endpoints out of range");
    }
    if (!(e.weight > 0.0)) throw ValidationError("tree edge weights must be positive");
  }
  std::vector<int> order, parent;
  dfs_order(t, order, parent);
  if (static_cast<int>(order.size()) != t.vertex_count) {
    throw ValidationError("tree edge list is disconnected");
  }
  for (int p : t.placement) {
    if (p < 0 || p >= t.vertex_count) throw ValidationError("placement vertex out of range");
  }
}

double tree_diversity(const WeightedTree& t, Mask a) {
  const int card = mask_cardinality(a);
  if (card <= 1) return 0.0;
  std::vector<int> count(t.vertex_count, 0);
  for (Mask m = a; m != 0; m &= m - 1) {
    const int g = std::countr_zero(m);
    if (g >= static_cast<int>(t.placement.size())) {
      throw ValidationError("subset member has no placement on the tree");
    }
    ++count[t.placement[g]];
  }

  std::vector<int> order, parent;
  dfs_order(t, order, parent);
  std::vector<double> parent_weight(t.vertex_count, 0.0);
  const auto adj = adjacency(t);
  for (int v = 0; v < t.vertex_count; ++v) {
    for (auto [w, wt] : adj[v]) {
      if (parent[w] == v) parent_weight[w] = wt;
    }
  }

  // An edge lies on the spanning subtree iff both of its sides hold
  // members of A; accumulate subtree counts bottom-up.
  double total = 0.0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (parent[v] >= 0) {
      if (count[v] > 0 && count[v] < card) total += parent_weight[v];
      count[parent[v]] += count[v];
    }
  }
  return total;
}

Matrix tree_ground_distances(const WeightedTree& t) {
  const int n = static_cast<int>(t.placement.size());
  const auto adj = adjacency(t);
  Matrix out = Matrix::Zero(n, n);
  // BFS-style relaxation from each placed vertex; trees have unique paths.
  std::vector<double> dist(t.vertex_count);
  for (int g = 0; g < n; ++g) {
    std::fill(dist.begin(), dist.end(), -1.0);
    const int src = t.placement[g];
    dist[src] = 0.0;
    std::vector<int> stack = {src};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [w, wt] : adj[v]) {
        if (dist[w] < 0.0) {
          dist[w] = dist[v] + wt;
          stack.push_back(w);
        }
      }
    }
    for (int h = 0; h < n; ++h) out(g, h) = dist[t.placement[h]];
  }
  return out;
}

PointEmbedding tree_to_l1(const WeightedTree& t) {
  validate_tree(t);
  const int n = static_cast<int>(t.placement.size());
  const int k = static_cast<int>(t.edges.size());

  std::vector<int> order, parent;
  dfs_order(t, order, parent);

  // side[v][e]: whether v lies on the child side of edge e, computed by
  // marking the child component of each edge.
  const auto adj = adjacency(t);
  Matrix coords = Matrix::Zero(n, k);
  for (int e = 0; e < k; ++e) {
    const auto& edge = t.edges[e];
    // Child endpoint relative to the rooted orientation.
    const int child = (parent[edge.v] == edge.u) ? edge.v : edge.u;
    std::vector<bool> in_child(t.vertex_count, false);
    in_child[child] = true;
    std::vector<int> stack = {child};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [w, _] : adj[v]) {
        if (!in_child[w] && w != parent[child] && parent[w] == v) {
          in_child[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (int g = 0; g < n; ++g) {
      if (in_child[t.placement[g]]) coords(g, e) = edge.weight;
    }
  }

  PointEmbedding emb;
  emb.n = n;
  emb.k = k;
  emb.coords = std::move(coords);
  emb.method = "tree";
  return emb;
}

}  // namespace divl1
