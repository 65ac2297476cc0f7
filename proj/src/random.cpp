#include "divl1/random.hpp"

#include <algorithm>
#include <numeric>

namespace divl1 {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Matrix random_points(int n, int dim, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix pts(n, dim);
  while (true) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < dim; ++j) pts(i, j) = unit(rng);
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n && distinct; ++j)
        if ((pts.row(i) - pts.row(j)).cwiseAbs().sum() == 0.0) distinct = false;
    if (distinct) return pts;
  }
}

FiniteMetric points_metric(const Matrix& points, int p) {
  const int n = static_cast<int>(points.rows());
  Matrix dist = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto diff = (points.row(i) - points.row(j)).cwiseAbs();
      dist(i, j) = (p == 1) ? diff.sum() : diff.matrix().norm();
      dist(j, i) = dist(i, j);
    }
  }
  return validate_metric(dist);
}

FiniteMetric random_graph_metric(int n, double extra_edge_prob, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix dist = Matrix::Constant(n, n, std::numeric_limits<double>::infinity());
  for (int i = 0; i < n; ++i) dist(i, i) = 0.0;
  // Random spanning tree (each vertex attaches to a random earlier one).
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int u = pick(rng);
    const double w = weight(rng);
    dist(u, v) = std::min(dist(u, v), w);
    dist(v, u) = dist(u, v);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < extra_edge_prob) {
        const double w = weight(rng);
        dist(i, j) = std::min(dist(i, j), w);
        dist(j, i) = dist(i, j);
      }
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dist(i, j) = std::min(dist(i, j), dist(i, k) + dist(k, j));
  return validate_metric(dist);
}

FiniteMetric discrete_metric(int n) {
  Matrix dist = Matrix::Ones(n, n) - Matrix::Identity(n, n);
  return validate_metric(dist);
}

FiniteMetric path_metric(int n) {
  Matrix dist(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dist(i, j) = std::abs(i - j);
  return validate_metric(dist);
}

FiniteMetric star_metric(int n) {
  Matrix dist = 2.0 * (Matrix::Ones(n, n) - Matrix::Identity(n, n));
  for (int i = 1; i < n; ++i) {
    dist(0, i) = 1.0;
    dist(i, 0) = 1.0;
  }
  return validate_metric(dist);
}

WeightedHypergraph random_hypergraph(int n, int edge_count, int max_size, std::uint64_t seed) {
  if (max_size < 2 || max_size > n) throw ValidationError("hyperedge size must be in [2, n]");
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto rng = make_rng(derive_seed(seed, attempt));
    std::uniform_int_distribution<int> size_dist(2, max_size);
    std::uniform_real_distribution<double> weight(0.5, 2.0);
    WeightedHypergraph h;
    h.n = n;
    std::vector<int> pool(n);
    for (int e = 0; e < edge_count; ++e) {
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      const int size = size_dist(rng);
      WeightedHypergraph::Edge edge;
      edge.vertices.assign(pool.begin(), pool.begin() + size);
      std::sort(edge.vertices.begin(), edge.vertices.end());
      edge.weight = weight(rng);
      h.edges.push_back(std::move(edge));
    }
    try {
      validate_hypergraph(h);
      return h;
    } catch (const ValidationError&) {
      // Disconnected draw; resample from the next derived stream.
    }
  }
}

Partition random_partition(int n, std::uint64_t seed) {
  if (n < 2) throw ValidationError("partition diversity needs n >= 2");
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> block_count(2, std::max(2, n / 2 + 1));
  const int blocks = std::min(n, block_count(rng));
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::vector<int>> out(blocks);
  // Seed each block, then scatter the rest.
  for (int b = 0; b < blocks; ++b) out[b].push_back(pool[b]);
  std::uniform_int_distribution<int> pick(0, blocks - 1);
  for (int i = blocks; i < n; ++i) out[pick(rng)].push_back(pool[i]);
  return make_partition(std::move(out), n);
}

WeightedTree random_tree(int vertices, int n, std::uint64_t seed) {
  if (n > vertices) throw ValidationError("placement needs n <= vertex count");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  WeightedTree t;
  t.vertex_count = vertices;
  for (int v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    t.edges.push_back({pick(rng), v, weight(rng)});
  }
  std::vector<int> pool(vertices);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  t.placement.assign(pool.begin(), pool.begin() + n);
  validate_tree(t);
  return t;
}

}  // namespace divl1
