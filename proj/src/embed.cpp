#include "divl1/embed.hpp"

#include "divl1/random.hpp"
#include "divl1/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace divl1 {

PointEmbedding coordinate_embed(const DiversityOracle& delta) {
  const int n = delta.size();
  PointEmbedding emb;
  emb.n = n;
  emb.k = n;
  emb.method = "coordinate";
  if (n == 1) {
    emb.coords = Matrix::Zero(1, 1);
    return emb;
  }
  const FiniteMetric d = induced_metric(delta);
  emb.coords = d.dist;
  return emb;
}

namespace {

struct HstNode {
  std::vector<int> members;  // ground points in this cluster
  int parent = -1;
  int level = 0;   // edge to parent has weight scale * 2^(level + 3)
  int rep = -1;    // permutation-first member; shared with exactly one child
};

}  // namespace

WeightedTree frt_sample_tree(const FiniteMetric& d, std::uint64_t seed) {
  const int n = d.n;
  if (n < 2) throw ValidationError("FRT sampling needs n >= 2");

  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double beta = std::exp2(unit(rng));  // log-uniform in [1, 2)
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[perm[i]] = i;

  const double scale = d.min_positive();
  const double diam = d.diameter() / scale;
  const int top = static_cast<int>(std::ceil(std::log2(std::max(1.0, diam))));

  // Hierarchical decomposition: partition each level-i cluster with ball
  // radius beta * 2^(i-1) around permutation-first centers drawn from all
  // of X; clusters of one point become leaves.
  std::vector<HstNode> nodes;
  {
    HstNode root;
    root.members.resize(n);
    std::iota(root.members.begin(), root.members.end(), 0);
    root.level = top;
    nodes.push_back(std::move(root));
  }
  std::vector<int> frontier = {0};
  int level = top;
  while (!frontier.empty()) {
    const double radius = beta * std::exp2(level - 1);
    std::vector<int> next;
    for (int id : frontier) {
      // Group members by their first center within the radius.
      std::vector<std::pair<int, int>> by_center;  // (center rank, member)
      for (int u : nodes[id].members) {
        int center = -1;
        for (int r = 0; r < n; ++r) {
          if (d.dist(u, perm[r]) / scale <= radius) {
            center = r;
            break;
          }
        }
        by_center.emplace_back(center, u);
      }
      std::stable_sort(by_center.begin(), by_center.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < by_center.size();) {
        std::size_t j = i;
        HstNode child;
        while (j < by_center.size() && by_center[j].first == by_center[i].first) {
          child.members.push_back(by_center[j].second);
          ++j;
        }
        child.parent = id;
        child.level = level - 1;
        const int cid = static_cast<int>(nodes.size());
        nodes.push_back(std::move(child));
        if (nodes[cid].members.size() > 1) next.push_back(cid);
        i = j;
      }
    }
    frontier = std::move(next);
    --level;
  }

  // Representatives: the permutation-first member of each cluster. A
  // parent shares its representative with exactly one child, and those
  // edges contract, leaving one tree vertex per ground point.
  for (auto& node : nodes) {
    int best = node.members.front();
    for (int u : node.members) {
      if (rank[u] < rank[best]) best = u;
    }
    node.rep = best;
  }

  WeightedTree tree;
  tree.vertex_count = n;
  tree.placement.resize(n);
  std::iota(tree.placement.begin(), tree.placement.end(), 0);
  for (std::size_t id = 1; id < nodes.size(); ++id) {
    const auto& node = nodes[id];
    const auto& parent = nodes[node.parent];
    if (node.rep == parent.rep) continue;  // contracted chain edge
    tree.edges.push_back({node.rep, parent.rep, scale * std::exp2(node.level + 3)});
  }
  validate_tree(tree);

  // Hard postcondition: tree distances dominate the metric.
  const Matrix dt = tree_ground_distances(tree);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dt(i, j) < d.dist(i, j) * (1.0 - 1e-12)) {
        throw std::logic_error("FRT dominance postcondition failed");
      }
    }
  }
  return tree;
}

TreeEnsemble frt_sample_ensemble(const FiniteMetric& d, int m, std::uint64_t seed) {
  if (m < 1) throw ValidationError("ensemble needs at least one tree");
  TreeEnsemble ensemble;
  ensemble.seed = seed;
  ensemble.trees.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    ensemble.trees.push_back(frt_sample_tree(d, derive_seed(seed, static_cast<std::uint64_t>(i))));
  }
  return ensemble;
}

PointEmbedding frt_embed(const FiniteMetric& d, const TreeEnsemble& ensemble) {
  const int n = d.n;
  const int m = static_cast<int>(ensemble.trees.size());
  int k = 0;
  for (const auto& t : ensemble.trees) k += static_cast<int>(t.edges.size());

  PointEmbedding emb;
  emb.n = n;
  emb.k = k;
  emb.coords = Matrix::Zero(n, k);
  emb.method = "frt";
  emb.seed = ensemble.seed;
  int col = 0;
  for (const auto& t : ensemble.trees) {
    const PointEmbedding part = tree_to_l1(t);
    emb.coords.block(0, col, n, part.k) = part.coords / static_cast<double>(m);
    col += part.k;
  }
  return emb;
}

PointEmbedding frt_embed(const FiniteMetric& d, int m, std::uint64_t seed) {
  return frt_embed(d, frt_sample_ensemble(d, m, seed));
}

GraphReduction hypergraph_to_graph(const WeightedHypergraph& h) {
  validate_hypergraph(h);
  const int n = h.n;
  GraphReduction out;
  Matrix dist = Matrix::Constant(n, n, std::numeric_limits<double>::infinity());
  for (int i = 0; i < n; ++i) dist(i, i) = 0.0;
  for (const auto& e : h.edges) {
    const int center = *std::min_element(e.vertices.begin(), e.vertices.end());
    for (int v : e.vertices) {
      if (v == center) continue;
      out.edges.push_back({center, v, e.weight});
      dist(center, v) = std::min(dist(center, v), e.weight);
      dist(v, center) = dist(center, v);
    }
  }
  // Floyd-Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist(i, j) = std::min(dist(i, j), dist(i, k) + dist(k, j));
  out.metric = validate_metric(dist);
  return out;
}

PointEmbedding bourgain_embed_metric(const FiniteMetric& d, const BourgainConfig& cfg) {
  const int n = d.n;
  if (n < 2) throw ValidationError("Bourgain embedding needs n >= 2");
  const int scales = cfg.scales > 0
                         ? cfg.scales
                         : std::max(1, static_cast<int>(std::floor(std::log2(n))));
  const int q = cfg.samples_per_scale > 0
                    ? cfg.samples_per_scale
                    : std::max(1, 3 * static_cast<int>(std::ceil(std::log2(n))));

  auto rng = make_rng(cfg.seed);
  const int k = scales * q;
  Matrix coords = Matrix::Zero(n, k);
  std::vector<int> pool(n);
  int col = 0;
  for (int s = 0; s < scales; ++s) {
    const int set_size = std::min(n - 1, 1 << s);
    for (int j = 0; j < q; ++j, ++col) {
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int x = 0; x < n; ++x) {
        double dist_to_set = std::numeric_limits<double>::infinity();
        for (int t = 0; t < set_size; ++t) {
          dist_to_set = std::min(dist_to_set, d.dist(x, pool[t]));
        }
        coords(x, col) = dist_to_set / static_cast<double>(k);
      }
    }
  }
  PointEmbedding emb;
  emb.n = n;
  emb.k = k;
  emb.coords = std::move(coords);
  emb.method = "bourgain";
  emb.seed = cfg.seed;
  return emb;
}

double scheme_feature(const DiversityOracle& delta, Mask a, PhiChoice choice, int x) {
  switch (choice) {
    case PhiChoice::kMetricDistance: {
      if (a == 0) {
        throw ValidationError("distance to the empty set is undefined under choice (2)");
      }
      double best = std::numeric_limits<double>::infinity();
      const Mask xbit = Mask{1} << x;
      for (Mask m = a; m != 0; m &= m - 1) {
        const int p = std::countr_zero(m);
        const Mask pair = xbit | (Mask{1} << p);
        best = std::min(best, delta(pair));
      }
      return best;
    }
    case PhiChoice::kSetAugmented:
      return delta(a | (Mask{1} << x));
  }
  throw std::logic_error("unknown phi choice");
}

PointEmbedding scheme_embed(const DiversityOracle& delta, const SchemeWeights& w) {
  const int n = delta.size();
  std::vector<std::pair<Mask, double>> active;
  for (const auto& [mask, c] : w.coefficients) {
    if (c < 0.0) throw ValidationError("scheme weights must be nonnegative");
    if (c > 0.0) active.emplace_back(mask, c);
  }
  PointEmbedding emb;
  emb.n = n;
  emb.k = std::max<int>(1, static_cast<int>(active.size()));
  emb.coords = Matrix::Zero(n, emb.k);
  emb.method = "scheme";
  for (std::size_t col = 0; col < active.size(); ++col) {
    const auto [mask, c] = active[col];
    for (int x = 0; x < n; ++x) {
      emb.coords(x, static_cast<int>(col)) = c * scheme_feature(delta, mask, w.choice, x);
    }
  }
  return emb;
}

double scheme_eval(const DiversityOracle& delta, const SchemeWeights& w, Mask b) {
  if (mask_cardinality(b) <= 1) return 0.0;
  double total = 0.0;
  for (const auto& [mask, c] : w.coefficients) {
    if (c < 0.0) throw ValidationError("scheme weights must be nonnegative");
    if (c == 0.0) continue;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Mask m = b; m != 0; m &= m - 1) {
      const double v = scheme_feature(delta, mask, w.choice, std::countr_zero(m));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    total += c * (hi - lo);
  }
  return total;
}

}  // namespace divl1
