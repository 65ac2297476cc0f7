#include "divl1/families.hpp"

#include <numeric>

namespace divl1 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

int WeightedHypergraph::max_edge_size() const {
  int k = 0;
  for (const auto& e : edges) k = std::max(k, static_cast<int>(e.vertices.size()));
  return k;
}

void validate_hypergraph(const WeightedHypergraph& h) {
  if (h.n < 1) throw ValidationError("hypergraph needs at least one vertex");
  if (h.n > 24) throw CapError("hypergraph vertex count capped at n <= 24");
  std::vector<int> comp(h.n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : h.edges) {
    if (e.vertices.size() < 2) throw ValidationError("hyperedges need at least two vertices");
    if (!(e.weight > 0.0)) throw ValidationError("hyperedge weights must be positive");
    std::vector<bool> seen(h.n, false);
    for (int v : e.vertices) {
      if (v < 0 || v >= h.n) throw ValidationError("hyperedge vertex out of range");
      if (seen[v]) throw ValidationError("hyperedge repeats a vertex");
      seen[v] = true;
      comp[find(v)] = find(e.vertices.front());
    }
  }
  for (int v = 1; v < h.n; ++v) {
    if (find(v) != find(0)) throw ValidationError("hypergraph edges do not connect all vertices");
  }
}

Partition make_partition(std::vector<std::vector<int>> blocks, int n) {
  std::vector<bool> seen(n, false);
  for (const auto& block : blocks) {
    if (block.empty()) throw ValidationError("partition blocks must be nonempty");
    for (int v : block) {
      if (v < 0 || v >= n) throw ValidationError("partition element out of range");
      if (seen[v]) throw ValidationError("partition blocks must be disjoint");
      seen[v] = true;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) throw ValidationError("partition blocks must cover the ground set");
  }
  return Partition{std::move(blocks), n};
}

SymmetricProfile make_symmetric_profile(std::vector<double> f) {
  if (f.size() < 2) throw ValidationError("symmetric profile needs at least f[0], f[1]");
  if (f[0] != 0.0 || f[1] != 0.0) {
    throw ValidationError("symmetric profile must have f[0] = f[1] = 0");
  }
  for (std::size_t t = 2; t < f.size(); ++t) {
    if (!(f[t] > 0.0)) throw ValidationError("symmetric profile needs f[t] > 0 for t >= 2");
  }
  SymmetricProfile profile{std::move(f)};
  const auto report = check_diversity_axioms(make_symmetric_oracle(profile));
  if (!report.passed) {
    const auto& v = report.violations.front();
    throw ValidationError("symmetric profile violates axiom (" + v.axiom +
                          "), witness |A| = " + std::to_string(mask_cardinality(v.a)));
  }
  return profile;
}

double diameter_diversity(const FiniteMetric& d, Mask a) {
  const auto idx = mask_to_indices(a);
  double best = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      best = std::max(best, d.dist(idx[i], idx[j]));
  return best;
}

double steiner_diversity(const FiniteMetric& d, Mask a) {
  const auto terminals = mask_to_indices(a);
  const int t = static_cast<int>(terminals.size());
  if (t <= 1) return 0.0;
  if (t == 2) return d.dist(terminals[0], terminals[1]);
  if (t > 12) throw CapError("Steiner terminal count capped at |A| <= 12");
  const int n = d.n;

  // Dreyfus-Wagner over terminal subsets; the metric is already its own
  // shortest-path closure, so one relaxation pass per subset suffices.
  const int k = t - 1;  // terminals[0..k-1], terminals[k] is the root
  const Mask tfull = full_mask(k);
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(tfull) + 1,
                                      std::vector<double>(n, kInf));
  for (int i = 0; i < k; ++i) {
    for (int v = 0; v < n; ++v) dp[Mask{1} << i][v] = d.dist(terminals[i], v);
  }
  for (Mask s = 1; s <= tfull; ++s) {
    if (mask_cardinality(s) < 2) continue;
    auto& row = dp[s];
    for (Mask sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
      if (sub < (s ^ sub)) continue;  // each split once
      const auto& lo = dp[sub];
      const auto& hi = dp[s ^ sub];
      for (int v = 0; v < n; ++v) row[v] = std::min(row[v], lo[v] + hi[v]);
    }
    for (int v = 0; v < n; ++v) {
      double best = row[v];
      for (int u = 0; u < n; ++u) best = std::min(best, row[u] + d.dist(u, v));
      row[v] = best;
    }
  }
  return dp[tfull][terminals[k]];
}

std::vector<double> steiner_all_subsets(const FiniteMetric& d) {
  const int n = d.n;
  if (n > 14) throw CapError("all-subset Steiner table capped at n <= 14");
  const Mask full = full_mask(n);
  // dp[s][v] = min weight tree spanning s plus v.
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(full) + 1,
                                      std::vector<double>(n, kInf));
  for (int v = 0; v < n; ++v) dp[0][v] = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < n; ++v) dp[Mask{1} << i][v] = d.dist(i, v);
  }
  for (Mask s = 1; s <= full; ++s) {
    if (mask_cardinality(s) < 2) continue;
    auto& row = dp[s];
    for (Mask sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
      if (sub < (s ^ sub)) continue;
      const auto& lo = dp[sub];
      const auto& hi = dp[s ^ sub];
      for (int v = 0; v < n; ++v) row[v] = std::min(row[v], lo[v] + hi[v]);
    }
    for (int v = 0; v < n; ++v) {
      double best = row[v];
      for (int u = 0; u < n; ++u) best = std::min(best, row[u] + d.dist(u, v));
      row[v] = best;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(full) + 1, 0.0);
  for (Mask a = 0; a <= full; ++a) {
    if (mask_cardinality(a) < 2) continue;
    double best = kInf;
    for (int v = 0; v < n; ++v) best = std::min(best, dp[a][v]);
    out[a] = best;
  }
  return out;
}

double hypergraph_steiner(const WeightedHypergraph& h, Mask a) {
  if (mask_cardinality(a) <= 1) return 0.0;
  const int m = static_cast<int>(h.edges.size());
  if (m > 20) throw CapError("hypergraph Steiner capped at |edges| <= 20");

  std::vector<Mask> edge_masks(m);
  std::vector<double> weights(m);
  for (int e = 0; e < m; ++e) {
    edge_masks[e] = indices_to_mask(h.edges[e].vertices, h.n);
    weights[e] = h.edges[e].weight;
  }

  double best = kInf;
  for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
    double w = 0.0;
    Mask covered = 0;
    for (int e = 0; e < m; ++e) {
      if ((pick >> e) & 1u) {
        w += weights[e];
        covered |= edge_masks[e];
      }
    }
    if (w >= best || (a & ~covered) != 0) continue;
    // Connectivity of the chosen edges: grow a component from the first
    // chosen edge by repeatedly absorbing overlapping edges.
    int first = std::countr_zero(pick);
    Mask comp = edge_masks[first];
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < m; ++e) {
        if (((pick >> e) & 1u) && (edge_masks[e] & comp) != 0 &&
            (edge_masks[e] & ~comp) != 0) {
          comp |= edge_masks[e];
          grew = true;
        }
      }
    }
    if (comp != covered) continue;
    best = w;
  }
  if (!std::isfinite(best)) throw ValidationError("subset not coverable by the hypergraph");
  return best;
}

double ball_diversity(const FiniteMetric& d, Mask a) {
  const auto idx = mask_to_indices(a);
  if (idx.size() <= 1) return 0.0;
  double best = kInf;
  for (int x = 0; x < d.n; ++x) {
    double radius = 0.0;
    for (int p : idx) radius = std::max(radius, d.dist(x, p));
    best = std::min(best, radius);
  }
  return 2.0 * best;
}

double tsp_diversity(const FiniteMetric& d, Mask a) {
  const auto idx = mask_to_indices(a);
  const int t = static_cast<int>(idx.size());
  if (t <= 1) return 0.0;
  if (t == 2) return 2.0 * d.dist(idx[0], idx[1]);
  if (t > 14) throw CapError("TSP terminal count capped at |A| <= 14");

  // Held-Karp with idx[0] fixed as the tour anchor.
  const int k = t - 1;
  const Mask tfull = full_mask(k);
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(tfull) + 1,
                                      std::vector<double>(k, kInf));
  for (int j = 0; j < k; ++j) dp[Mask{1} << j][j] = d.dist(idx[0], idx[j + 1]);
  for (Mask s = 1; s <= tfull; ++s) {
    for (int j = 0; j < k; ++j) {
      if (!mask_contains(s, j) || !std::isfinite(dp[s][j])) continue;
      for (int l = 0; l < k; ++l) {
        if (mask_contains(s, l)) continue;
        const Mask ns = s | (Mask{1} << l);
        dp[ns][l] = std::min(dp[ns][l], dp[s][j] + d.dist(idx[j + 1], idx[l + 1]));
      }
    }
  }
  double best = kInf;
  for (int j = 0; j < k; ++j) best = std::min(best, dp[tfull][j] + d.dist(idx[j + 1], idx[0]));
  return best;
}

double partition_diversity(const Partition& p, Mask a) {
  int touched = 0;
  for (const auto& block : p.blocks) {
    for (int v : block) {
      if (mask_contains(a, v)) {
        ++touched;
        break;
      }
    }
    if (touched >= 2) return 1.0;
  }
  return 0.0;
}

double discrete_diversity(Mask a) { return mask_cardinality(a) > 1 ? 1.0 : 0.0; }

double cardinality_diversity(Mask a) {
  const int card = mask_cardinality(a);
  return card > 1 ? static_cast<double>(card - 1) : 0.0;
}

double symmetric_diversity(const SymmetricProfile& profile, Mask a) {
  const int card = mask_cardinality(a);
  if (card > profile.n()) throw ValidationError("subset larger than the symmetric profile");
  return profile.f[card];
}

DiversityOracle make_diameter_oracle(const FiniteMetric& d) {
  return DiversityOracle(d.n, "diameter", [d](Mask a) { return diameter_diversity(d, a); });
}

DiversityOracle make_steiner_oracle(const FiniteMetric& d) {
  return DiversityOracle(d.n, "steiner", [d](Mask a) { return steiner_diversity(d, a); });
}

DiversityOracle make_hypergraph_oracle(const WeightedHypergraph& h) {
  validate_hypergraph(h);
  return DiversityOracle(h.n, "hypergraph", [h](Mask a) { return hypergraph_steiner(h, a); });
}

DiversityOracle make_ball_oracle(const FiniteMetric& d) {
  return DiversityOracle(d.n, "ball", [d](Mask a) { return ball_diversity(d, a); });
}

DiversityOracle make_tsp_oracle(const FiniteMetric& d) {
  return DiversityOracle(d.n, "tsp", [d](Mask a) { return tsp_diversity(d, a); });
}

DiversityOracle make_partition_oracle(const Partition& p) {
  if (p.blocks.size() < 2) {
    throw ValidationError("single-block partition fails axiom (ii); not a diversity");
  }
  return DiversityOracle(p.n, "partition", [p](Mask a) { return partition_diversity(p, a); });
}

DiversityOracle make_discrete_oracle(int n) {
  return DiversityOracle(n, "discrete", [](Mask a) { return discrete_diversity(a); });
}

DiversityOracle make_cardinality_oracle(int n) {
  return DiversityOracle(n, "cardinality", [](Mask a) { return cardinality_diversity(a); });
}

DiversityOracle make_symmetric_oracle(const SymmetricProfile& profile) {
  return DiversityOracle(profile.n(), "symmetric",
                         [profile](Mask a) { return symmetric_diversity(profile, a); });
}

DiversityOracle make_tree_oracle(const WeightedTree& t, int n) {
  validate_tree(t);
  if (static_cast<int>(t.placement.size()) < n) {
    throw ValidationError("tree oracle needs a placement for every ground point");
  }
  return DiversityOracle(n, "tree", [t](Mask a) { return tree_diversity(t, a); });
}

DiversityOracle make_table_oracle(int n, std::vector<double> values) {
  if (n > 24) throw CapError("table oracle capped at n <= 24");
  const std::size_t expected = static_cast<std::size_t>(full_mask(n)) + 1;
  if (values.size() != expected) {
    throw ValidationError("table oracle needs one value per subset mask");
  }
  auto table = std::make_shared<std::vector<double>>(std::move(values));
  return DiversityOracle(n, "table", [table](Mask a) { return (*table)[a]; });
}

}  // namespace divl1
