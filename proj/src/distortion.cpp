#include "divl1/distortion.hpp"

#include "divl1/random.hpp"

#include <set>

namespace divl1 {

namespace {

struct RatioScan {
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  Mask witness_min = 0;
  Mask witness_max = 0;
  bool unbounded = false;
  Mask zero_witness = 0;
  std::uint64_t scanned = 0;

  void accept(const DiversityOracle& delta, const PointEmbedding& emb, Mask a) {
    const double source = delta(a);
    const double embedded = eval_l1_diversity(emb, a);
    ++scanned;
    if (source <= 0.0) {
      throw ValidationError("source value is zero on a subset of size >= 2; not a diversity");
    }
    if (embedded <= 0.0) {
      if (!unbounded) {
        unbounded = true;
        zero_witness = a;
      }
      return;
    }
    const double r = embedded / source;
    if (r < min_ratio || (r == min_ratio && a < witness_min)) {
      min_ratio = r;
      witness_min = a;
    }
    if (r > max_ratio || (r == max_ratio && a < witness_max)) {
      max_ratio = r;
      witness_max = a;
    }
  }

  DistortionReport finish(std::string mode) const {
    DistortionReport report;
    report.mode = std::move(mode);
    report.subsets_scanned = scanned;
    if (unbounded) {
      report.unbounded = true;
      report.witness_min = zero_witness;
      report.witness_max = witness_max;
      return report;
    }
    report.c2 = max_ratio;
    report.c1 = 1.0 / min_ratio;
    report.c = max_ratio / min_ratio;
    report.witness_min = witness_min;
    report.witness_max = witness_max;
    return report;
  }
};

}  // namespace

DistortionReport exact_distortion(const DiversityOracle& delta, const PointEmbedding& emb) {
  const int n = delta.size();
  if (n > 24) throw CapError("exact distortion scan capped at n <= 24");
  if (emb.n != n) throw ValidationError("embedding and diversity sizes differ");
  RatioScan scan;
  const Mask full = full_mask(n);
  for (Mask a = 0; a <= full; ++a) {
    if (mask_cardinality(a) < 2) continue;
    scan.accept(delta, emb, a);
  }
  return scan.finish("exact");
}

DistortionReport sampled_distortion(const DiversityOracle& delta, const PointEmbedding& emb,
                                    std::uint64_t count, std::uint64_t seed) {
  const int n = delta.size();
  if (emb.n != n) throw ValidationError("embedding and diversity sizes differ");
  if (count < 1) throw ValidationError("sample count must be positive");

  std::set<Mask> masks;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) masks.insert((Mask{1} << i) | (Mask{1} << j));
  masks.insert(full_mask(n));

  // Uniform over cardinalities 2..n, then uniform over masks of that
  // cardinality; extremal ratios tend to sit at pairs and at X, which are
  // forced above.
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> card_dist(2, n);
  std::vector<int> pool(n);
  const std::uint64_t budget = count;
  for (std::uint64_t s = 0; s < budget; ++s) {
    const int card = card_dist(rng);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    Mask a = 0;
    for (int i = 0; i < card; ++i) a |= Mask{1} << pool[i];
    masks.insert(a);
  }

  RatioScan scan;
  for (Mask a : masks) scan.accept(delta, emb, a);
  auto report = scan.finish("sampled");
  report.seed = seed;
  report.sample_count = count;
  return report;
}

SandwichResult sandwich_check(const DiversityOracle& lower, const DiversityOracle& mid,
                              const DiversityOracle& upper, double factor) {
  const int n = lower.size();
  if (mid.size() != n || upper.size() != n) {
    throw ValidationError("sandwich oracles share one ground set");
  }
  if (n > 12) throw CapError("sandwich scan capped at n <= 12");
  SandwichResult result;
  const Mask full = full_mask(n);
  for (Mask a = 0; a <= full; ++a) {
    const double lo = lower(a);
    const double md = mid(a);
    const double hi = factor * upper(a);
    if (lo > md + axiom_tolerance(lo, md) || md > hi + axiom_tolerance(md, hi)) {
      result.passed = false;
      result.witness = a;
      result.lower = lo;
      result.mid = md;
      result.upper = hi;
      return result;
    }
  }
  return result;
}

StretchStats ensemble_stretch(const FiniteMetric& d, const TreeEnsemble& ensemble) {
  if (ensemble.trees.empty()) throw ValidationError("ensemble is empty");
  const int n = d.n;
  StretchStats stats;
  stats.sample_count = static_cast<int>(ensemble.trees.size());
  stats.mean_stretch = Matrix::Zero(n, n);
  for (const auto& t : ensemble.trees) {
    const Matrix dt = tree_ground_distances(t);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double stretch = dt(i, j) / d.dist(i, j);
        stats.mean_stretch(i, j) += stretch;
        stats.max_single_stretch = std::max(stats.max_single_stretch, stretch);
      }
    }
  }
  stats.mean_stretch /= static_cast<double>(stats.sample_count);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      stats.mean_stretch(j, i) = stats.mean_stretch(i, j);
      stats.max_mean_stretch = std::max(stats.max_mean_stretch, stats.mean_stretch(i, j));
    }
  }
  return stats;
}

}  // namespace divl1
