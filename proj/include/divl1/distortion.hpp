#pragma once

#include "divl1/embed.hpp"
#include "divl1/oracle.hpp"

namespace divl1 {

/// Optimal scaling constants for an unscaled embedding: c2 = max ratio,
/// c1 = 1 / min ratio, c = c1 * c2 = (max ratio) / (min ratio).
struct DistortionReport {
  double c1 = 0.0;
  double c2 = 0.0;
  double c = 0.0;
  bool unbounded = false;  // zero embedded value on a subset with positive delta
  Mask witness_min = 0;    // subset achieving the minimal ratio (or the zero witness)
  Mask witness_max = 0;
  std::string mode;        // "exact" | "sampled"
  std::uint64_t subsets_scanned = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> sample_count;
};

/// Ratio scan over every mask with |A| >= 2 (n <= 24).
DistortionReport exact_distortion(const DiversityOracle& delta, const PointEmbedding& emb);

/// Same statistics over sampled masks; all pairs and the full set are
/// always included, so the sampled c is a lower bound on the exact c.
DistortionReport sampled_distortion(const DiversityOracle& delta, const PointEmbedding& emb,
                                    std::uint64_t count, std::uint64_t seed);

struct SandwichResult {
  bool passed = true;
  Mask witness = 0;
  double lower = 0.0, mid = 0.0, upper = 0.0;
};

/// Checks lower(A) <= mid(A) <= factor * upper(A) for every subset
/// (n <= 12); reports the first violating mask.
SandwichResult sandwich_check(const DiversityOracle& lower, const DiversityOracle& mid,
                              const DiversityOracle& upper, double factor);

struct StretchStats {
  Matrix mean_stretch;        // per-pair mean of d_tau / d across trees
  double max_mean_stretch = 0.0;
  double max_single_stretch = 0.0;
  int sample_count = 0;
};

StretchStats ensemble_stretch(const FiniteMetric& d, const TreeEnsemble& ensemble);

}  // namespace divl1
