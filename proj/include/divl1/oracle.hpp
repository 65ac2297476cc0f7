#pragma once

#include "divl1/metric.hpp"
#include "divl1/types.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace divl1 {

/// Evaluates a diversity delta(A) for any subset mask of the ground set.
/// Values are memoized per oracle; evaluation is thread-safe and
/// deterministic (same mask, same value).
class DiversityOracle {
 public:
  DiversityOracle() = default;
  DiversityOracle(int n, std::string kind, std::function<double(Mask)> eval);

  int size() const { return n_; }
  const std::string& kind() const { return kind_; }

  double operator()(Mask a) const;

 private:
  int n_ = 0;
  std::string kind_;
  std::function<double(Mask)> eval_;

  struct Cache {
    std::mutex mu;
    std::unordered_map<Mask, double> values;
  };
  std::shared_ptr<Cache> cache_;
};

/// Sum over coordinates of the coordinate range of the selected rows.
double eval_l1_diversity(const Matrix& coords, Mask a);
double eval_l1_diversity(const PointEmbedding& emb, Mask a);

DiversityOracle make_l1_oracle(const Matrix& coords);

struct AxiomViolation {
  std::string axiom;  // "i" | "ii" | "iii"
  Mask a = 0, b = 0, c = 0;
  double lhs = 0.0, rhs = 0.0;
};

struct AxiomReport {
  bool passed = false;
  std::vector<AxiomViolation> violations;
  bool monotone = true;
  Mask monotone_witness_a = 0, monotone_witness_b = 0;
};

/// Exhaustive axiom scan, n <= 12. The triangle axiom is checked through
/// its complete reduction to single-point extension steps plus overlapping
/// unions; every reported violation is a genuine axiom instance.
AxiomReport check_diversity_axioms(const DiversityOracle& delta,
                                   std::size_t max_violations = 64);

/// d(x, y) = delta({x, y}); validates the result.
FiniteMetric induced_metric(const DiversityOracle& delta);

/// Nonnegative linear combination of diversities on a shared ground set.
DiversityOracle combine(const std::vector<double>& weights,
                        const std::vector<DiversityOracle>& parts);

inline double axiom_tolerance(double lhs, double rhs) {
  return 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace divl1
