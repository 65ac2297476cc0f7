#include "divl1/metric.hpp"

#include <sstream>

namespace divl1 {

double FiniteMetric::diameter() const { return dist.maxCoeff(); }

double FiniteMetric::min_positive() const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::min(best, dist(i, j));
  return best;
}

std::vector<MetricViolation> collect_metric_violations(const Matrix& dist) {
  std::vector<MetricViolation> out;
  const int n = static_cast<int>(dist.rows());
  if (dist.cols() != n) {
    out.push_back({"not-square", -1, -1, -1, double(dist.rows()), double(dist.cols())});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (dist(i, i) != 0.0) out.push_back({"diagonal", i, i, -1, dist(i, i), 0.0});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist(i, j) != dist(j, i))
        out.push_back({"asymmetry", i, j, -1, dist(i, j), dist(j, i)});
      if (dist(i, j) < 0.0) out.push_back({"negative", i, j, -1, dist(i, j), 0.0});
      else if (dist(i, j) == 0.0) out.push_back({"zero-off-diagonal", i, j, -1, 0.0, 0.0});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double lhs = dist(i, k);
        const double rhs = dist(i, j) + dist(j, k);
        if (lhs > rhs + 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)})) {
          out.push_back({"triangle", i, j, k, lhs, rhs});
        }
      }
    }
  }
  return out;
}

FiniteMetric validate_metric(const Matrix& dist) {
  auto violations = collect_metric_violations(dist);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid metric:";
    for (const auto& v : violations) {
      msg << " [" << v.kind << " at (" << v.i << "," << v.j;
      if (v.k >= 0) msg << "," << v.k;
      msg << ") lhs=" << v.lhs << " rhs=" << v.rhs << "]";
    }
    throw ValidationError(msg.str());
  }
  return FiniteMetric{static_cast<int>(dist.rows()), dist};
}

}  // namespace divl1
