#pragma once

#include "divl1/types.hpp"

namespace divl1 {

/// Symmetric distance matrix on n distinct points. Construct through
/// validate_metric; the invariants (zero diagonal, symmetry, positive
/// off-diagonal, triangle inequality) are assumed everywhere else.
struct FiniteMetric {
  int n = 0;
  Matrix dist;  // n x n

  double operator()(int i, int j) const { return dist(i, j); }
  double diameter() const;
  double min_positive() const;
};

struct MetricViolation {
  std::string kind;  // asymmetry | diagonal | negative | zero-off-diagonal | triangle
  int i = -1, j = -1, k = -1;
  double lhs = 0.0, rhs = 0.0;
};

std::vector<MetricViolation> collect_metric_violations(const Matrix& dist);

/// Validates and wraps a distance matrix; throws ValidationError listing
/// every violated condition with witness indices.
FiniteMetric validate_metric(const Matrix& dist);

}  // namespace divl1
