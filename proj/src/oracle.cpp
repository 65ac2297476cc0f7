#include "divl1/oracle.hpp"

namespace divl1 {

DiversityOracle::DiversityOracle(int n, std::string kind, std::function<double(Mask)> eval)
    : n_(n), kind_(std::move(kind)), eval_(std::move(eval)), cache_(std::make_shared<Cache>()) {
  if (n_ < 1) throw ValidationError("oracle ground set must be nonempty");
  if (n_ > 32) throw CapError("oracle ground set capped at n <= 32");
}

double DiversityOracle::operator()(Mask a) const {
  if (a > full_mask(n_)) {
    throw ValidationError("subset mask out of range for ground set of size " +
                          std::to_string(n_));
  }
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->values.find(a);
    if (it != cache_->values.end()) return it->second;
  }
  const double v = eval_(a);
  std::lock_guard lock(cache_->mu);
  cache_->values.emplace(a, v);
  return v;
}

double eval_l1_diversity(const Matrix& coords, Mask a) {
  const auto rows = mask_to_indices(a);
  for (int r : rows) {
    if (r >= coords.rows()) throw ValidationError("subset index out of range for embedding");
  }
  if (rows.size() <= 1) return 0.0;
  double total = 0.0;
  for (int c = 0; c < coords.cols(); ++c) {
    double lo = coords(rows[0], c), hi = lo;
    for (std::size_t t = 1; t < rows.size(); ++t) {
      const double v = coords(rows[t], c);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    total += hi - lo;
  }
  return total;
}

double eval_l1_diversity(const PointEmbedding& emb, Mask a) {
  return eval_l1_diversity(emb.coords, a);
}

DiversityOracle make_l1_oracle(const Matrix& coords) {
  Matrix c = coords;
  return DiversityOracle(static_cast<int>(coords.rows()), "l1",
                         [c](Mask a) { return eval_l1_diversity(c, a); });
}

namespace {

// Full triangle-axiom coverage via two complete instance families:
//   single-point steps  delta(A) <= delta(A + x) + delta({x})   (B empty, C = {x})
//   overlapping unions  delta(S1 | S2) <= delta(S1) + delta(S2) (C = S1 & S2)
// Given axiom (ii), any triple (A, B, C) follows by chaining steps up to
// A | B | C and one union with S1 = A | C, S2 = B | C.
void scan_triangle(const std::vector<double>& value, int n, AxiomReport& report,
                   std::size_t max_violations) {
  const Mask full = full_mask(n);
  for (Mask a = 0; a <= full; ++a) {
    for (int x = 0; x < n; ++x) {
      if (mask_contains(a, x)) continue;
      const Mask ax = a | (Mask{1} << x);
      const Mask sx = Mask{1} << x;
      const double lhs = value[a];
      const double rhs = value[ax] + value[sx];
      if (lhs > rhs + axiom_tolerance(lhs, rhs) &&
          report.violations.size() < max_violations) {
        report.violations.push_back({"iii", a, 0, sx, lhs, rhs});
      }
      if (report.monotone && value[a] > value[ax] + axiom_tolerance(value[a], value[ax])) {
        report.monotone = false;
        report.monotone_witness_a = a;
        report.monotone_witness_b = ax;
      }
    }
  }
  for (Mask s1 = 0; s1 <= full; ++s1) {
    for (Mask s2 = s1; s2 <= full; ++s2) {
      const Mask c = s1 & s2;
      if (c == 0) continue;
      const double lhs = value[s1 | s2];
      const double rhs = value[s1] + value[s2];
      if (lhs > rhs + axiom_tolerance(lhs, rhs) &&
          report.violations.size() < max_violations) {
        report.violations.push_back({"iii", s1, s2, c, lhs, rhs});
      }
    }
  }
}

}  // namespace

AxiomReport check_diversity_axioms(const DiversityOracle& delta, std::size_t max_violations) {
  const int n = delta.size();
  if (n > 12) throw CapError("axiom scan capped at n <= 12");
  const Mask full = full_mask(n);

  std::vector<double> value(static_cast<std::size_t>(full) + 1);
  for (Mask a = 0; a <= full; ++a) value[a] = delta(a);

  AxiomReport report;
  for (Mask a = 0; a <= full && report.violations.size() < max_violations; ++a) {
    const int card = mask_cardinality(a);
    if (value[a] < -axiom_tolerance(value[a], 0.0)) {
      report.violations.push_back({"i", a, 0, 0, value[a], 0.0});
    }
    if (card <= 1 && std::abs(value[a]) > 1e-12) {
      report.violations.push_back({"ii", a, 0, 0, value[a], 0.0});
    }
    if (card >= 2 && value[a] <= 0.0) {
      report.violations.push_back({"ii", a, 0, 0, value[a], 0.0});
    }
  }
  scan_triangle(value, n, report, max_violations);
  report.passed = report.violations.empty();
  return report;
}

FiniteMetric induced_metric(const DiversityOracle& delta) {
  const int n = delta.size();
  Matrix dist = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = delta((Mask{1} << i) | (Mask{1} << j));
      dist(i, j) = v;
      dist(j, i) = v;
    }
  }
  return validate_metric(dist);
}

DiversityOracle combine(const std::vector<double>& weights,
                        const std::vector<DiversityOracle>& parts) {
  if (weights.size() != parts.size() || parts.empty()) {
    throw ValidationError("combine needs matching nonempty weight and part lists");
  }
  const int n = parts.front().size();
  bool any_positive = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != n) throw ValidationError("combine parts share one ground set");
    if (weights[i] < 0.0) throw ValidationError("combine weights must be nonnegative");
    any_positive = any_positive || weights[i] > 0.0;
  }
  if (!any_positive) throw ValidationError("combine needs at least one positive weight");
  auto w = weights;
  auto p = parts;
  return DiversityOracle(n, "combination", [w, p](Mask a) {
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) total += w[i] * p[i](a);
    return total;
  });
}

}  // namespace divl1
