#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divl1 {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Subset of a ground set [0, n), one bit per point. Exhaustive scans
/// cap n at 24, so 32 bits suffice.
using Mask = std::uint32_t;

inline int mask_cardinality(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline bool mask_contains(Mask m, int i) { return (m >> i) & 1u; }

std::vector<int> mask_to_indices(Mask m);
Mask indices_to_mask(const std::vector<int>& indices, int n);

/// Raised when a documented desk-scale cap (subset scan size, terminal
/// count, edge count) is exceeded.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when input data violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // empty or length n, distinct

  static GroundSet of_size(int n);
  static GroundSet with_labels(std::vector<std::string> labels);
};

/// n points in R^k, rows are points.
struct PointEmbedding {
  int n = 0;
  int k = 0;
  Matrix coords;  // n x k
  std::string method;
  std::optional<std::uint64_t> seed;
};

}  // namespace divl1
