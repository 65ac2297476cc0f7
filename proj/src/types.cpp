#include "divl1/types.hpp"

#include <unordered_set>

namespace divl1 {

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(mask_cardinality(m)));
  while (m != 0) {
    const int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

Mask indices_to_mask(const std::vector<int>& indices, int n) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 0 || i >= n) {
      throw ValidationError("subset index " + std::to_string(i) + " out of range [0, " +
                            std::to_string(n) + ")");
    }
    m |= Mask{1} << i;
  }
  return m;
}

GroundSet GroundSet::of_size(int n) {
  if (n < 1) throw ValidationError("ground set needs at least one point");
  return GroundSet{n, {}};
}

GroundSet GroundSet::with_labels(std::vector<std::string> labels) {
  if (labels.empty()) throw ValidationError("ground set needs at least one point");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw ValidationError("duplicate ground-set label: " + l);
    }
  }
  GroundSet g;
  g.n = static_cast<int>(labels.size());
  g.labels = std::move(labels);
  return g;
}

}  // namespace divl1
