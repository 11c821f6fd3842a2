#include "kmaj/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmaj {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0) throw std::invalid_argument("vertex set contains a negative id");
    if (i > 0 && members_[i] == members_[i - 1])
      throw std::invalid_argument("vertex set contains a duplicate id");
  }
}

VertexSet VertexSet::full(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return VertexSet(std::move(m));
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<int> m;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) m.push_back(i);
  return VertexSet(std::move(m));
}

std::uint64_t VertexSet::to_mask() const {
  std::uint64_t mask = 0;
  for (int v : members_) {
    if (v >= 64) throw std::invalid_argument("vertex id too large for a 64-bit mask");
    mask |= std::uint64_t(1) << v;
  }
  return mask;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

}  // namespace kmaj
