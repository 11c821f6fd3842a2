#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kmaj {

// A set of vertex ids, kept sorted ascending. Small and copy-friendly;
// bitmask conversions exist for the enumeration fast paths (ids < 64 only).
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);  // sorts; rejects negatives and duplicates
  VertexSet(std::initializer_list<int> members)
      : VertexSet(std::vector<int>(members)) {}

  static VertexSet full(int n);
  static VertexSet from_mask(std::uint64_t mask);
  std::uint64_t to_mask() const;  // throws if any id >= 64

  bool contains(int v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

private:
  std::vector<int> members_;
};

}  // namespace kmaj
