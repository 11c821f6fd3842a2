#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmaj {

// Vertex display names. Indices are the contiguous range 0..size()-1; names
// must be unique, non-empty and whitespace-free.
class VertexTable {
public:
  VertexTable() = default;
  explicit VertexTable(std::vector<std::string> names);
  // prefix1, prefix2, ..., prefixN
  static VertexTable numbered(int n, std::string_view prefix = "v");

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const;
  std::optional<int> find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const VertexTable&) const = default;

private:
  std::vector<std::string> names_;
};

// A linear order over vertices 0..n-1: the ranking lists every vertex once,
// most preferred first.
class LinearOrder {
public:
  explicit LinearOrder(std::vector<int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }
  int position(int v) const;  // 0 = most preferred
  bool prefers(int u, int v) const { return position(u) < position(v); }

  bool operator==(const LinearOrder& o) const { return ranking_ == o.ranking_; }

private:
  std::vector<int> ranking_;
  std::vector<int> position_;
};

// A voter profile: exactly 2k-1 linear orders over a shared candidate set.
class Profile {
public:
  Profile(int k, std::vector<LinearOrder> orders, VertexTable vertices);

  int k() const { return k_; }
  int n() const { return vertices_.size(); }
  int order_count() const { return static_cast<int>(orders_.size()); }
  const std::vector<LinearOrder>& orders() const { return orders_; }
  const VertexTable& vertices() const { return vertices_; }

  // name-based: equal k and identical name sequences order by order
  bool operator==(const Profile& o) const;

private:
  int k_;
  std::vector<LinearOrder> orders_;
  VertexTable vertices_;
};

// Number of orders in p ranking u above v. Throws on u == v or unknown ids.
int preference_count(const Profile& p, int u, int v);

}  // namespace kmaj
