#include "kmaj/profile.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace kmaj {

VertexTable::VertexTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw std::invalid_argument("vertex name must be non-empty");
    for (unsigned char c : name)
      if (std::isspace(c)) throw std::invalid_argument("vertex name '" + name + "' contains whitespace");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate vertex name '" + name + "'");
  }
}

VertexTable VertexTable::numbered(int n, std::string_view prefix) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VertexTable(std::move(names));
}

const std::string& VertexTable::name(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("vertex id out of range");
  return names_[v];
}

std::optional<int> VertexTable::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

LinearOrder::LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
  const int n = static_cast<int>(ranking_.size());
  position_.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    int v = ranking_[pos];
    if (v < 0 || v >= n) throw std::invalid_argument("order lists a vertex id out of range");
    if (position_[v] != -1) throw std::invalid_argument("order lists a vertex twice");
    position_[v] = pos;
  }
}

int LinearOrder::position(int v) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("vertex id out of range");
  return position_[v];
}

Profile::Profile(int k, std::vector<LinearOrder> orders, VertexTable vertices)
    : k_(k), orders_(std::move(orders)), vertices_(std::move(vertices)) {
  if (k_ < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<int>(orders_.size()) != 2 * k_ - 1)
    throw std::invalid_argument("profile needs exactly 2k-1 orders, got " +
                                std::to_string(orders_.size()));
  for (const auto& o : orders_)
    if (o.size() != vertices_.size())
      throw std::invalid_argument("order length does not match the vertex set");
}

bool Profile::operator==(const Profile& o) const {
  if (k_ != o.k_ || n() != o.n()) return false;
  for (int i = 0; i < order_count(); ++i) {
    const auto& a = orders_[i].ranking();
    const auto& b = o.orders_[i].ranking();
    for (size_t j = 0; j < a.size(); ++j)
      if (vertices_.name(a[j]) != o.vertices_.name(b[j])) return false;
  }
  return true;
}

int preference_count(const Profile& p, int u, int v) {
  if (u == v) throw std::invalid_argument("preference_count needs two distinct vertices");
  if (u < 0 || u >= p.n() || v < 0 || v >= p.n())
    throw std::invalid_argument("vertex id out of range");
  int count = 0;
  for (const auto& order : p.orders())
    if (order.prefers(u, v)) ++count;
  return count;
}

}  // namespace kmaj
