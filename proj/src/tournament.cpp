#include "kmaj/tournament.hpp"

#include <stdexcept>
#include <string>

namespace kmaj {

WeightedTournament::WeightedTournament(int k, VertexTable vertices,
                                       const std::vector<Arc>& arcs)
    : k_(k), vertices_(std::move(vertices)) {
  if (k_ < 1) throw std::invalid_argument("k must be at least 1");
  const int n = vertices_.size();
  w_.assign(static_cast<size_t>(n) * n, 0);
  long long expected = static_cast<long long>(n) * (n - 1) / 2;
  if (static_cast<long long>(arcs.size()) != expected)
    throw std::invalid_argument("tournament needs exactly n(n-1)/2 arcs, got " +
                                std::to_string(arcs.size()));
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.from == a.to) throw std::invalid_argument("self-arc not allowed");
    if (a.weight < k_ || a.weight > max_arc_weight())
      throw std::invalid_argument("arc weight " + std::to_string(a.weight) +
                                  " outside [k, 2k-1]");
    if (w_[size_t(a.from) * n + a.to] != 0 || w_[size_t(a.to) * n + a.from] != 0)
      throw std::invalid_argument("pair {" + vertices_.name(a.from) + ", " +
                                  vertices_.name(a.to) + "} has more than one arc");
    w_[size_t(a.from) * n + a.to] = a.weight;
  }
}

long long WeightedTournament::weight(int u, int v) const {
  if (u < 0 || u >= n() || v < 0 || v >= n())
    throw std::invalid_argument("vertex id out of range");
  if (u == v) return 0;
  return w_[size_t(u) * n() + v];
}

std::vector<Arc> WeightedTournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(size_t(n()) * (n() - 1) / 2);
  for (int u = 0; u < n(); ++u)
    for (int v = 0; v < n(); ++v)
      if (w_[size_t(u) * n() + v] > 0) out.push_back({u, v, w_[size_t(u) * n() + v]});
  return out;
}

bool WeightedTournament::operator==(const WeightedTournament& o) const {
  if (k_ != o.k_ || n() != o.n()) return false;
  for (int u = 0; u < n(); ++u) {
    auto ou = o.vertices_.find(vertices_.name(u));
    if (!ou) return false;
    for (int v = 0; v < n(); ++v) {
      if (u == v) continue;
      auto ov = o.vertices_.find(vertices_.name(v));
      if (!ov) return false;
      if (weight(u, v) != o.weight(*ou, *ov)) return false;
    }
  }
  return true;
}

WeightedTournament tournament_from_profile(const Profile& p) {
  const int n = p.n();
  std::vector<Arc> arcs;
  arcs.reserve(size_t(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int c = preference_count(p, u, v);
      // 2k-1 voters, no ties: one side reaches k
      if (c >= p.k())
        arcs.push_back({u, v, c});
      else
        arcs.push_back({v, u, 2 * p.k() - 1 - c});
    }
  }
  return WeightedTournament(p.k(), p.vertices(), arcs);
}

}  // namespace kmaj
