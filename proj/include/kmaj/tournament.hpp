#pragma once

#include "kmaj/profile.hpp"

#include <vector>

namespace kmaj {

struct Arc {
  int from;
  int to;
  long long weight;

  bool operator==(const Arc&) const = default;
};

// Complete directed graph from a k-majority vote: exactly one arc per
// unordered pair, weight = number of supporting orders, always in [k, 2k-1].
class WeightedTournament {
public:
  WeightedTournament(int k, VertexTable vertices, const std::vector<Arc>& arcs);

  int n() const { return vertices_.size(); }
  int k() const { return k_; }
  long long max_arc_weight() const { return 2LL * k_ - 1; }
  const VertexTable& vertices() const { return vertices_; }

  bool has_arc(int u, int v) const { return weight(u, v) > 0; }
  long long weight(int u, int v) const;  // 0 when the arc is absent
  std::vector<Arc> arcs() const;         // sorted by (from, to) id

  // name-based: equal k and the same weighted arcs under display names
  bool operator==(const WeightedTournament& o) const;

private:
  int k_;
  VertexTable vertices_;
  std::vector<long long> w_;  // dense n*n, w_[u*n+v] = weight of u->v or 0
};

WeightedTournament tournament_from_profile(const Profile& p);

}  // namespace kmaj
