#pragma once

#include "kmaj/profile.hpp"
#include "kmaj/vertex_set.hpp"

#include <array>
#include <utility>
#include <vector>

namespace kmaj {

// The clockwise tournament CW(n). This module keeps the classical 1-based
// vertex arithmetic (v_1..v_n, indices wrap mod n); everything it hands back
// in a VertexSet or LinearOrder uses 0-based ids, v_i <-> id i-1.
struct ClockwiseSpec {
  int n;
};

// 1-based: does v_i -> v_j hold in CW(n)?
bool clockwise_beats(const ClockwiseSpec& spec, int i, int j);

// All arcs of CW(n), 0-based, sorted by (from, to).
std::vector<std::pair<int, int>> clockwise_tournament(const ClockwiseSpec& spec);

// Three orders whose 2-majority tournament is CW(n) with every weight 2
// (n = 1 and n = 2 use their direct special cases).
std::array<LinearOrder, 3> clockwise_orders(const ClockwiseSpec& spec);

// Pads a 3-order realization whose weights are all 2 up to 2k-1 orders whose
// induced tournament is unchanged with every weight exactly k: appends k-2
// copies of the ranking v_n..v_1 and k-2 copies of v_1..v_n. Vertices are
// named v1..vn. Requires k >= 2.
Profile lift_orders(const std::array<LinearOrder, 3>& orders, int k);

// lift_orders applied to clockwise_orders, as bare rankings (for reuse as
// construction blocks).
std::vector<LinearOrder> lifted_clockwise_orders(const ClockwiseSpec& spec, int k);

// X_i = {v_i, ..., v_{i+floor((n-1)/2)}} (indices mod n); Y_i = V - X_i.
// i is 1-based.
VertexSet x_set(const ClockwiseSpec& spec, int i);
VertexSet y_set(const ClockwiseSpec& spec, int i);

// crank: the first v_{i-l} (l = 0, 1, ...) outside s; throws if s is the
// full set. flip: i + ceil(n/2) mod n. Both take and return 1-based indices.
int crank(const ClockwiseSpec& spec, const VertexSet& s, int i);
int flip(const ClockwiseSpec& spec, int i);

struct LeastDominated {
  int vertex;      // 0-based id
  int dominators;  // how many members of s beat it
};

// The vertex outside s with the fewest dominators inside s (ties: smallest
// id). s must be a proper subset.
LeastDominated least_dominated_outside(const ClockwiseSpec& spec, const VertexSet& s);

}  // namespace kmaj
