#pragma once

#include "kmaj/profile.hpp"
#include "kmaj/rational.hpp"
#include "kmaj/vertex_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kmaj {

// One ballot row of block labels, most preferred first.
using PatternRow = std::vector<std::string>;

// A block's contents: its global vertex ids, ordered per ballot. A block may
// be empty (no vertices), in which case it contributes nothing to any ballot.
struct BlockOrders {
  std::string label;
  std::vector<std::vector<int>> per_ballot;  // 2k-1 rankings of the block's ids
};

// Concatenates block-internal orders following the per-ballot label pattern.
// Every row must list every block exactly once; block id sets must partition
// 0..n-1.
Profile compose_orders(const std::vector<PatternRow>& pattern,
                       const std::vector<BlockOrders>& blocks, int k,
                       VertexTable vertices);

// A profile whose tournament has a dominating set with approval gap exactly
// q: 2k-1 identical orders v_1 > ... > v_n over n = den(q)*(2k-1) + 1
// vertices, paired with D = V - {v_{num(q)+1}} (q = 0 degenerates to a single
// vertex with D = V). Requires 0 <= q <= 2k-1.
std::pair<Profile, VertexSet> gap_realization(const Rational& q, int k);

// A profile whose tournament satisfies gamma_w = q exactly.
// Requires k >= 2 and k/2 <= q <= 2k-1.
Profile gamma_realization(const Rational& q, int k);

// Case 2 scaling of q = x/y: the smallest multiple of the reduced fraction
// with x > y and k*y/(2x) < (ky-1)/(ky). Exposed for inspection/tests.
std::pair<long long, long long> case2_parameters(const Rational& q, int k);

// 2k+1 vertices achieving gamma_w = k - 1/2: a weight-k clockwise block A on
// 2k-1 vertices plus b and c, with b->A, A->c, c->b all of weight k.
Profile half_gap_construction(int k);

// Three vertices a, b, c with arcs a->b: 2q, b->c: k, c->a: k, so the
// dominating-set gaps are k/2, k/2, q and 0 and gamma_w = q. Requires
// k >= 2, 2q integral and k/2 <= q <= k-1.
Profile three_vertex_construction(const Rational& q, int k);

// Minimum vertex count m(q, k) of a k-majority tournament with gamma_w = q,
// where known: den(q)+1 for k <= q <= 2k-1, 3 for k/2 <= q <= k-1 with 2q
// integral, otherwise unknown (nullopt). Requires k/2 <= q <= 2k-1.
std::optional<long long> min_vertices_formula(const Rational& q, int k);

}  // namespace kmaj
