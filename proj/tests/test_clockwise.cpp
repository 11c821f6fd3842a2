#include "doctest.h"

#include "kmaj/clockwise.hpp"
#include "kmaj/tournament.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace kmaj;

namespace {

// every subset of {0..n-1} as a VertexSet
std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    out.push_back(VertexSet::from_mask(mask));
  return out;
}

}  // namespace

TEST_CASE("arcs of CW(5), derived by hand") {
  std::vector<std::pair<int, int>> want{
      {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
      {2, 4}, {3, 0}, {3, 4}, {4, 0}, {4, 1}};
  CHECK(clockwise_tournament({5}) == want);
  CHECK(clockwise_beats({5}, 1, 2));
  CHECK(clockwise_beats({5}, 4, 1));
  CHECK_FALSE(clockwise_beats({5}, 1, 4));
  CHECK_FALSE(clockwise_beats({5}, 2, 1));
}

TEST_CASE("arcs of CW(6), derived by hand") {
  // vertices 1..n/2 beat the next n/2, the rest beat the next n/2 - 1
  std::vector<std::pair<int, int>> want{
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
      {2, 5}, {3, 4}, {3, 5}, {4, 0}, {4, 5}, {5, 0}, {5, 1}};
  CHECK(clockwise_tournament({6}) == want);
  CHECK(clockwise_beats({6}, 3, 6));
  CHECK(clockwise_beats({6}, 5, 1));
  CHECK_FALSE(clockwise_beats({6}, 4, 1));
}

TEST_CASE("every pair of CW(n) has exactly one direction") {
  for (int n = 1; n <= 15; ++n) {
    auto arcs = clockwise_tournament({n});
    CHECK(static_cast<int>(arcs.size()) == n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        CAPTURE(n);
        CHECK(clockwise_beats({n}, i, j) != clockwise_beats({n}, j, i));
      }
  }
}

TEST_CASE("three orders realize CW(n) with every weight 2") {
  // spot-check the hand-written instances first
  auto five = clockwise_orders({5});
  CHECK(five[0].ranking() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(five[1].ranking() == std::vector<int>{3, 4, 0, 1, 2});
  CHECK(five[2].ranking() == std::vector<int>{2, 4, 1, 3, 0});
  auto six = clockwise_orders({6});
  CHECK(six[0].ranking() == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(six[1].ranking() == std::vector<int>{4, 5, 0, 1, 2, 3});
  CHECK(six[2].ranking() == std::vector<int>{3, 2, 5, 1, 4, 0});

  for (int n = 1; n <= 20; ++n) {
    Profile p = lift_orders(clockwise_orders({n}), 2);
    WeightedTournament t = tournament_from_profile(p);
    CAPTURE(n);
    for (auto [u, v] : clockwise_tournament({n})) CHECK(t.weight(u, v) == 2);
  }
}

TEST_CASE("lifting keeps the tournament and raises every weight to k") {
  for (int n : {1, 2, 5, 6, 9, 12}) {
    for (int k : {2, 3, 4, 7}) {
      Profile p = lift_orders(clockwise_orders({n}), k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(p.k() == k);
      CHECK(p.order_count() == 2 * k - 1);
      WeightedTournament t = tournament_from_profile(p);
      for (auto [u, v] : clockwise_tournament({n})) CHECK(t.weight(u, v) == k);
    }
  }
}

TEST_CASE("lifting rejects unanimous pairs") {
  // three identical orders: every pair is 3-0, nothing to lift
  LinearOrder id({0, 1, 2});
  CHECK_THROWS_AS(lift_orders({id, id, id}, 3), std::invalid_argument);
  CHECK_THROWS_AS(lift_orders(clockwise_orders({4}), 1), std::invalid_argument);
}

TEST_CASE("half-circle sets") {
  CHECK(x_set({5}, 1) == VertexSet{0, 1, 2});
  CHECK(y_set({5}, 1) == VertexSet{3, 4});
  CHECK(x_set({5}, 4) == VertexSet{0, 3, 4});  // wraps: v4, v5, v1
  CHECK(x_set({6}, 5) == VertexSet{0, 4, 5});
  CHECK(y_set({6}, 5) == VertexSet{1, 2, 3});
  // X_i is exactly v_i plus its out-neighbourhood, for odd n
  for (int n : {3, 5, 7, 9, 11}) {
    for (int i = 1; i <= n; ++i) {
      VertexSet x = x_set({n}, i);
      CAPTURE(n);
      CAPTURE(i);
      CHECK(x.contains(i - 1));
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        CHECK(x.contains(j - 1) == clockwise_beats({n}, i, j));
      }
    }
  }
}

TEST_CASE("crank walks anticlockwise out of the set") {
  ClockwiseSpec cw{5};
  VertexSet s{0, 1, 3};  // v1, v2, v4
  CHECK(crank(cw, s, 2) == 5);  // v2, v1 taken, v5 free
  CHECK(crank(cw, s, 3) == 3);  // v3 already outside
  CHECK(crank(cw, s, 4) == 3);
  CHECK(crank(cw, s, 1) == 5);
  CHECK_THROWS_AS(crank(cw, VertexSet::full(5), 2), std::invalid_argument);
}

TEST_CASE("flip lands on the opposite side") {
  CHECK(flip({5}, 1) == 4);
  CHECK(flip({5}, 3) == 1);
  CHECK(flip({5}, 5) == 3);
  CHECK(flip({6}, 2) == 5);
  CHECK(flip({6}, 6) == 3);
}

TEST_CASE("flip swaps half-circles") {
  // even n: X_flip(i) = Y_i; odd n: X_flip(i) = Y_i plus v_i itself
  for (int n = 2; n <= 10; ++n) {
    for (int i = 1; i <= n; ++i) {
      VertexSet want = y_set({n}, i);
      if (n % 2 == 1) {
        auto m = want.members();
        m.push_back(i - 1);
        std::sort(m.begin(), m.end());
        want = VertexSet(std::move(m));
      }
      CAPTURE(n);
      CAPTURE(i);
      CHECK(x_set({n}, flip({n}, i)) == want);
    }
  }
}

TEST_CASE("crank inequality, exhaustively for small n") {
  // dropping to the cranked position loses at most one member of X_i cap S
  for (int n = 2; n <= 8; ++n) {
    ClockwiseSpec cw{n};
    for (const VertexSet& s : all_subsets(n)) {
      if (s.size() == n) continue;
      for (int i = 1; i <= n; ++i) {
        int c = crank(cw, s, i);
        auto overlap = [&](int j) {
          int count = 0;
          for (int v : x_set(cw, j))
            if (s.contains(v)) ++count;
          return count;
        };
        CAPTURE(n);
        CAPTURE(i);
        CHECK(overlap(c) >= overlap(i) - 1);
      }
    }
  }
}

TEST_CASE("least dominated outside vertex") {
  LeastDominated ld = least_dominated_outside({5}, VertexSet{0, 1});
  CHECK(ld.vertex == 4);  // v5 is beaten by neither v1 nor v2
  CHECK(ld.dominators == 0);
  ld = least_dominated_outside({5}, VertexSet{0, 1, 2, 3});
  CHECK(ld.vertex == 4);  // only v3 and v4 hit v5
  CHECK(ld.dominators == 2);
  CHECK_THROWS_AS(least_dominated_outside({5}, VertexSet::full(5)),
                  std::invalid_argument);
}

TEST_CASE("some outside vertex is never more than half dominated") {
  // near-full sets may need the rounding-up slack, everything else does not
  for (int n = 3; n <= 10; ++n) {
    for (const VertexSet& s : all_subsets(n)) {
      if (s.empty() || s.size() == n) continue;
      LeastDominated ld = least_dominated_outside({n}, s);
      CAPTURE(n);
      if (s.size() == n - 1)
        CHECK(2 * ld.dominators <= s.size() + 1);
      else
        CHECK(2 * ld.dominators <= s.size());
    }
  }
}
