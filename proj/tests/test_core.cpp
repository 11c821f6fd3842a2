#include "doctest.h"

#include "fixtures.hpp"
#include "kmaj/profile.hpp"
#include "kmaj/tournament.hpp"
#include "kmaj/vertex_set.hpp"

#include <stdexcept>

using namespace kmaj;

TEST_CASE("vertex table lookups") {
  VertexTable t({"a", "b", "c"});
  CHECK(t.size() == 3);
  CHECK(t.name(1) == "b");
  CHECK(t.find("c") == 2);
  CHECK_FALSE(t.find("z").has_value());
  CHECK(VertexTable::numbered(3).names() ==
        std::vector<std::string>{"v1", "v2", "v3"});
  CHECK(VertexTable::numbered(2, "a").names() ==
        std::vector<std::string>{"a1", "a2"});
  CHECK_THROWS_AS(VertexTable({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(VertexTable({""}), std::invalid_argument);
  CHECK_THROWS_AS(VertexTable({"a b"}), std::invalid_argument);
}

TEST_CASE("linear order positions") {
  LinearOrder o({2, 0, 1});
  CHECK(o.position(2) == 0);
  CHECK(o.position(1) == 2);
  CHECK(o.prefers(2, 1));
  CHECK_FALSE(o.prefers(1, 0));
  CHECK_THROWS_AS(LinearOrder({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinearOrder({0, 2}), std::invalid_argument);
}

TEST_CASE("profile validation") {
  VertexTable ab({"a", "b"});
  std::vector<LinearOrder> three{LinearOrder({0, 1}), LinearOrder({0, 1}),
                                 LinearOrder({1, 0})};
  CHECK(Profile(2, three, ab).order_count() == 3);
  CHECK_THROWS_AS(Profile(2, {LinearOrder({0, 1})}, ab),
                  std::invalid_argument);  // needs 2k-1 = 3 ballots
  CHECK_THROWS_AS(Profile(0, {}, VertexTable{}), std::invalid_argument);
  std::vector<LinearOrder> short_one{LinearOrder({0, 1}), LinearOrder({0}),
                                     LinearOrder({1, 0})};
  CHECK_THROWS_AS(Profile(2, short_one, ab), std::invalid_argument);
}

TEST_CASE("preference counts on the worked example") {
  Profile p = worked_example_profile();
  auto count = [&](const char* u, const char* v) {
    return preference_count(p, *p.vertices().find(u), *p.vertices().find(v));
  };
  CHECK(count("a", "b") == 3);
  CHECK(count("b", "a") == 2);
  CHECK(count("d", "b") == 5);
  CHECK(count("c", "b") == 4);
  CHECK(count("a", "d") == 3);
  CHECK_THROWS_AS(preference_count(p, 0, 0), std::invalid_argument);
}

TEST_CASE("profile equality is by names, not ids") {
  // same ballots, tables permuted: b, a with orders rewritten to match
  Profile p1(2,
             {LinearOrder({0, 1}), LinearOrder({0, 1}), LinearOrder({1, 0})},
             VertexTable({"a", "b"}));
  Profile p2(2,
             {LinearOrder({1, 0}), LinearOrder({1, 0}), LinearOrder({0, 1})},
             VertexTable({"b", "a"}));
  CHECK(p1 == p2);
  Profile p3(2,
             {LinearOrder({0, 1}), LinearOrder({1, 0}), LinearOrder({0, 1})},
             VertexTable({"a", "b"}));
  CHECK_FALSE(p1 == p3);
}

TEST_CASE("vertex sets stay sorted and validated") {
  VertexSet s{3, 1, 2};
  CHECK(s.members() == std::vector<int>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));
  CHECK(VertexSet::full(3) == VertexSet{0, 1, 2});
  CHECK(VertexSet::from_mask(0b1011).members() == std::vector<int>{0, 1, 3});
  CHECK(VertexSet{0, 1, 3}.to_mask() == 0b1011);
  CHECK(VertexSet{}.empty());
  CHECK_THROWS_AS(VertexSet({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet({-1}), std::invalid_argument);
}

TEST_CASE("majority tournament of the worked example") {
  WeightedTournament t = worked_example_tournament();
  CHECK(t.n() == 4);
  CHECK(t.k() == 3);
  CHECK(t.max_arc_weight() == 5);
  auto w = [&](const char* u, const char* v) {
    return t.weight(*t.vertices().find(u), *t.vertices().find(v));
  };
  CHECK(w("a", "b") == 3);
  CHECK(w("a", "c") == 3);
  CHECK(w("a", "d") == 3);
  CHECK(w("c", "b") == 4);
  CHECK(w("d", "b") == 5);
  CHECK(w("d", "c") == 5);
  // reverse directions are absent
  CHECK(w("b", "a") == 0);
  CHECK(w("c", "d") == 0);
  CHECK(t.arcs().size() == 6);
}

TEST_CASE("tournament validation") {
  VertexTable ab({"a", "b"});
  CHECK_NOTHROW(WeightedTournament(2, ab, {{0, 1, 3}}));
  CHECK_THROWS_AS(WeightedTournament(2, ab, {}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedTournament(2, ab, {{0, 1, 3}, {1, 0, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedTournament(2, ab, {{0, 1, 1}}),
                  std::invalid_argument);  // weight below k
  CHECK_THROWS_AS(WeightedTournament(2, ab, {{0, 1, 4}}),
                  std::invalid_argument);  // weight above 2k-1
  CHECK_THROWS_AS(WeightedTournament(2, ab, {{0, 0, 2}}),
                  std::invalid_argument);
}

TEST_CASE("tournament equality is by names") {
  WeightedTournament t1(2, VertexTable({"a", "b"}), {{0, 1, 3}});
  WeightedTournament t2(2, VertexTable({"b", "a"}), {{1, 0, 3}});
  WeightedTournament t3(2, VertexTable({"a", "b"}), {{1, 0, 3}});
  CHECK(t1 == t2);
  CHECK_FALSE(t1 == t3);
}

TEST_CASE("every pair gets exactly one arc, never both directions") {
  // 3 candidates, k = 2: a > b > c majority cycle needs a>b, b>c, c>a
  Profile p(2,
            {LinearOrder({0, 1, 2}), LinearOrder({1, 2, 0}),
             LinearOrder({2, 0, 1})},
            VertexTable({"a", "b", "c"}));
  WeightedTournament t = tournament_from_profile(p);
  int forward = 0;
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (t.has_arc(u, v)) {
        ++forward;
        CHECK_FALSE(t.has_arc(v, u));
      }
  CHECK(forward == 3);
  CHECK(t.weight(0, 1) == 2);  // a beats b in ballots 1 and 3
  CHECK(t.weight(1, 2) == 2);
  CHECK(t.weight(2, 0) == 2);
}
