#pragma once

#include "kmaj/domination.hpp"
#include "kmaj/profile.hpp"
#include "kmaj/tournament.hpp"

#include <vector>

// The worked 4-candidate example: five ballots, k = 3.
inline kmaj::Profile worked_example_profile() {
  using kmaj::LinearOrder;
  kmaj::VertexTable names({"a", "b", "c", "d"});
  // a d c b / d c b a / d c b a / a d b c / a d c b
  std::vector<LinearOrder> orders{
      LinearOrder({0, 3, 2, 1}), LinearOrder({3, 2, 1, 0}),
      LinearOrder({3, 2, 1, 0}), LinearOrder({0, 3, 1, 2}),
      LinearOrder({0, 3, 2, 1})};
  return kmaj::Profile(3, std::move(orders), std::move(names));
}

inline kmaj::WeightedTournament worked_example_tournament() {
  return kmaj::tournament_from_profile(worked_example_profile());
}

// Reference implementation of the maximum approval gap: plain loops over
// t.weight(), subsets enumerated smallest size first and in lexicographic
// order of the sorted id list within a size, first strict improvement kept.
// Deliberately shares nothing with the bitmask scan it checks.
inline kmaj::GapWitness naive_max_gap(const kmaj::WeightedTournament& t) {
  using kmaj::Rational;
  using kmaj::VertexSet;
  const int n = t.n();
  kmaj::GapWitness best{Rational(0), VertexSet::full(n)};
  if (n <= 1) return best;

  std::vector<int> members;
  auto consider = [&] {
    long long worst_num = -1, worst_den = 1;
    for (int v = 0; v < n; ++v) {
      bool inside = false;
      for (int u : members) inside = inside || u == v;
      if (inside) continue;
      long long sum = 0;
      bool beaten = false;
      for (int u : members) {
        sum += t.weight(u, v);
        beaten = beaten || t.weight(u, v) > 0;
      }
      if (!beaten) return;  // not a dominating set
      if (worst_num < 0 || Rational(sum, members.size()) <
                               Rational(worst_num, worst_den)) {
        worst_num = sum;
        worst_den = static_cast<long long>(members.size());
      }
    }
    if (worst_num >= 0 && Rational(worst_num, worst_den) > best.gap)
      best = {Rational(worst_num, worst_den),
              VertexSet(std::vector<int>(members))};
  };

  auto rec = [&](auto&& self, int next, int left) -> void {
    if (left == 0) {
      consider();
      return;
    }
    for (int v = next; v + left <= n; ++v) {
      members.push_back(v);
      self(self, v + 1, left - 1);
      members.pop_back();
    }
  };
  for (int size = 1; size < n; ++size) rec(rec, 0, size);
  return best;
}
