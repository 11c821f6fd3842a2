#pragma once

#include "kmaj/profile.hpp"
#include "kmaj/rational.hpp"
#include "kmaj/tournament.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kmaj {

struct SearchBudget {
  int max_vertices = 8;
  std::uint64_t max_order_tuples = 10'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Total number of profiles on n vertices for this k: (n!)^(2k-1), or nullopt
// when that overflows 64 bits (then it certainly exceeds any sane budget).
std::optional<std::uint64_t> profile_count(int n, int k, bool symmetry_filter = false);

// Streams every tuple of 2k-1 linear orders on n vertices exactly once, in
// lexicographic order (orders compared by ranking, first ballot most
// significant). With symmetry_filter the first ballot is pinned to the
// identity order, which preserves the set of reachable tournaments up to
// relabeling; use only for isomorphism-invariant queries. Throws
// BudgetExceeded up front if the tuple count is over budget, or mid-stream
// when the time limit runs out.
class ProfileEnumerator {
public:
  ProfileEnumerator(int n, int k, const SearchBudget& budget = {},
                    bool symmetry_filter = false);
  std::optional<Profile> next();

private:
  int n_;
  int k_;
  bool done_ = false;
  bool symmetry_ = false;
  std::vector<std::vector<int>> perms_;
  std::vector<std::uint32_t> digits_;
  VertexTable vertices_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct RealizabilityResult {
  enum class Status { Realizable, NotRealizable, BudgetExceeded };
  Status status;
  std::optional<Profile> witness;  // set iff Realizable
};

// Does any profile induce t? Backtracking over order tuples in non-decreasing
// lexicographic rank (ballot order is irrelevant to the counts), pruning on
// partial pairwise counts: a pair is dead once its count overshoots the
// target or cannot reach it with the ballots left.
RealizabilityResult is_realizable(const WeightedTournament& t,
                                  const SearchBudget& budget = {});

struct MinVerticesResult {
  bool exact;            // true: value is m(q,k); false: m(q,k) > value
  int value;             // the answer, or the last fully exhausted n
  bool budget_exceeded;  // stopped by budget before reaching n_max
};

// Smallest n <= n_max admitting a profile with gamma_w = q, by exhaustive
// scan of n = 1, 2, ...
MinVerticesResult min_vertices_search(const Rational& q, int k, int n_max,
                                      const SearchBudget& budget = {},
                                      bool symmetry_filter = false);

// Uniformly random profile, reproducible: hand-rolled Fisher-Yates over
// mt19937_64 so the bytes do not depend on the standard library.
Profile random_profile(int n, int k, std::uint64_t seed);

}  // namespace kmaj
