#include "kmaj/search.hpp"

#include "kmaj/domination.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace kmaj {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    r *= base;
  }
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::optional<std::uint64_t> profile_count(int n, int k, bool symmetry_filter) {
  if (n < 0 || k < 1) throw std::invalid_argument("need n >= 0 and k >= 1");
  if (n > 20) return std::nullopt;  // 21! overflows
  return checked_pow(factorial(n), 2 * k - 1 - (symmetry_filter ? 1 : 0));
}

ProfileEnumerator::ProfileEnumerator(int n, int k, const SearchBudget& budget,
                                     bool symmetry_filter)
    : n_(n), k_(k) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
  if (n > budget.max_vertices)
    throw BudgetExceeded("enumeration over " + std::to_string(n) +
                         " vertices exceeds the budget's max of " +
                         std::to_string(budget.max_vertices));
  auto count = profile_count(n, k, symmetry_filter);
  if (!count || *count > budget.max_order_tuples)
    throw BudgetExceeded("profile count " + (count ? std::to_string(*count) : "(overflow)") +
                         " exceeds the budget of " +
                         std::to_string(budget.max_order_tuples) + " order tuples");
  perms_ = all_permutations(n);
  digits_.assign(2 * k - 1, 0);
  // the identity is perms_[0], so with the filter digit 0 just never advances
  symmetry_ = symmetry_filter;
  vertices_ = VertexTable::numbered(n);
  if (budget.time_limit)
    deadline_ = std::chrono::steady_clock::now() + *budget.time_limit;
}

std::optional<Profile> ProfileEnumerator::next() {
  if (done_) return std::nullopt;
  if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
    throw BudgetExceeded("time limit exceeded while enumerating profiles");
  std::vector<LinearOrder> orders;
  orders.reserve(digits_.size());
  for (std::uint32_t d : digits_) orders.push_back(LinearOrder(perms_[d]));
  Profile result(k_, std::move(orders), vertices_);

  // advance the odometer, last ballot fastest
  const int lowest = symmetry_ ? 1 : 0;
  int pos = static_cast<int>(digits_.size()) - 1;
  while (pos >= lowest) {
    if (++digits_[pos] < perms_.size()) break;
    digits_[pos] = 0;
    --pos;
  }
  if (pos < lowest) done_ = true;
  return result;
}

RealizabilityResult is_realizable(const WeightedTournament& t, const SearchBudget& budget) {
  const int n = t.n();
  const int m = 2 * t.k() - 1;
  for (const Arc& a : t.arcs())
    if (a.weight < t.k() || a.weight > t.max_arc_weight())
      throw std::invalid_argument("arc weight outside [k, 2k-1]");
  if (n > budget.max_vertices)
    return {RealizabilityResult::Status::BudgetExceeded, std::nullopt};
  if (n == 0) {
    Profile witness(t.k(), std::vector<LinearOrder>(m, LinearOrder({})), VertexTable());
    return {RealizabilityResult::Status::Realizable, std::move(witness)};
  }

  const auto perms = all_permutations(n);
  // target pairwise counts: weight for the arc's winner, complement otherwise
  std::vector<int> target(size_t(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v)
        target[size_t(u) * n + v] =
            t.has_arc(u, v) ? static_cast<int>(t.weight(u, v))
                            : static_cast<int>(2 * t.k() - 1 - t.weight(v, u));

  std::vector<int> count(size_t(n) * n, 0);
  std::vector<int> chosen(m, 0);
  std::uint64_t nodes = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget.time_limit)
    deadline = std::chrono::steady_clock::now() + *budget.time_limit;

  auto apply = [&](const std::vector<int>& p, int delta) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) count[size_t(p[a]) * n + p[b]] += delta;
  };
  auto feasible = [&](int placed) {
    const int remaining = m - placed;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        int c = count[size_t(u) * n + v];
        int tgt = target[size_t(u) * n + v];
        if (c > tgt || c + remaining < tgt) return false;
      }
    return true;
  };

  // ballots are an unordered multiset: explore perm ranks in non-decreasing order
  std::optional<RealizabilityResult::Status> bail;
  auto dfs = [&](auto&& self, int depth, int min_rank) -> bool {
    if (depth == m) return true;
    for (size_t r = min_rank; r < perms.size(); ++r) {
      if (++nodes > budget.max_order_tuples) {
        bail = RealizabilityResult::Status::BudgetExceeded;
        return false;
      }
      if (deadline && (nodes & 1023) == 0 &&
          std::chrono::steady_clock::now() > *deadline) {
        bail = RealizabilityResult::Status::BudgetExceeded;
        return false;
      }
      apply(perms[r], +1);
      chosen[depth] = static_cast<int>(r);
      if (feasible(depth + 1) && self(self, depth + 1, static_cast<int>(r))) return true;
      apply(perms[r], -1);
      if (bail) return false;
    }
    return false;
  };

  if (dfs(dfs, 0, 0)) {
    std::vector<LinearOrder> orders;
    for (int d = 0; d < m; ++d) orders.push_back(LinearOrder(perms[chosen[d]]));
    Profile witness(t.k(), std::move(orders), t.vertices());
    return {RealizabilityResult::Status::Realizable, std::move(witness)};
  }
  if (bail) return {*bail, std::nullopt};
  return {RealizabilityResult::Status::NotRealizable, std::nullopt};
}

MinVerticesResult min_vertices_search(const Rational& q, int k, int n_max,
                                      const SearchBudget& budget, bool symmetry_filter) {
  if (k < 1 || n_max < 1) throw std::invalid_argument("need k >= 1 and n_max >= 1");
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget.time_limit)
    deadline = std::chrono::steady_clock::now() + *budget.time_limit;
  SearchBudget per_n = budget;
  per_n.time_limit.reset();  // one shared deadline, checked here

  for (int n = 1; n <= n_max; ++n) {
    try {
      ProfileEnumerator en(n, k, per_n, symmetry_filter);
      SearchLimits limits;
      limits.max_vertices = std::max(limits.max_vertices, n);
      while (auto p = en.next()) {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
          return {false, n - 1, true};
        if (max_approval_gap(tournament_from_profile(*p), limits).gap == q)
          return {true, n, false};
      }
    } catch (const BudgetExceeded&) {
      return {false, n - 1, true};
    }
  }
  return {false, n_max, false};
}

Profile random_profile(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
  std::mt19937_64 rng(seed);
  std::vector<LinearOrder> orders;
  orders.reserve(2 * k - 1);
  for (int o = 0; o < 2 * k - 1; ++o) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % std::uint64_t(i + 1));
      std::swap(p[i], p[j]);
    }
    orders.push_back(LinearOrder(std::move(p)));
  }
  return Profile(k, std::move(orders), VertexTable::numbered(n));
}

}  // namespace kmaj
