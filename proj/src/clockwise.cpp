#include "kmaj/clockwise.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmaj {

namespace {

void validate(const ClockwiseSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("clockwise tournament needs n >= 1");
}

// wraps any integer to the representative in 1..n
int rep(int i, int n) {
  int r = (i - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

void validate_index(const ClockwiseSpec& spec, int i) {
  if (i < 1 || i > spec.n) throw std::invalid_argument("vertex index out of 1..n");
}

void validate_members(const ClockwiseSpec& spec, const VertexSet& s) {
  for (int v : s)
    if (v >= spec.n) throw std::invalid_argument("set member outside the vertex range");
}

}  // namespace

bool clockwise_beats(const ClockwiseSpec& spec, int i, int j) {
  validate(spec);
  validate_index(spec, i);
  validate_index(spec, j);
  if (i == j) return false;
  const int n = spec.n;
  int d = j - i;
  if (d < 0) d += n;
  if (n % 2 == 1) return d <= (n - 1) / 2;
  return i <= n / 2 ? d <= n / 2 : d <= n / 2 - 1;
}

std::vector<std::pair<int, int>> clockwise_tournament(const ClockwiseSpec& spec) {
  validate(spec);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= spec.n; ++i)
    for (int j = 1; j <= spec.n; ++j)
      if (clockwise_beats(spec, i, j)) arcs.push_back({i - 1, j - 1});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::array<LinearOrder, 3> clockwise_orders(const ClockwiseSpec& spec) {
  validate(spec);
  const int n = spec.n;
  if (n == 1)
    return {LinearOrder({0}), LinearOrder({0}), LinearOrder({0})};
  if (n == 2)
    return {LinearOrder({0, 1}), LinearOrder({0, 1}), LinearOrder({1, 0})};

  std::vector<int> pi1, pi2, pi3;
  for (int i = 1; i <= n; ++i) pi1.push_back(i - 1);

  if (n % 2 == 1) {
    const int h = (n - 1) / 2;
    for (int i = h + 2; i <= n; ++i) pi2.push_back(i - 1);
    for (int i = 1; i <= h + 1; ++i) pi2.push_back(i - 1);
    // v_{h+1} v_n > v_h v_{n-1} > ... > v_2 v_{h+2}, then v_1
    for (int t = 0; t <= h - 1; ++t) {
      pi3.push_back(h + 1 - t - 1);
      pi3.push_back(n - t - 1);
    }
    pi3.push_back(0);
  } else {
    const int g = n / 2;
    for (int i = g + 2; i <= n; ++i) pi2.push_back(i - 1);
    for (int i = 1; i <= g + 1; ++i) pi2.push_back(i - 1);
    // v_{g+1}, then v_g v_n > v_{g-1} v_{n-1} > ... > v_2 v_{g+2}, then v_1
    pi3.push_back(g + 1 - 1);
    for (int t = 0; t <= g - 2; ++t) {
      pi3.push_back(g - t - 1);
      pi3.push_back(n - t - 1);
    }
    pi3.push_back(0);
  }
  return {LinearOrder(pi1), LinearOrder(pi2), LinearOrder(pi3)};
}

Profile lift_orders(const std::array<LinearOrder, 3>& orders, int k) {
  if (k < 2) throw std::invalid_argument("lift needs k >= 2");
  const int n = orders[0].size();
  for (const auto& o : orders)
    if (o.size() != n) throw std::invalid_argument("orders range over different vertex sets");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = 0;
      for (const auto& o : orders) c += o.prefers(u, v) ? 1 : 0;
      if (c == 0 || c == 3)
        throw std::invalid_argument("orders do not realize an all-weight-2 tournament");
    }

  std::vector<LinearOrder> lifted(orders.begin(), orders.end());
  std::vector<int> descending(n), ascending(n);
  for (int i = 0; i < n; ++i) {
    descending[i] = n - 1 - i;
    ascending[i] = i;
  }
  for (int c = 0; c < k - 2; ++c) lifted.push_back(LinearOrder(descending));
  for (int c = 0; c < k - 2; ++c) lifted.push_back(LinearOrder(ascending));
  return Profile(k, std::move(lifted), VertexTable::numbered(n));
}

std::vector<LinearOrder> lifted_clockwise_orders(const ClockwiseSpec& spec, int k) {
  return lift_orders(clockwise_orders(spec), k).orders();
}

VertexSet x_set(const ClockwiseSpec& spec, int i) {
  validate(spec);
  validate_index(spec, i);
  std::vector<int> m;
  for (int t = 0; t <= (spec.n - 1) / 2; ++t) m.push_back(rep(i + t, spec.n) - 1);
  return VertexSet(std::move(m));
}

VertexSet y_set(const ClockwiseSpec& spec, int i) {
  VertexSet x = x_set(spec, i);
  std::vector<int> m;
  for (int v = 0; v < spec.n; ++v)
    if (!x.contains(v)) m.push_back(v);
  return VertexSet(std::move(m));
}

int crank(const ClockwiseSpec& spec, const VertexSet& s, int i) {
  validate(spec);
  validate_index(spec, i);
  validate_members(spec, s);
  if (s.size() == spec.n) throw std::invalid_argument("crank needs a proper subset");
  for (int l = 0; l < spec.n; ++l) {
    int idx = rep(i - l, spec.n);
    if (!s.contains(idx - 1)) return idx;
  }
  throw std::logic_error("unreachable");
}

int flip(const ClockwiseSpec& spec, int i) {
  validate(spec);
  validate_index(spec, i);
  return rep(i + (spec.n + 1) / 2, spec.n);
}

LeastDominated least_dominated_outside(const ClockwiseSpec& spec, const VertexSet& s) {
  validate(spec);
  validate_members(spec, s);
  if (s.size() == spec.n) throw std::invalid_argument("no vertex outside the full set");
  LeastDominated best{-1, 0};
  for (int v = 0; v < spec.n; ++v) {
    if (s.contains(v)) continue;
    int count = 0;
    for (int u : s)
      if (clockwise_beats(spec, u + 1, v + 1)) ++count;
    if (best.vertex == -1 || count < best.dominators) best = {v, count};
  }
  return best;
}

}  // namespace kmaj
