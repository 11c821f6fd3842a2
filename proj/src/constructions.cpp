#include "kmaj/constructions.hpp"

#include "kmaj/clockwise.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kmaj {

namespace {

// dense n^2 tournament storage downstream; refuse silly sizes loudly
constexpr long long kMaxVertices = 2000;

void check_size(long long n) {
  if (n > kMaxVertices)
    throw std::invalid_argument("construction would need " + std::to_string(n) +
                                " vertices, above the supported " +
                                std::to_string(kMaxVertices));
}

void append_numbered(std::vector<std::string>& names, const std::string& prefix,
                     long long count) {
  for (long long i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
}

// lifted clockwise rankings over m vertices, shifted to global ids base..base+m-1
std::vector<std::vector<int>> block_rankings(long long m, int k, int base) {
  std::vector<std::vector<int>> out(2 * k - 1);
  if (m == 0) return out;
  auto orders = lifted_clockwise_orders({static_cast<int>(m)}, k);
  for (int i = 0; i < 2 * k - 1; ++i) {
    out[i] = orders[i].ranking();
    for (int& v : out[i]) v += base;
  }
  return out;
}

std::vector<std::vector<int>> singleton_rankings(int k, int id) {
  return std::vector<std::vector<int>>(2 * k - 1, {id});
}

}  // namespace

Profile compose_orders(const std::vector<PatternRow>& pattern,
                       const std::vector<BlockOrders>& blocks, int k,
                       VertexTable vertices) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int m = 2 * k - 1;
  const int n = vertices.size();
  if (static_cast<int>(pattern.size()) != m)
    throw std::invalid_argument("pattern needs exactly 2k-1 rows");

  std::set<std::string> labels;
  std::vector<int> owner(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (!labels.insert(block.label).second)
      throw std::invalid_argument("duplicate block label '" + block.label + "'");
    if (static_cast<int>(block.per_ballot.size()) != m)
      throw std::invalid_argument("block '" + block.label + "' needs 2k-1 ballot orders");
    std::vector<int> ids = block.per_ballot[0];
    std::sort(ids.begin(), ids.end());
    for (const auto& ranking : block.per_ballot) {
      std::vector<int> sorted = ranking;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != ids)
        throw std::invalid_argument("block '" + block.label +
                                    "' ballots range over different vertices");
    }
    for (int v : ids) {
      if (v < 0 || v >= n) throw std::invalid_argument("block vertex id out of range");
      if (owner[v] != -1) throw std::invalid_argument("blocks overlap at vertex id " +
                                                      std::to_string(v));
      owner[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1)
      throw std::invalid_argument("vertex id " + std::to_string(v) + " belongs to no block");

  std::vector<LinearOrder> orders;
  orders.reserve(m);
  for (int i = 0; i < m; ++i) {
    const PatternRow& row = pattern[i];
    std::set<std::string> seen;
    std::vector<int> ranking;
    ranking.reserve(n);
    for (const std::string& label : row) {
      if (!labels.count(label))
        throw std::invalid_argument("pattern row mentions unknown block '" + label + "'");
      if (!seen.insert(label).second)
        throw std::invalid_argument("pattern row lists block '" + label + "' twice");
      for (const auto& block : blocks)
        if (block.label == label)
          ranking.insert(ranking.end(), block.per_ballot[i].begin(),
                         block.per_ballot[i].end());
    }
    if (seen.size() != labels.size())
      throw std::invalid_argument("pattern row misses a block");
    orders.push_back(LinearOrder(std::move(ranking)));
  }
  return Profile(k, std::move(orders), std::move(vertices));
}

std::pair<Profile, VertexSet> gap_realization(const Rational& q, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (q < 0 || q > Rational(2 * k - 1))
    throw std::invalid_argument("q must lie in [0, 2k-1]");
  if (q == 0) {
    std::vector<LinearOrder> orders(2 * k - 1, LinearOrder({0}));
    return {Profile(k, std::move(orders), VertexTable::numbered(1)),
            VertexSet{0}};
  }
  const long long x = q.num();
  const long long y = q.den();
  const long long z = y * (2 * k - 1);
  const long long n = z + 1;
  check_size(n);
  std::vector<int> identity(n);
  for (long long i = 0; i < n; ++i) identity[i] = static_cast<int>(i);
  std::vector<LinearOrder> orders(2 * k - 1, LinearOrder(identity));
  std::vector<int> d;
  for (long long v = 0; v < n; ++v)
    if (v != x) d.push_back(static_cast<int>(v));
  return {Profile(k, std::move(orders), VertexTable::numbered(static_cast<int>(n))),
          VertexSet(std::move(d))};
}

std::pair<long long, long long> case2_parameters(const Rational& q, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (!(Rational(k, 2) < q && q < Rational(k)))
    throw std::invalid_argument("q must lie strictly between k/2 and k");
  const long long x0 = q.num();
  const long long y0 = q.den();
  for (long long m = 1; m <= 1000000; ++m) {
    const long long x = m * x0;
    const long long y = m * y0;
    if (x <= y) continue;
    // k/(2q) < (ky-1)/(ky), cross-multiplied: (ky)^2 < 2x(ky-1)
    const __int128 ky = static_cast<__int128>(k) * y;
    if (ky * ky < static_cast<__int128>(2) * x * (ky - 1)) return {x, y};
  }
  throw std::logic_error("no admissible scaling found");
}

Profile gamma_realization(const Rational& q, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (q < Rational(k, 2) || q > Rational(2 * k - 1))
    throw std::invalid_argument("q must lie in [k/2, 2k-1]");
  const int m = 2 * k - 1;

  if (q == Rational(k, 2)) {
    // the 3-cycle with every weight k
    auto orders = lifted_clockwise_orders({3}, k);
    return Profile(k, std::move(orders), VertexTable({"a", "b", "c"}));
  }

  if (q < Rational(k)) {
    auto [x, y] = case2_parameters(q, k);
    const long long na = 2 * x;
    const long long nb = 2 * k * y - 2 * x;
    const long long nc = k * y;
    check_size(na + nb + nc);
    std::vector<std::string> names;
    append_numbered(names, "a", na);
    append_numbered(names, "b", nb);
    append_numbered(names, "c", nc);
    std::vector<BlockOrders> blocks{
        {"a", block_rankings(na, k, 0)},
        {"b", block_rankings(nb, k, static_cast<int>(na))},
        {"c", block_rankings(nc, k, static_cast<int>(na + nb))}};
    std::vector<PatternRow> pattern;
    for (int i = 1; i <= m; ++i) {
      if (i <= k - 1)
        pattern.push_back({"b", "a", "c"});
      else if (i == k)
        pattern.push_back({"a", "c", "b"});
      else if (i == k + 1)
        pattern.push_back({"c", "b", "a"});
      else
        pattern.push_back({"c", "a", "b"});
    }
    return compose_orders(pattern, blocks, k, VertexTable(std::move(names)));
  }

  // k <= q <= 2k-1: integer part w, fractional part x/y, blocks CW(x),
  // CW(y-x) and the lone vertex c
  const long long w = q.num() / q.den();
  const Rational frac = q - Rational(w);
  const long long x = frac.num() == 0 ? 0 : frac.num();
  const long long y = frac.num() == 0 ? 1 : frac.den();
  const long long na = x;
  const long long nb = y - x;
  check_size(na + nb + 1);
  std::vector<std::string> names;
  append_numbered(names, "a", na);
  append_numbered(names, "b", nb);
  names.push_back("c");
  const int cid = static_cast<int>(na + nb);
  std::vector<BlockOrders> blocks{
      {"a", block_rankings(na, k, 0)},
      {"b", block_rankings(nb, k, static_cast<int>(na))},
      {"c", singleton_rankings(k, cid)}};
  std::vector<PatternRow> pattern;
  for (int i = 1; i <= m; ++i) {
    if (i <= k)
      pattern.push_back({"b", "a", "c"});
    else if (i <= w)
      pattern.push_back({"a", "b", "c"});
    else if (i == w + 1)
      pattern.push_back({"a", "c", "b"});
    else
      pattern.push_back({"c", "a", "b"});
  }
  return compose_orders(pattern, blocks, k, VertexTable(std::move(names)));
}

Profile half_gap_construction(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const int m = 2 * k - 1;
  const long long na = 2 * k - 1;
  std::vector<std::string> names;
  append_numbered(names, "a", na);
  names.push_back("b");
  names.push_back("c");
  const int bid = static_cast<int>(na);
  const int cid = bid + 1;
  std::vector<BlockOrders> blocks{{"a", block_rankings(na, k, 0)},
                                  {"b", singleton_rankings(k, bid)},
                                  {"c", singleton_rankings(k, cid)}};
  std::vector<PatternRow> pattern;
  for (int i = 1; i <= m; ++i) {
    if (i <= k - 1)
      pattern.push_back({"b", "a", "c"});
    else if (i == k)
      pattern.push_back({"a", "c", "b"});
    else if (i == k + 1)
      pattern.push_back({"c", "b", "a"});
    else
      pattern.push_back({"c", "a", "b"});
  }
  return compose_orders(pattern, blocks, k, VertexTable(std::move(names)));
}

Profile three_vertex_construction(const Rational& q, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if ((q * 2).den() != 1) throw std::invalid_argument("2q must be an integer");
  if (q < Rational(k, 2) || q > Rational(k - 1))
    throw std::invalid_argument("q must lie in [k/2, k-1]");
  const long long twoq = (q * 2).num();
  const int m = 2 * k - 1;
  std::vector<BlockOrders> blocks{{"a", singleton_rankings(k, 0)},
                                  {"b", singleton_rankings(k, 1)},
                                  {"c", singleton_rankings(k, 2)}};
  std::vector<PatternRow> pattern;
  for (int i = 1; i <= m; ++i) {
    if (i <= k - 1)
      pattern.push_back({"c", "a", "b"});
    else if (i <= twoq)
      pattern.push_back({"a", "b", "c"});
    else if (i <= 2 * k - 2)
      pattern.push_back({"b", "a", "c"});
    else
      pattern.push_back({"b", "c", "a"});
  }
  return compose_orders(pattern, blocks, k, VertexTable({"a", "b", "c"}));
}

std::optional<long long> min_vertices_formula(const Rational& q, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (q < Rational(k, 2) || q > Rational(2 * k - 1))
    throw std::invalid_argument("q must lie in [k/2, 2k-1]");
  if (q >= Rational(k)) return q.den() + 1;
  if (q <= Rational(k - 1) && (q * 2).den() == 1) return 3;
  return std::nullopt;
}

}  // namespace kmaj
