#include "kmaj/domination.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace kmaj {

namespace {

void validate_subset(const WeightedTournament& t, const VertexSet& d) {
  for (int v : d)
    if (v >= t.n()) throw std::invalid_argument("set member outside the vertex range");
}

// Precomputed support index for the 2^n scan: in-weights summed per mask byte,
// so the total support a set gives v costs ceil(n/8) table lookups.
struct ScanIndex {
  int n = 0;
  int nbytes = 0;
  long long top = 0;  // 2k-1
  std::vector<long long> table;

  static ScanIndex build(const WeightedTournament& t) {
    ScanIndex ix;
    ix.n = t.n();
    ix.nbytes = (ix.n + 7) / 8;
    ix.top = t.max_arc_weight();
    ix.table.assign(size_t(ix.n) * ix.nbytes * 256, 0);
    for (int v = 0; v < ix.n; ++v) {
      for (int b = 0; b < ix.nbytes; ++b) {
        long long* row = &ix.table[(size_t(v) * ix.nbytes + b) * 256];
        for (int m = 1; m < 256; ++m) {
          int low = std::countr_zero(unsigned(m));
          int u = b * 8 + low;
          row[m] = row[m & (m - 1)] + (u < ix.n && u != v ? t.weight(u, v) : 0);
        }
      }
    }
    return ix;
  }

  long long inweight(int v, std::uint64_t d) const {
    const long long* rows = &table[size_t(v) * nbytes * 256];
    long long s = 0;
    for (int b = 0; b < nbytes; ++b) s += rows[size_t(b) * 256 + (d >> (8 * b) & 0xff)];
    return s;
  }
};

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1; }

std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// C(n, c) for n <= 63 fits in long long (intermediates need 128 bits)
long long binom(int n, int c) {
  if (c < 0 || c > n) return 0;
  c = std::min(c, n - c);
  unsigned __int128 r = 1;
  for (int i = 1; i <= c; ++i) r = r * (n - c + i) / i;
  return static_cast<long long>(r);
}

// rank-th c-subset of 0..n-1 in colex order, the order next_same_popcount walks
std::uint64_t unrank_colex(long long rank, int c, int n) {
  std::uint64_t mask = 0;
  int bound = n - 1;
  for (int i = c; i >= 1; --i) {
    int j = bound;
    while (binom(j, i) > rank) --j;
    mask |= std::uint64_t(1) << j;
    rank -= binom(j, i);
    bound = j - 1;
  }
  return mask;
}

// true iff a's sorted id sequence is lexicographically before b's
// (equal popcounts: the lowest differing bit decides)
bool seq_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (d & -d & a) != 0;
}

struct LayerBest {
  long long num = -1;  // best min-inweight in the layer, -1 = no dominating set
  std::uint64_t mask = 0;
};

void merge_candidate(LayerBest& best, long long num, std::uint64_t mask) {
  if (num > best.num || (num == best.num && seq_lex_less(mask, best.mask))) {
    best.num = num;
    best.mask = mask;
  }
}

LayerBest scan_range(const ScanIndex& ix, std::uint64_t start_mask, long long count) {
  const std::uint64_t full = full_mask(ix.n);
  LayerBest best;
  std::uint64_t mask = start_mask;
  for (long long i = 0; i < count; ++i, mask = next_same_popcount(mask)) {
    long long mn = LLONG_MAX;
    std::uint64_t rest = full & ~mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      long long s = ix.inweight(v, mask);
      if (s < mn) {
        mn = s;
        if (mn == 0) break;
      }
    }
    if (mn > 0) merge_candidate(best, mn, mask);
  }
  return best;
}

LayerBest scan_layer(const ScanIndex& ix, int c, int jobs) {
  const long long total = binom(ix.n, c);
  const std::uint64_t first = (std::uint64_t(1) << c) - 1;
  if (jobs <= 1 || total < 4096) return scan_range(ix, first, total);

  const int workers = int(std::min<long long>(jobs, total));
  const long long chunk = (total + workers - 1) / workers;
  std::vector<LayerBest> results(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      long long lo = w * chunk;
      long long hi = std::min(total, lo + chunk);
      if (lo < hi) results[w] = scan_range(ix, unrank_colex(lo, c, ix.n), hi - lo);
    });
  }
  for (auto& t : threads) t.join();
  LayerBest best;
  for (const auto& r : results)
    if (r.num >= 0) merge_candidate(best, r.num, r.mask);
  return best;
}

void check_limits(const WeightedTournament& t, const SearchLimits& limits) {
  if (t.n() > 63)
    throw LimitError("tournament has " + std::to_string(t.n()) +
                     " vertices; the exhaustive scan is capped at 63 (mask width)");
  if (t.n() > limits.max_vertices)
    throw LimitError("tournament has " + std::to_string(t.n()) +
                     " vertices, above the enumeration limit " +
                     std::to_string(limits.max_vertices) +
                     "; the 2^n scan is refused rather than approximated");
}

}  // namespace

bool is_dominating(const WeightedTournament& t, const VertexSet& d) {
  validate_subset(t, d);
  for (int v = 0; v < t.n(); ++v) {
    if (d.contains(v)) continue;
    bool covered = false;
    for (int u : d)
      if (t.has_arc(u, v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

Rational average_inweight(const WeightedTournament& t, const VertexSet& d, int v) {
  validate_subset(t, d);
  if (v < 0 || v >= t.n()) throw std::invalid_argument("vertex id out of range");
  if (d.contains(v)) throw std::invalid_argument("vertex belongs to the set");
  if (d.empty()) throw std::invalid_argument("average over an empty set");
  long long sum = 0;
  for (int u : d) sum += t.weight(u, v);
  return Rational(sum) / d.size();
}

Rational approval_gap(const WeightedTournament& t, const VertexSet& d) {
  if (!is_dominating(t, d)) throw std::invalid_argument("set is not dominating");
  if (d.size() == t.n()) return Rational(0);
  Rational best;
  bool any = false;
  for (int v = 0; v < t.n(); ++v) {
    if (d.contains(v)) continue;
    Rational w = average_inweight(t, d, v);
    if (!any || w < best) {
      best = w;
      any = true;
    }
  }
  return best;
}

GapWitness max_approval_gap(const WeightedTournament& t, const SearchLimits& limits) {
  check_limits(t, limits);
  const int n = t.n();
  GapWitness best{Rational(0), VertexSet::full(n)};
  if (n <= 1) return best;
  const ScanIndex ix = ScanIndex::build(t);
  for (int c = 1; c <= n - 1; ++c) {
    LayerBest lb = scan_layer(ix, c, limits.jobs);
    if (lb.num > 0) {
      Rational gap = Rational(lb.num) / c;
      // earlier layers win ties, so only a strict improvement replaces
      if (gap > best.gap) best = {gap, VertexSet::from_mask(lb.mask)};
    }
    if (best.gap == Rational(t.max_arc_weight())) break;  // nothing can beat 2k-1
  }
  return best;
}

Rational max_approval_gap_fixed_size(const WeightedTournament& t, int j,
                                     const SearchLimits& limits) {
  if (j < 0 || j > t.n()) throw std::invalid_argument("set size out of range");
  if (j == t.n()) return Rational(0);
  if (j == 0) return Rational(0);  // n > 0 here, so the empty set never dominates
  check_limits(t, limits);
  LayerBest lb = scan_layer(ScanIndex::build(t), j, limits.jobs);
  return lb.num > 0 ? Rational(lb.num) / j : Rational(0);
}

int min_dominating_set_size(const WeightedTournament& t, const SearchLimits& limits) {
  const int n = t.n();
  if (n == 0) return 0;
  check_limits(t, limits);
  const ScanIndex ix = ScanIndex::build(t);
  const std::uint64_t full = full_mask(n);
  for (int c = 1; c < n; ++c) {
    std::uint64_t mask = (std::uint64_t(1) << c) - 1;
    for (long long i = binom(n, c); i > 0; --i, mask = next_same_popcount(mask)) {
      bool ok = true;
      std::uint64_t rest = full & ~mask;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (ix.inweight(v, mask) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) return c;
    }
  }
  return n;
}

}  // namespace kmaj
