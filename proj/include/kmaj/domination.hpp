#pragma once

#include "kmaj/rational.hpp"
#include "kmaj/tournament.hpp"
#include "kmaj/vertex_set.hpp"

#include <stdexcept>

namespace kmaj {

struct GapWitness {
  Rational gap;
  VertexSet set;

  bool operator==(const GapWitness&) const = default;
};

// Guard rails for the exact 2^n subset scans.
struct SearchLimits {
  // Refuse the scan above this many vertices; raise explicitly to go bigger
  // (hard ceiling 63, the mask width). Exponential, so know what you ask for.
  int max_vertices = 26;
  // Worker threads for the scan. The result is identical for every value.
  int jobs = 1;
};

class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// d dominates: every vertex outside d has an in-arc from d. The full set is
// dominating; the empty set only on a 0-vertex tournament.
bool is_dominating(const WeightedTournament& t, const VertexSet& d);

// Average support d gives v: (1/|d|) * sum of w(u->v) over u in d with u->v.
// Throws if v is in d or d is empty.
Rational average_inweight(const WeightedTournament& t, const VertexSet& d, int v);

// W(T,d) = min over v outside d of average_inweight; 0 when d is the full
// set. Throws if d is not dominating.
Rational approval_gap(const WeightedTournament& t, const VertexSet& d);

// gamma_w(T): exact maximum of approval_gap over all dominating sets.
// Subsets are enumerated by increasing cardinality, lexicographically within
// a cardinality (by sorted vertex ids); the witness is the first maximizer in
// that order. The scan stops early once the hard upper bound 2k-1 is
// attained. Deterministic for any jobs count.
GapWitness max_approval_gap(const WeightedTournament& t, const SearchLimits& limits = {});

// Maximum gap over dominating sets of size exactly j; 0 if none exists.
Rational max_approval_gap_fixed_size(const WeightedTournament& t, int j,
                                     const SearchLimits& limits = {});

// Smallest cardinality of a dominating set (0 only for the empty tournament).
int min_dominating_set_size(const WeightedTournament& t, const SearchLimits& limits = {});

}  // namespace kmaj
