#pragma once

#include "kmaj/profile.hpp"
#include "kmaj/tournament.hpp"
#include "kmaj/vertex_set.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace kmaj {

// Parse failure in a ballot or tournament file. what() reads
// "line N: <reason>" so callers can report it verbatim.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason);
  int line() const { return line_; }

 private:
  int line_;
};

// Ballot files:
//   k 3
//   order a d c b
//   order d c b a
//   ...
// One "k" header, then exactly 2k-1 "order" lines, most preferred first.
// Lines starting with '#' and blank lines are skipped. Candidate ids are
// assigned in order of appearance in the first ballot.
Profile parse_ballots(std::istream& in);
Profile parse_ballots_text(const std::string& text);
std::string print_ballots(const Profile& p);

// Tournament files:
//   tournament k=3 n=4
//   arc a b 3
//   ...
// Exactly n(n-1)/2 arc lines, one per unordered pair. print_tournament
// sorts arcs by (from, to) name so output is canonical; parsing what was
// printed reproduces the tournament byte for byte on re-print. A file
// with n=1 carries no names at all, so the lone vertex comes back as "v1".
WeightedTournament parse_tournament(std::istream& in);
WeightedTournament parse_tournament_text(const std::string& text);
std::string print_tournament(const WeightedTournament& t);

// "{a, d}" / "{}", members sorted by name.
std::string format_vertex_set(const VertexTable& names, const VertexSet& s);

}  // namespace kmaj
