#include "kmaj/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace kmaj {

ParseError::ParseError(int line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason),
      line_(line) {}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<std::string> tokens;
    std::istringstream words(raw);
    std::string tok;
    while (words >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

long long parse_int(const Line& line, const std::string& tok,
                    const std::string& what) {
  long long v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size())
    throw ParseError(line.number,
                     "expected an integer " + what + ", got \"" + tok + "\"");
  return v;
}

}  // namespace

Profile parse_ballots(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(1, "missing \"k <count>\" header");

  const Line& head = lines[0];
  if (head.tokens[0] != "k" || head.tokens.size() != 2)
    throw ParseError(head.number, "expected \"k <count>\" header");
  long long k = parse_int(head, head.tokens[1], "after \"k\"");
  if (k < 1) throw ParseError(head.number, "k must be at least 1");
  if (k > 1000000) throw ParseError(head.number, "k is implausibly large");
  std::size_t want = static_cast<std::size_t>(2 * k - 1);

  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  std::vector<LinearOrder> orders;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] != "order")
      throw ParseError(line.number,
                       "expected \"order <name> ...\", got \"" +
                           line.tokens[0] + "\"");
    if (orders.size() == want)
      throw ParseError(line.number,
                       "expected exactly " + std::to_string(want) +
                           " ballots (2k-1), found more");
    if (line.tokens.size() < 2)
      throw ParseError(line.number, "ballot lists no candidates");

    std::vector<int> ranking;
    std::vector<char> seen(names.size(), 0);
    for (std::size_t ti = 1; ti < line.tokens.size(); ++ti) {
      const std::string& name = line.tokens[ti];
      if (orders.empty()) {
        if (ids.count(name))
          throw ParseError(line.number,
                           "candidate \"" + name + "\" listed twice");
        ids.emplace(name, static_cast<int>(names.size()));
        names.push_back(name);
        ranking.push_back(ids[name]);
      } else {
        auto it = ids.find(name);
        if (it == ids.end())
          throw ParseError(line.number, "candidate \"" + name +
                                            "\" does not appear in the first "
                                            "ballot");
        if (seen[it->second])
          throw ParseError(line.number,
                           "candidate \"" + name + "\" listed twice");
        seen[it->second] = 1;
        ranking.push_back(it->second);
      }
    }
    if (!orders.empty() && ranking.size() != names.size())
      throw ParseError(line.number,
                       "ballot ranks " + std::to_string(ranking.size()) +
                           " candidates, expected " +
                           std::to_string(names.size()));
    orders.emplace_back(std::move(ranking));
  }
  if (orders.size() != want)
    throw ParseError(lines.back().number,
                     "expected exactly " + std::to_string(want) +
                         " ballots (2k-1), found " +
                         std::to_string(orders.size()));

  return Profile(static_cast<int>(k), std::move(orders),
                 VertexTable(std::move(names)));
}

Profile parse_ballots_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ballots(in);
}

std::string print_ballots(const Profile& p) {
  std::ostringstream out;
  out << "k " << p.k() << "\n";
  for (const LinearOrder& o : p.orders()) {
    out << "order";
    for (int v : o.ranking()) out << ' ' << p.vertices().name(v);
    out << "\n";
  }
  return out.str();
}

WeightedTournament parse_tournament(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty())
    throw ParseError(1, "missing \"tournament k=<k> n=<n>\" header");

  const Line& head = lines[0];
  if (head.tokens[0] != "tournament" || head.tokens.size() != 3 ||
      head.tokens[1].rfind("k=", 0) != 0 || head.tokens[2].rfind("n=", 0) != 0)
    throw ParseError(head.number, "expected \"tournament k=<k> n=<n>\" header");
  long long k = parse_int(head, head.tokens[1].substr(2), "after \"k=\"");
  long long n = parse_int(head, head.tokens[2].substr(2), "after \"n=\"");
  if (k < 1) throw ParseError(head.number, "k must be at least 1");
  if (n < 1) throw ParseError(head.number, "n must be at least 1");
  if (k > 1000000 || n > 1000000)
    throw ParseError(head.number, "header values are implausibly large");
  long long want = n * (n - 1) / 2;

  struct RawArc {
    std::string from, to;
    long long weight;
    int line;
  };
  std::vector<RawArc> raw;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<int>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };

  std::unordered_map<long long, int> pair_line;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens[0] != "arc")
      throw ParseError(line.number, "expected \"arc <from> <to> <weight>\", "
                                    "got \"" + line.tokens[0] + "\"");
    if (static_cast<long long>(raw.size()) == want)
      throw ParseError(line.number,
                       "expected exactly " + std::to_string(want) +
                           " arcs for n=" + std::to_string(n) +
                           ", found more");
    if (line.tokens.size() != 4)
      throw ParseError(line.number, "expected \"arc <from> <to> <weight>\"");
    long long w = parse_int(line, line.tokens[3], "arc weight");
    if (w < k || w > 2 * k - 1)
      throw ParseError(line.number,
                       "arc weight " + std::to_string(w) +
                           " outside the majority range [" +
                           std::to_string(k) + ", " +
                           std::to_string(2 * k - 1) + "]");
    int u = intern(line.tokens[1]);
    int v = intern(line.tokens[2]);
    if (u == v)
      throw ParseError(line.number,
                       "arc from \"" + line.tokens[1] + "\" to itself");
    long long key = static_cast<long long>(std::min(u, v)) * 2000000 +
                    std::max(u, v);
    auto [it, fresh] = pair_line.emplace(key, line.number);
    if (!fresh)
      throw ParseError(line.number, "second arc between \"" + line.tokens[1] +
                                        "\" and \"" + line.tokens[2] +
                                        "\" (first on line " +
                                        std::to_string(it->second) + ")");
    raw.push_back({line.tokens[1], line.tokens[2], w, line.number});
  }
  if (static_cast<long long>(raw.size()) != want)
    throw ParseError(lines.back().number,
                     "expected exactly " + std::to_string(want) +
                         " arcs for n=" + std::to_string(n) + ", found " +
                         std::to_string(raw.size()));

  if (n == 1) {
    // no arcs, so the file never states the vertex name; invent one
    return WeightedTournament(static_cast<int>(k), VertexTable::numbered(1),
                              {});
  }
  if (static_cast<long long>(names.size()) != n)
    throw ParseError(lines.back().number,
                     "arcs mention " + std::to_string(names.size()) +
                         " distinct names, expected n=" + std::to_string(n));

  std::sort(names.begin(), names.end());
  VertexTable table(names);
  std::vector<Arc> arcs;
  for (const RawArc& a : raw)
    arcs.push_back({*table.find(a.from), *table.find(a.to), a.weight});
  return WeightedTournament(static_cast<int>(k), std::move(table), arcs);
}

WeightedTournament parse_tournament_text(const std::string& text) {
  std::istringstream in(text);
  return parse_tournament(in);
}

std::string print_tournament(const WeightedTournament& t) {
  std::ostringstream out;
  out << "tournament k=" << t.k() << " n=" << t.n() << "\n";
  auto arcs = t.arcs();
  const VertexTable& names = t.vertices();
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    return std::tie(names.name(a.from), names.name(a.to)) <
           std::tie(names.name(b.from), names.name(b.to));
  });
  for (const Arc& a : arcs)
    out << "arc " << names.name(a.from) << ' ' << names.name(a.to) << ' '
        << a.weight << "\n";
  return out.str();
}

std::string format_vertex_set(const VertexTable& names, const VertexSet& s) {
  std::vector<std::string> sorted;
  for (int v : s) sorted.push_back(names.name(v));
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ", ";
    out += sorted[i];
  }
  out += "}";
  return out;
}

}  // namespace kmaj
