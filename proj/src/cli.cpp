#include "kmaj/cli.hpp"

#include "kmaj/clockwise.hpp"
#include "kmaj/constructions.hpp"
#include "kmaj/domination.hpp"
#include "kmaj/io.hpp"
#include "kmaj/rational.hpp"
#include "kmaj/search.hpp"
#include "kmaj/tournament.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace kmaj {

namespace {

Profile load_ballots(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  try {
    return parse_ballots(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Rational parse_q(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw std::runtime_error("malformed rational \"" + text +
                             "\" (want \"p/q\" or an integer)");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact toolkit for weighted k-majority tournaments"};
  app.require_subcommand(1);

  int limit_override = 0;  // 0 = keep the default cap
  int jobs = 1;
  std::uint64_t seed = 0;
  app.add_option("--limit-override", limit_override,
                 "raise the exhaustive-scan vertex cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "worker threads for the subset scan")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed for the random subcommand");

  auto limits = [&] {
    SearchLimits l;
    if (limit_override > 0) l.max_vertices = limit_override;
    l.jobs = jobs;
    return l;
  };

  auto* gamma = app.add_subcommand(
      "gamma", "tournament and maximum approval gap of a ballot file");
  gamma->fallthrough();
  std::string gamma_file;
  gamma->add_option("file", gamma_file, "ballot file")->required();
  gamma->callback([&] {
    WeightedTournament t = tournament_from_profile(load_ballots(gamma_file));
    out << print_tournament(t);
    GapWitness g = max_approval_gap(t, limits());
    out << "gamma_w = " << g.gap.str() << "\n";
    out << "witness = " << format_vertex_set(t.vertices(), g.set) << "\n";
  });

  auto* gap = app.add_subcommand(
      "gap", "approval gap of a named dominating set");
  gap->fallthrough();
  std::string gap_file;
  std::vector<std::string> gap_names;
  gap->add_option("file", gap_file, "ballot file")->required();
  gap->add_option("name", gap_names, "members of the dominating set")
      ->required();
  gap->callback([&] {
    WeightedTournament t = tournament_from_profile(load_ballots(gap_file));
    std::vector<int> ids;
    for (const std::string& name : gap_names) {
      auto id = t.vertices().find(name);
      if (!id) throw std::runtime_error("unknown candidate \"" + name + "\"");
      if (std::find(ids.begin(), ids.end(), *id) != ids.end())
        throw std::runtime_error("candidate \"" + name + "\" given twice");
      ids.push_back(*id);
    }
    out << "W = " << approval_gap(t, VertexSet(std::move(ids))).str() << "\n";
  });

  auto* construct = app.add_subcommand(
      "construct", "emit ballots realizing a target gap");
  construct->fallthrough();
  std::string construct_q;
  int construct_k = 0;
  std::string which;
  construct->add_option("--q", construct_q, "target value, \"p/q\" or integer");
  construct->add_option("--k", construct_k, "majority threshold")
      ->required()
      ->check(CLI::PositiveNumber);
  construct
      ->add_option("--which", which,
                   "gamma: gamma_w = q; gap: some W(T,D) = q; half: "
                   "gamma_w = k-1/2; three: 3 candidates, gamma_w = q")
      ->required()
      ->check(CLI::IsMember({"gamma", "gap", "half", "three"}));
  construct->callback([&] {
    if (which == "half") {
      Profile p = half_gap_construction(construct_k);
      if (!construct_q.empty() &&
          parse_q(construct_q) != Rational(2 * construct_k - 1, 2))
        throw std::runtime_error(
            "--which half realizes q = " +
            Rational(2 * construct_k - 1, 2).str() + " at k = " +
            std::to_string(construct_k) + "; drop --q or pass that value");
      out << print_ballots(p);
      return;
    }
    if (construct_q.empty())
      throw std::runtime_error("--q is required for --which " + which);
    Rational q = parse_q(construct_q);
    if (which == "gamma") {
      out << print_ballots(gamma_realization(q, construct_k));
    } else if (which == "three") {
      out << print_ballots(three_vertex_construction(q, construct_k));
    } else {
      auto [p, d] = gap_realization(q, construct_k);
      out << "# approval gap " << q.str() << " attained by D = "
          << format_vertex_set(p.vertices(), d) << "\n";
      out << print_ballots(p);
    }
  });

  auto* clockwise = app.add_subcommand(
      "clockwise", "ballots inducing the clockwise tournament CW(n), "
                   "every arc weight k");
  clockwise->fallthrough();
  int cw_n = 0;
  int cw_k = 0;
  clockwise->add_option("--n", cw_n, "vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  clockwise->add_option("--k", cw_k, "majority threshold, at least 2")
      ->required()
      ->check(CLI::Range(2, 1000));
  clockwise->callback([&] {
    out << print_ballots(lift_orders(clockwise_orders({cw_n}), cw_k));
  });

  auto* verify = app.add_subcommand(
      "verify", "recompute gamma_w of a ballot file and compare to --q");
  verify->fallthrough();
  std::string verify_file;
  std::string verify_q;
  verify->add_option("file", verify_file, "ballot file")->required();
  verify->add_option("--q", verify_q, "expected gamma_w")->required();
  bool verify_failed = false;
  verify->callback([&] {
    Rational q = parse_q(verify_q);
    WeightedTournament t = tournament_from_profile(load_ballots(verify_file));
    GapWitness g = max_approval_gap(t, limits());
    if (g.gap == q) {
      out << "PASS gamma_w = " << g.gap.str() << "\n";
    } else {
      out << "FAIL gamma_w = " << g.gap.str() << ", expected " << q.str()
          << "\n";
      verify_failed = true;
    }
  });

  auto* search_m = app.add_subcommand(
      "search-m", "smallest vertex count realizing gamma_w = q, "
                  "by exhaustive profile search");
  search_m->fallthrough();
  std::string search_q;
  int search_k = 0;
  int n_max = 0;
  std::uint64_t max_tuples = SearchBudget{}.max_order_tuples;
  search_m->add_option("--q", search_q, "target gamma_w")->required();
  search_m->add_option("--k", search_k, "majority threshold")
      ->required()
      ->check(CLI::PositiveNumber);
  search_m->add_option("--n-max", n_max, "largest vertex count to try")
      ->required()
      ->check(CLI::PositiveNumber);
  search_m->add_option("--max-tuples", max_tuples,
                       "order-tuple budget for the whole search");
  bool search_starved = false;
  search_m->callback([&] {
    Rational q = parse_q(search_q);
    SearchBudget budget;
    budget.max_vertices = n_max;
    budget.max_order_tuples = max_tuples;
    MinVerticesResult r = min_vertices_search(q, search_k, n_max, budget);
    std::string m = "m(" + q.str() + ", " + std::to_string(search_k) + ")";
    if (r.exact) {
      out << m << " = " << r.value << "\n";
    } else if (r.budget_exceeded) {
      out << m << " > " << r.value << " (search incomplete)\n";
      err << "error: order-tuple budget exhausted at n = " << r.value + 1
          << "; raise --max-tuples or lower --n-max\n";
      search_starved = true;
    } else {
      out << m << " > " << r.value << "\n";
    }
  });

  auto* random = app.add_subcommand(
      "random", "uniformly random ballot file (see --seed)");
  random->fallthrough();
  int rand_n = 0;
  int rand_k = 0;
  random->add_option("--n", rand_n, "candidate count")
      ->required()
      ->check(CLI::PositiveNumber);
  random->add_option("--k", rand_k, "majority threshold")
      ->required()
      ->check(CLI::PositiveNumber);
  random->callback(
      [&] { out << print_ballots(random_profile(rand_n, rand_k, seed)); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const LimitError& e) {
    err << "error: " << e.what()
        << " (raise the cap with --limit-override <n>)\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (search_starved) return 2;
  return verify_failed ? 1 : 0;
}

}  // namespace kmaj
