// Command-line front end: build restricted-Hanoi state graphs, count
// their arcs, inspect degrees, solve transfer tasks, and sweep the
// counting identities.
//
// Exit codes: 0 success, 1 usage/validation error, 2 unsolvable task or
// identity mismatch, 3 state space exceeds code capacity.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hanoi/hanoi.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_mismatch = 2;
constexpr int exit_capacity = 3;

// Naive builder cross-checks inside `check` are limited to this many
// states; the pairwise scan is quadratic and exists as an oracle, not
// as a production path.
constexpr std::uint64_t naive_check_limit = 4096;

// SPEC is a family name (complete|path|cycle|star) or file:PATH with a
// JSON digraph {"pegs": m, "arcs": [[p, q], ...]}.
hanoi::MovementDigraph resolve_digraph(const std::string& spec, int pegs) {
  if (const auto family = hanoi::family_from_string(spec))
    return hanoi::make_family(*family, pegs);
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open digraph file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("digraph file " + path + ": " + e.what());
    }
    hanoi::MovementDigraph d = hanoi::digraph_from_json(j);
    if (d.peg_count() != pegs)
      throw std::invalid_argument("digraph file declares " +
                                  std::to_string(d.peg_count()) +
                                  " pegs but --pegs is " + std::to_string(pegs));
    return d;
  }
  throw std::invalid_argument("unknown digraph spec: " + spec +
                              " (expected complete|path|cycle|star|file:PATH)");
}

hanoi::HanoiGraph build(const std::string& builder, int discs,
                        const hanoi::MovementDigraph& d) {
  return builder == "naive" ? hanoi::build_naive(discs, d)
                            : hanoi::build_by_neighbors(discs, d);
}

int run_gen(int discs, int pegs, const std::string& spec, const std::string& builder,
            const std::string& format, const std::string& out_path) {
  const hanoi::MovementDigraph d = resolve_digraph(spec, pegs);
  const hanoi::HanoiGraph g = build(builder, discs, d);
  const auto fmt = hanoi::format_from_string(format);
  if (!fmt) throw std::invalid_argument("unknown format: " + format);
  if (out_path.empty()) {
    hanoi::export_graph(g, *fmt, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    hanoi::export_graph(g, *fmt, out);
  }
  return exit_ok;
}

int run_count(int discs, int pegs, const std::string& spec, bool verify,
              bool as_json) {
  const hanoi::MovementDigraph d = resolve_digraph(spec, pegs);
  const hanoi::ArcCountReport closed =
      hanoi::closed_form_report(discs, pegs, d.arc_count());
  if (verify) {
    const hanoi::ArcCountReport seen =
        hanoi::enumerated_report(hanoi::build_by_neighbors(discs, d));
    if (seen.per_disc != closed.per_disc || seen.total != closed.total) {
      std::cerr << "mismatch: enumerated counts disagree with closed form\n";
      return exit_mismatch;
    }
  }
  if (as_json) {
    std::cout << hanoi::report_json(closed, spec) << '\n';
    return exit_ok;
  }
  for (int k = 1; k <= discs; ++k)
    std::cout << "t_" << k << " = " << closed.per_disc[static_cast<std::size_t>(k) - 1]
              << '\n';
  std::cout << "total = " << closed.total << '\n';
  if (verify) std::cout << "verified: enumerated counts match closed form\n";
  return exit_ok;
}

int run_degree(int discs, int pegs, const std::string& spec, bool has_state,
               const std::string& state_text) {
  const hanoi::MovementDigraph d = resolve_digraph(spec, pegs);
  if (has_state) {
    const hanoi::State s = hanoi::parse_state(state_text, discs, pegs);
    std::cout << hanoi::outdegree_scan(s, d) << '\n';
  } else {
    std::cout << hanoi::profile_json(hanoi::degree_profile(discs, d)).dump() << '\n';
  }
  return exit_ok;
}

int run_solve(int discs, int pegs, const std::string& spec,
              const std::string& from_text, const std::string& to_text) {
  const hanoi::MovementDigraph d = resolve_digraph(spec, pegs);
  const hanoi::StateCode from =
      hanoi::encode(hanoi::parse_state(from_text, discs, pegs));
  const hanoi::StateCode to = hanoi::encode(hanoi::parse_state(to_text, discs, pegs));
  const hanoi::HanoiGraph g = hanoi::build_by_neighbors(discs, d);
  const auto seq = hanoi::shortest_path(g, from, to);
  if (!seq) {
    std::cerr << "unsolvable: no move sequence from " << from_text << " to "
              << to_text << '\n';
    return exit_mismatch;
  }
  std::cout << hanoi::moves_json(*seq).dump() << '\n';
  return exit_ok;
}

// One (n, digraph) cell of the check sweep. Everything here is an
// exact identity; any deviation fails the whole run.
bool check_one(int n, const hanoi::MovementDigraph& d, const std::string& name) {
  const int m = d.peg_count();
  const auto fail = [&](const char* what) {
    std::cerr << "FAIL n=" << n << " m=" << m << " digraph=" << name << ": " << what
              << '\n';
    return false;
  };

  const hanoi::HanoiGraph fast = hanoi::build_by_neighbors(n, d);
  if (fast.vertex_count <= naive_check_limit &&
      hanoi::build_naive(n, d).arcs != fast.arcs)
    return fail("naive and neighbor builders disagree");

  const hanoi::ArcCountReport closed =
      hanoi::closed_form_report(n, m, d.arc_count());
  const hanoi::ArcCountReport seen = hanoi::enumerated_report(fast);
  if (seen.per_disc != closed.per_disc)
    return fail("per-disc counts disagree with closed form");
  if (seen.total != closed.total) return fail("arc total disagrees with closed form");

  const hanoi::DegreeProfile profile = hanoi::degree_profile(n, d);
  if (hanoi::bigint(profile.sum) != closed.total)
    return fail("outdegree sum disagrees with arc total");

  if (n >= 1) {
    if (!hanoi::check_recurrences(n, m, d.arc_count()))
      return fail("per-disc recurrences do not hold");
    if (hanoi::is_strongly_connected(fast) != d.is_strongly_connected())
      return fail("state-graph connectivity disagrees with digraph connectivity");
  }
  return true;
}

int run_check(int max_discs, int max_pegs) {
  bool all_ok = true;
  for (int m = 3; m <= max_pegs; ++m) {
    std::vector<std::pair<std::string, hanoi::MovementDigraph>> digraphs;
    for (const hanoi::Family family :
         {hanoi::Family::complete, hanoi::Family::path, hanoi::Family::cycle,
          hanoi::Family::star})
      digraphs.emplace_back(hanoi::to_string(family), hanoi::make_family(family, m));
    for (int i = 0; i < 5; ++i) {
      std::mt19937_64 rng(100000u + 97u * static_cast<unsigned>(m) +
                          static_cast<unsigned>(i));
      digraphs.emplace_back("random-" + std::to_string(i), hanoi::make_random(m, rng));
    }
    for (int n = 0; n <= max_discs; ++n) {
      bool row_ok = true;
      for (const auto& [name, d] : digraphs) row_ok = check_one(n, d, name) && row_ok;
      std::cout << (row_ok ? "ok" : "FAIL") << ": n=" << n << " m=" << m << " ("
                << digraphs.size() << " digraphs)\n";
      all_ok = all_ok && row_ok;
    }
  }
  return all_ok ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Tower of Hanoi state graphs: build, count, solve."};
  app.require_subcommand(1);

  int discs = 0;
  int pegs = 0;
  std::string digraph_spec;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--discs", discs, "number of discs (>= 0)")->required();
    cmd->add_option("--pegs", pegs, "number of pegs (>= 3)")->required();
    cmd->add_option("--digraph", digraph_spec,
                    "movement digraph: complete|path|cycle|star|file:PATH")
        ->required();
  };

  CLI::App* gen = app.add_subcommand("gen", "write the state graph to a sink");
  std::string builder = "fast";
  std::string format;
  std::string out_path;
  add_common(gen);
  gen->add_option("--builder", builder, "graph builder")
      ->check(CLI::IsMember({"naive", "fast"}));
  gen->add_option("--format", format, "output format")
      ->required()
      ->check(CLI::IsMember({"dot", "csv", "jsonl"}));
  gen->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* count = app.add_subcommand("count", "closed-form per-disc arc counts");
  bool verify = false;
  bool count_json = false;
  add_common(count);
  count->add_flag("--verify", verify,
                  "enumerate the graph and compare against the closed form");
  count->add_flag("--json", count_json, "emit the counts as a JSON report");

  CLI::App* degree = app.add_subcommand("degree", "state outdegrees");
  std::string state_text;
  add_common(degree);
  CLI::Option* state_opt = degree->add_option(
      "--state", state_text, "single state to report (default: full histogram)");

  CLI::App* solve = app.add_subcommand("solve", "shortest move sequence");
  std::string from_text;
  std::string to_text;
  add_common(solve);
  solve->add_option("--from", from_text, "start state")->required();
  solve->add_option("--to", to_text, "goal state")->required();

  CLI::App* check = app.add_subcommand("check", "sweep the counting identities");
  int max_discs = 0;
  int max_pegs = 0;
  check->add_option("--max-discs", max_discs, "largest disc count")->required();
  check->add_option("--max-pegs", max_pegs, "largest peg count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (gen->parsed())
      return run_gen(discs, pegs, digraph_spec, builder, format, out_path);
    if (count->parsed()) return run_count(discs, pegs, digraph_spec, verify, count_json);
    if (degree->parsed())
      return run_degree(discs, pegs, digraph_spec, state_opt->count() > 0, state_text);
    if (solve->parsed()) return run_solve(discs, pegs, digraph_spec, from_text, to_text);
    if (check->parsed()) return run_check(max_discs, max_pegs);
  } catch (const hanoi::capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_capacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
