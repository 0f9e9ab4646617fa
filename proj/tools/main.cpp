#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relpack/commands.hpp"
#include "relpack/formats.hpp"

namespace {

using relpack::Json;

// Graph arguments accept shorthand (C5, K3, P4, E2, petersen), graph6,
// sparse6, an edge list ("n 3\n0 1\n1 2", literal \n allowed), or "-" for
// stdin.
relpack::Graph read_graph_arg(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }
  return relpack::parse_graph_text(relpack::unescape_cli_text(text));
}

int default_jobs() {
  if (const char* env = std::getenv("RELPACK_JOBS")) {
    int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

int emit(const Json& report, const std::string& output) {
  if (output == "csv")
    std::cout << relpack::to_csv(report);
  else
    std::cout << report.dump(2) << "\n";
  return relpack::report_ok(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact independence, fractional packing, and graph expansion"};
  app.require_subcommand(1);
  app.fallthrough();  // --output and friends may follow the subcommand

  std::string output = "json";
  int jobs = default_jobs();
  unsigned seed = 1;
  app.add_option("--output", output, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", jobs, "parallel workers for pair scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampled suites");

  auto* invariants = app.add_subcommand(
      "invariants", "alpha, alpha*, alpha_k and structure flags");
  std::string inv_graph;
  int inv_k = 1;
  invariants->add_option("graph", inv_graph, "graph argument")->required();
  invariants->add_option("--k", inv_k, "fold parameter k")
      ->check(CLI::PositiveNumber);

  auto* relative = app.add_subcommand(
      "relative", "relative fractional packing value or certified bounds");
  std::string rel_g, rel_h;
  int rel_budget = 64;
  relative->add_option("G", rel_g, "left graph")->required();
  relative->add_option("H", rel_h, "right graph")->required();
  relative->add_option("--budget", rel_budget, "witness enumeration budget")
      ->check(CLI::PositiveNumber);

  auto* cycles = app.add_subcommand(
      "cycles", "cycle-pair table with brute-force cross-checks");
  int cycles_max_n = 7;
  cycles->add_option("--max-n", cycles_max_n, "table bound, at most 9")
      ->check(CLI::Range(3, 9));

  auto* expand = app.add_subcommand(
      "expand", "expansion membership with replayable certificates");
  std::string exp_g, exp_h;
  expand->add_option("G", exp_g, "target graph")->required();
  expand->add_option("H", exp_h, "source graph")->required();

  auto* scan = app.add_subcommand(
      "conjecture-scan", "compare value <= 1 with membership over small pairs");
  int scan_max = 5;
  scan->add_option("--max-vertices", scan_max, "catalog bound, at most 7")
      ->check(CLI::Range(1, 7));

  auto* theorems =
      app.add_subcommand("theorems", "run a verification suite");
  std::string suite = "all";
  theorems->add_option("--suite", suite, "main, appendix, or all")
      ->check(CLI::IsMember({"main", "appendix", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (invariants->parsed())
      return emit(relpack::cmd_invariants(read_graph_arg(inv_graph), inv_k),
                  output);
    if (relative->parsed())
      return emit(relpack::cmd_relative(read_graph_arg(rel_g),
                                        read_graph_arg(rel_h), rel_budget),
                  output);
    if (cycles->parsed()) return emit(relpack::cmd_cycles(cycles_max_n), output);
    if (expand->parsed())
      return emit(relpack::cmd_expand(read_graph_arg(exp_g),
                                      read_graph_arg(exp_h)),
                  output);
    if (scan->parsed())
      return emit(relpack::cmd_conjecture_scan(scan_max, jobs), output);
    if (theorems->parsed())
      return emit(relpack::cmd_theorems(suite, jobs, seed), output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
