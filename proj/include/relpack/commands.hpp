#pragma once

#include <string>

#include <json.hpp>

#include "relpack/graph.hpp"

namespace relpack {

using Json = nlohmann::ordered_json;

// Machine-readable reports behind the CLI subcommands. Every report carries
// an "ok" flag that drives the process exit code; fractional values are
// "p/q" strings and graphs are graph6 strings throughout.
Json cmd_invariants(const Graph& g, int k);
Json cmd_relative(const Graph& g, const Graph& h, int budget);
Json cmd_cycles(int max_n);
Json cmd_expand(const Graph& g, const Graph& h);
Json cmd_conjecture_scan(int max_vertices, int jobs);
Json cmd_theorems(const std::string& suite, int jobs, unsigned seed);

std::string to_csv(const Json& report);
bool report_ok(const Json& report);

}  // namespace relpack
