#include "relpack/commands.hpp"

#include <sstream>

#include "relpack/expand.hpp"
#include "relpack/formats.hpp"
#include "relpack/invariants.hpp"
#include "relpack/relative.hpp"
#include "relpack/verify.hpp"

namespace relpack {

namespace {

constexpr int kInvariantLpGuard = 128;
constexpr int kPerfectGuard = 64;

Json rational_json(const Rational& r) { return r.str(); }

Json ratio_report_json(const RatioBoundReport& r) {
  Json out;
  out["upper"] = rational_json(r.upper);
  out["alpha_ratio"] = rational_json(r.alpha_ratio);
  out["alpha_ok"] = r.alpha_ok;
  out["alpha_star_ratio"] = rational_json(r.alpha_star_ratio);
  out["alpha_star_ok"] = r.alpha_star_ok;
  return out;
}

Json sequence_json(const std::vector<ExpandOperation>& ops) {
  Json arr = Json::array();
  for (const ExpandOperation& op : ops) arr.push_back(op.str());
  return arr;
}

}  // namespace

Json cmd_invariants(const Graph& g, int k) {
  Json out;
  out["command"] = "invariants";
  out["graph"] = emit_graph6(g);
  int n = g.vertex_count();
  out["vertex_count"] = n;
  out["alpha"] = independence_number(g);
  out["max_independent_set"] = max_independent_set(g).members();
  out["k"] = k;
  if (n <= kInvariantLpGuard && n > 0) {
    out["alpha_star"] = rational_json(fractional_packing(g));
    GeneralizedIndependence gen = generalized_independence(g, k);
    out["alpha_k"] = gen.value;
    out["alpha_star_k"] = rational_json(generalized_fractional(g, k));
    out["maximal_clique_count"] = (int)maximal_cliques(g).size();
  } else {
    out["alpha_star"] = nullptr;
    out["alpha_k"] = nullptr;
    out["alpha_star_k"] = nullptr;
    out["maximal_clique_count"] = n == 0 ? Json(0) : Json(nullptr);
    out["note"] = "fractional invariants skipped beyond 128 vertices";
  }
  out["is_perfect"] = n <= kPerfectGuard ? Json(is_perfect(g)) : Json(nullptr);
  out["is_vertex_transitive"] =
      n <= kInvariantLpGuard ? Json(is_vertex_transitive(g)) : Json(nullptr);
  out["ok"] = true;
  return out;
}

Json cmd_relative(const Graph& g, const Graph& h, int budget) {
  RelativeResult rel = relative(g, h);
  if (rel.method == RelativeMethod::bounds) rel = relative_bounds(g, h, budget);
  Json out;
  out["command"] = "relative";
  out["g"] = emit_graph6(g);
  out["h"] = emit_graph6(h);
  out["method"] = method_name(rel.method);
  out["value"] = rel.value ? rational_json(*rel.value) : Json(nullptr);
  out["lower"] = rational_json(rel.lower);
  out["upper"] = rational_json(rel.upper);
  out["witness"] =
      rel.lower_witness ? Json(emit_graph6(*rel.lower_witness)) : Json(nullptr);
  out["skipped_candidates"] = rel.skipped_candidates;
  out["cross_checked"] = rel.cross_checked;
  RatioBoundReport ratio = ratio_bound_check(g, h);
  out["ratio_bound_check"] = ratio_report_json(ratio);
  out["ok"] = ratio.alpha_ok && ratio.alpha_star_ok && rel.lower <= rel.upper;
  return out;
}

Json cmd_cycles(int max_n) {
  if (max_n < 3 || max_n > 9)
    throw PreconditionError("cycles table guarded at max-n in 3..9");
  Json rows = Json::array();
  int flagged = 0;
  bool flagged_outside_n3 = false;
  for (int n = 3; n <= max_n; ++n)
    for (int m = 3; m <= max_n; ++m) {
      Json row;
      row["n"] = n;
      row["m"] = m;
      Rational printed = cycle_formula_as_printed(n, m);
      row["printed_formula"] = printed.str();
      row["perfect_formula"] =
          n == 3 ? Json(relative_perfect(cycle(3), cycle(m)).str()) : Json(nullptr);
      Graph prod = strong_product(complement(cycle(n)), cycle(m));
      Rational brute = Rational(n) / Rational(independence_number(prod));
      row["brute_force"] = brute.str();
      bool agree = printed == brute;
      row["agree"] = agree;
      if (!agree) {
        ++flagged;
        if (n != 3) flagged_outside_n3 = true;
      }
      rows.push_back(std::move(row));
    }
  Json out;
  out["command"] = "cycles";
  out["max_n"] = max_n;
  out["rows"] = std::move(rows);
  out["flagged_rows"] = flagged;
  out["all_flags_at_n3"] = !flagged_outside_n3;
  out["ok"] = !flagged_outside_n3;
  return out;
}

Json cmd_expand(const Graph& g, const Graph& h) {
  Json out;
  out["command"] = "expand";
  out["g"] = emit_graph6(g);
  out["h"] = emit_graph6(h);
  auto labelmap = is_in_expand(g, h);
  int bound = g.vertex_count() + h.vertex_count();
  auto sequence = expand_sequence_search(g, h, bound);
  bool member = labelmap.has_value();
  out["member"] = member;
  out["labelmap"] = labelmap ? Json(labelmap->phi) : Json(nullptr);
  out["sequence"] = sequence ? sequence_json(sequence->sequence) : Json(nullptr);
  bool verified = true;
  if (labelmap) verified = verified && verify_certificate(g, h, *labelmap);
  if (sequence) verified = verified && verify_certificate(g, h, *sequence);
  out["certificates_verified"] = verified;
  out["oracles_agree"] = labelmap.has_value() == sequence.has_value();
  ProjectionCertificate proj = certificate_via_projections(g, h);
  Json proj_json;
  proj_json["available"] = proj.certificate.has_value();
  proj_json["note"] = proj.note;
  proj_json["sequence"] = proj.certificate
                              ? sequence_json(proj.certificate->sequence)
                              : Json(nullptr);
  proj_json["verified"] = proj.certificate
                              ? Json(verify_certificate(g, h, *proj.certificate))
                              : Json(nullptr);
  out["projection_route"] = std::move(proj_json);
  out["ok"] = verified && labelmap.has_value() == sequence.has_value();
  return out;
}

Json cmd_conjecture_scan(int max_vertices, int jobs) {
  ConjectureScan scan = conjecture_scan(max_vertices, jobs);
  Json out;
  out["command"] = "conjecture-scan";
  out["max_vertices"] = scan.max_vertices;
  out["pairs"] = scan.pairs_total;
  Json methods;
  for (const auto& [name, count] : scan.pairs_by_method) methods[name] = count;
  out["pairs_by_method"] = std::move(methods);
  out["skipped_inexact"] = scan.skipped_inexact;
  out["critical"] = scan.critical;
  out["candidates"] = scan.candidates;
  out["triv_violations"] = scan.triv_violations;
  out["ok"] = scan.critical.empty() && scan.triv_violations == 0;
  return out;
}

Json cmd_theorems(const std::string& suite, int jobs, unsigned seed) {
  if (suite != "main" && suite != "appendix" && suite != "all")
    throw PreconditionError("suite must be main, appendix, or all");
  std::vector<CheckResult> checks;
  if (suite == "main" || suite == "all") {
    auto main_checks = main_suite(jobs, seed);
    checks.insert(checks.end(), main_checks.begin(), main_checks.end());
  }
  if (suite == "appendix" || suite == "all") {
    auto appendix_checks = appendix_suite(jobs, seed);
    checks.insert(checks.end(), appendix_checks.begin(), appendix_checks.end());
  }
  Json rows = Json::array();
  int failed = 0;
  for (const CheckResult& c : checks) {
    Json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
    if (!c.pass) ++failed;
  }
  Json out;
  out["command"] = "theorems";
  out["suite"] = suite;
  out["checks"] = std::move(rows);
  out["passed"] = (int)checks.size() - failed;
  out["failed"] = failed;
  out["ok"] = failed == 0;
  return out;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  bool quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!quote) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_csv(const Json& report) {
  std::ostringstream out;
  const Json* rows = nullptr;
  if (report.contains("rows")) rows = &report["rows"];
  else if (report.contains("checks")) rows = &report["checks"];
  if (rows && rows->is_array() && !rows->empty()) {
    const Json& first = rows->front();
    bool head = true;
    for (auto it = first.begin(); it != first.end(); ++it) {
      if (!head) out << ",";
      out << csv_cell(it.key());
      head = false;
    }
    out << "\n";
    for (const Json& row : *rows) {
      head = true;
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (!head) out << ",";
        out << csv_cell(it.value());
        head = false;
      }
      out << "\n";
    }
    return out.str();
  }
  out << "key,value\n";
  for (auto it = report.begin(); it != report.end(); ++it)
    out << csv_cell(it.key()) << "," << csv_cell(it.value()) << "\n";
  return out.str();
}

bool report_ok(const Json& report) {
  return report.contains("ok") && report["ok"].is_boolean() &&
         report["ok"].get<bool>();
}

}  // namespace relpack
