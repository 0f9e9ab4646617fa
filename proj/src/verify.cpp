#include "relpack/verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "relpack/enumerate.hpp"
#include "relpack/expand.hpp"
#include "relpack/formats.hpp"
#include "relpack/invariants.hpp"
#include "relpack/parallel.hpp"
#include "relpack/relative.hpp"

namespace relpack {

namespace {

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

std::vector<Graph> graphs_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& level = connected_only ? all_connected_graphs(n) : all_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

CheckResult check_cycle_table(int max_n) {
  const std::string name = "cycle-table-agreement";
  int rows = 0;
  for (int n = 4; n <= max_n; ++n)
    for (int m = 3; m <= max_n; ++m) {
      Rational formula = cycle_formula(n, m);
      Graph prod = strong_product(complement(cycle(n)), cycle(m));
      Rational brute = Rational(n) / Rational(independence_number(prod));
      if (formula != brute)
        return fail(name, "mismatch at n=" + std::to_string(n) +
                              " m=" + std::to_string(m) + ": formula " +
                              formula.str() + " vs brute " + brute.str());
      ++rows;
    }
  struct Anchor {
    int n, m;
    Rational want;
  };
  for (const Anchor& a : {Anchor{5, 7, Rational(5, 7)}, Anchor{7, 5, Rational(7, 4)},
                          Anchor{6, 5, Rational(3, 2)}, Anchor{4, 6, Rational(2, 3)}})
    if (cycle_formula(a.n, a.m) != a.want)
      return fail(name, "anchor f(" + std::to_string(a.n) + "," +
                            std::to_string(a.m) + ") wrong");
  return pass(name, std::to_string(rows) + " cycle pairs agree with brute force");
}

CheckResult check_n3_discrepancy() {
  const std::string name = "n3-discrepancy";
  for (int m = 3; m <= 9; ++m) {
    Graph prod = strong_product(complement(cycle(3)), cycle(m));
    Rational brute = Rational(3) / Rational(independence_number(prod));
    Rational printed = cycle_formula_as_printed(3, m);
    Rational perfect = relative_perfect(cycle(3), cycle(m));
    if (perfect != brute)
      return fail(name, "perfect formula wrong at m=" + std::to_string(m));
    bool flagged = printed != brute;
    if (m == 3 && flagged) return fail(name, "m=3 should agree");
    if (m != 3 && !flagged)
      return fail(name, "m=" + std::to_string(m) + " should be flagged");
  }
  Graph c3c5 = strong_product(complement(cycle(3)), cycle(5));
  if (independence_number(c3c5) != 6)
    return fail(name, "alpha(C3^c x C5) != 6");
  return pass(name, "printed formula diverges from brute force exactly at n=3, m!=3");
}

CheckResult check_reduction_formula(int max_h) {
  const std::string name = "single-vertex-reduction";
  int checked = 0;
  for (const Graph& h : graphs_up_to(max_h, /*connected_only=*/true)) {
    Rational got = relative_vertex_transitive(complete(1), h);
    if (got != Rational(1) / Rational(independence_number(h)))
      return fail(name, "mismatch at H=" + emit_graph6(h));
    ++checked;
  }
  return pass(name, std::to_string(checked) + " graphs: alpha*(K1|H) = 1/alpha(H)");
}

CheckResult check_hales_maximizer(int max_g) {
  const std::string name = "hales-maximizer";
  int checked = 0;
  for (const Graph& g : graphs_up_to(max_g, /*connected_only=*/true)) {
    try {
      HalesWitness w = hales_witness(g);  // the ratio check is built in
      if (w.ratio != fractional_packing(g))
        return fail(name, "ratio mismatch at G=" + emit_graph6(g));
    } catch (const std::exception& e) {
      return fail(name, "G=" + emit_graph6(g) + ": " + e.what());
    }
    ++checked;
  }
  return pass(name, std::to_string(checked) + " graphs attain alpha* exactly");
}

CheckResult check_rosenfeld_identity() {
  const std::string name = "rosenfeld-identity";
  int checked = 0;
  for (const Graph& g : graphs_up_to(5, false)) {
    if (!is_perfect(g)) continue;
    int ag = independence_number(g);
    for (const Graph& h : graphs_up_to(5, false)) {
      int got = independence_number(strong_product(g, h));
      if (got != ag * independence_number(h))
        return fail(name, "G=" + emit_graph6(g) + " H=" + emit_graph6(h));
      ++checked;
    }
  }
  return pass(name, std::to_string(checked) +
                        " perfect-by-arbitrary products multiply exactly");
}

CheckResult check_perfect_complement_closure(int max_n) {
  const std::string name = "perfect-complement-closure";
  int checked = 0;
  for (const Graph& g : graphs_up_to(max_n, false)) {
    if (is_perfect(g) != is_perfect(complement(g)))
      return fail(name, "closure fails at " + emit_graph6(g));
    ++checked;
  }
  return pass(name, std::to_string(checked) + " graphs closed under complement");
}

CheckResult check_clique_partition_counts(int max_n) {
  const std::string name = "clique-partition-count";
  int checked = 0;
  for (const Graph& g : graphs_up_to(max_n, false)) {
    auto blocks = clique_partition(g);
    VertexSet seen(g.vertex_count());
    for (const VertexSet& b : blocks) {
      if (!is_clique(g, b)) return fail(name, "non-clique block at " + emit_graph6(g));
      for (int v : b.members()) {
        if (seen.contains(v)) return fail(name, "overlap at " + emit_graph6(g));
        seen.insert(v);
      }
    }
    if (seen.size() != g.vertex_count())
      return fail(name, "blocks miss vertices at " + emit_graph6(g));
    if (is_perfect(g) && (int)blocks.size() != independence_number(g))
      return fail(name, "perfect G=" + emit_graph6(g) + " needs alpha(G) blocks");
    ++checked;
  }
  return pass(name, std::to_string(checked) + " partitions verified");
}

CheckResult check_expand_oracle_agreement(int max_n, int jobs) {
  const std::string name = "expand-oracle-agreement";
  std::vector<Graph> graphs = graphs_up_to(max_n, /*connected_only=*/true);
  int count = int(graphs.size());
  std::vector<std::string> errors(size_t(count) * count);
  // H-major order keeps the per-H reachability cache hot.
  parallel_for(count * count, jobs, [&](int idx) {
    const Graph& h = graphs[idx / count];
    const Graph& g = graphs[idx % count];
    auto labelmap = is_in_expand(g, h);
    if (labelmap && !verify_certificate(g, h, *labelmap)) {
      errors[idx] = "bad labelmap certificate";
      return;
    }
    int bound = g.vertex_count() + h.vertex_count();
    auto sequence = expand_sequence_search(g, h, bound);
    if (sequence && !verify_certificate(g, h, *sequence)) {
      errors[idx] = "sequence does not replay to G";
      return;
    }
    if (labelmap.has_value() != sequence.has_value())
      errors[idx] = std::string("oracles disagree: labelmap=") +
                    (labelmap ? "yes" : "no");
  });
  int pairs = count * count;
  for (int idx = 0; idx < pairs; ++idx)
    if (!errors[idx].empty()) {
      const Graph& h = graphs[idx / count];
      const Graph& g = graphs[idx % count];
      return fail(name, "G=" + emit_graph6(g) + " H=" + emit_graph6(h) + ": " +
                            errors[idx]);
    }
  return pass(name, std::to_string(pairs) + " ordered pairs agree");
}

CheckResult check_conjecture_scan(int max_vertices, int jobs) {
  const std::string name = "conjecture-scan";
  ConjectureScan scan = conjecture_scan(max_vertices, jobs);
  std::ostringstream detail;
  detail << scan.pairs_total << " pairs, " << scan.skipped_inexact
         << " without exact route";
  if (!scan.critical.empty())
    return fail(name, "critical: " + scan.critical.front());
  if (scan.triv_violations > 0)
    return fail(name, "membership with value > 1 observed");
  if (!scan.candidates.empty())
    detail << ", candidate disagreements: " << scan.candidates.size();
  return pass(name, detail.str());
}

CheckResult check_solver_certificates(int max_n) {
  const std::string name = "solver-self-checks";
  int checked = 0;
  for (const Graph& g : graphs_up_to(max_n, false)) {
    Rational alpha_star;
    try {
      alpha_star = fractional_packing(g);  // certificate verified inside
    } catch (const std::exception& e) {
      return fail(name, std::string("certificate failure: ") + e.what());
    }
    Rational alpha = Rational(independence_number(g));
    if (alpha > alpha_star)
      return fail(name, "alpha > alpha* at " + emit_graph6(g));
    if (is_perfect(g) && alpha != alpha_star)
      return fail(name, "perfect gap at " + emit_graph6(g));
    ++checked;
  }
  return pass(name, std::to_string(checked) + " LP certificates verified");
}

CheckResult check_formats_roundtrip() {
  const std::string name = "graph6-roundtrip";
  if (emit_graph6(complete(3)) != "Bw" || parse_graph6("Bw") != complete(3))
    return fail(name, "K3 does not encode to Bw");
  for (int n = 0; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) g.add_edge(u, v);
      std::string enc = emit_graph6(g);
      if (parse_graph6(enc) != g)
        return fail(name, "round trip broke for " + enc);
      if (emit_graph6(parse_graph6(enc)) != enc)
        return fail(name, "re-emit broke for " + enc);
    }
  }
  return pass(name, "all graphs on <= 5 vertices round-trip");
}

CheckResult check_monotonicity_spots() {
  const std::string name = "operation-monotonicity";
  struct Spot {
    Graph h;
    ExpandOperation op;
  };
  std::vector<Spot> spots;
  spots.push_back({cycle(5), ExpandOperation::remove(0)});
  spots.push_back({cycle(5), ExpandOperation::add(0, 2)});
  spots.push_back({path(3), ExpandOperation::substitute(1, 3)});
  spots.push_back({cycle(6), ExpandOperation::substitute(2, 2)});
  int checked = 0;
  for (const Spot& s : spots) {
    MonotonicityReport r = monotonicity_check(s.h, s.op, 4);
    if (r.violations > 0)
      return fail(name, "alpha(. x W) increased under " + s.op.str());
    checked += r.checked;
  }
  return pass(name, std::to_string(checked) + " products stayed monotone");
}

CheckResult check_witness_search_endpoints() {
  const std::string name = "ratio-witness-endpoints";
  std::ostringstream detail;
  for (const Graph& g : {cycle(5), cycle(4), complete(3)}) {
    Rational alpha = Rational(independence_number(g));
    Rational alpha_star = fractional_packing(g);
    auto low = find_ratio_witness(g, alpha, 50);
    auto high = find_ratio_witness(g, alpha_star, 50);
    if (!low || !high)
      return fail(name, "endpoint witness missing for " + emit_graph6(g));
  }
  auto mid = find_ratio_witness(cycle(5), Rational(9, 4), 4500);
  detail << "endpoints witnessed; a=9/4 on C5 "
         << (mid ? "found " + emit_graph6(*mid) : "not found within budget");
  return pass(name, detail.str());
}

CheckResult check_alpha2_c5() {
  const std::string name = "two-fold-c5-counterexample";
  GeneralizedIndependence two = generalized_independence(cycle(5), 2);
  if (two.value != 5) return fail(name, "alpha_2(C5) != 5");
  if (2 * independence_number(cycle(5)) != 4)
    return fail(name, "2 alpha(C5) != 4");
  return pass(name, "alpha_2(C5) = 5 > 4 = 2 alpha(C5)");
}

namespace {

// alpha_k for k = 1..max over one catalog, memoized per check.
std::vector<std::vector<int>> alpha_k_table(const std::vector<Graph>& graphs,
                                            int max_k) {
  std::vector<std::vector<int>> table(graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i) {
    table[i].resize(max_k + 1, 0);
    for (int k = 1; k <= max_k; ++k)
      table[i][k] = generalized_independence(graphs[i], k).value;
  }
  return table;
}

}  // namespace

CheckResult check_superadditivity(int max_n, int max_k) {
  const std::string name = "superadditivity";
  auto graphs = graphs_up_to(max_n, false);
  auto table = alpha_k_table(graphs, 2 * max_k);
  int checked = 0;
  for (size_t i = 0; i < graphs.size(); ++i)
    for (int k1 = 1; k1 <= max_k; ++k1)
      for (int k2 = 1; k2 <= max_k; ++k2) {
        if (table[i][k1] + table[i][k2] > table[i][k1 + k2])
          return fail(name, "violated at " + emit_graph6(graphs[i]));
        ++checked;
      }
  return pass(name, std::to_string(checked) + " instances superadditive");
}

CheckResult check_generalized_upper_bound(int max_n, int max_k) {
  const std::string name = "k-fold-upper-bound";
  auto graphs = graphs_up_to(max_n, false);
  auto table = alpha_k_table(graphs, max_k);
  int checked = 0;
  for (size_t i = 0; i < graphs.size(); ++i) {
    Rational alpha_star = fractional_packing(graphs[i]);
    for (int k = 1; k <= max_k; ++k) {
      if (Rational(table[i][k]) > Rational(k) * alpha_star)
        return fail(name, "alpha_k > k alpha* at " + emit_graph6(graphs[i]));
      ++checked;
    }
  }
  return pass(name, std::to_string(checked) + " bounds hold");
}

CheckResult check_product_inequality(int max_n, int max_k) {
  const std::string name = "product-inequality";
  auto graphs = graphs_up_to(max_n, false);
  int checked = 0;
  for (const Graph& g : graphs) {
    Rational alpha_star = fractional_packing(g);
    for (const Graph& w : graphs)
      for (int k = 1; k <= max_k; ++k) {
        int left = generalized_independence(strong_product(g, w), k).value;
        int right_k = generalized_independence(w, k).value;
        if (Rational(left) > alpha_star * Rational(right_k))
          return fail(name, "violated at G=" + emit_graph6(g) +
                                " W=" + emit_graph6(w));
        ++checked;
      }
  }
  return pass(name, std::to_string(checked) + " product bounds hold");
}

CheckResult check_product_inequality_sampled(int pairs, unsigned seed) {
  const std::string name = "product-inequality-sampled";
  auto graphs = graphs_up_to(5, false);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, graphs.size() - 1);
  for (int t = 0; t < pairs; ++t) {
    const Graph& g = graphs[pick(rng)];
    const Graph& w = graphs[pick(rng)];
    Rational alpha_star = fractional_packing(g);
    for (int k = 1; k <= 2; ++k) {
      int left = generalized_independence(strong_product(g, w), k).value;
      int right_k = generalized_independence(w, k).value;
      if (Rational(left) > alpha_star * Rational(right_k))
        return fail(name, "violated at G=" + emit_graph6(g) +
                              " W=" + emit_graph6(w));
    }
  }
  return pass(name, std::to_string(pairs) + " sampled pairs hold");
}

CheckResult check_scaling_attainment(int max_n) {
  const std::string name = "scaling-attainment";
  int checked = 0;
  long max_seen = 1;
  for (const Graph& g : graphs_up_to(max_n, false)) {
    FractionalSolution sol = fractional_packing_solution(g);
    long n_scale = lcm_of_denominators(sol.weights).get_si();
    max_seen = std::max(max_seen, n_scale);
    int value = generalized_independence(g, int(n_scale)).value;
    if (Rational(value) != Rational(n_scale) * sol.value)
      return fail(name, "alpha_N != N alpha* at " + emit_graph6(g));
    ++checked;
  }
  return pass(name, std::to_string(checked) +
                        " graphs attain, largest N = " + std::to_string(max_seen));
}

CheckResult check_limit_sandwich(int max_n, int max_m) {
  const std::string name = "limit-sandwich";
  int checked = 0;
  for (const Graph& g : graphs_up_to(max_n, false)) {
    FractionalSolution sol = fractional_packing_solution(g);
    long n_scale = lcm_of_denominators(sol.weights).get_si();
    for (int m = 1; m <= max_m; ++m) {
      Rational alpha_m = Rational(generalized_independence(g, m).value);
      if (alpha_m > Rational(m) * sol.value)
        return fail(name, "upper side broke at " + emit_graph6(g));
      if (Rational(m - n_scale) * sol.value > alpha_m)
        return fail(name, "lower side broke at " + emit_graph6(g));
      ++checked;
    }
  }
  return pass(name, std::to_string(checked) + " sandwich instances hold");
}

CheckResult check_fractional_scaling_law(int max_n) {
  const std::string name = "fractional-scaling-law";
  int checked = 0;
  for (const Graph& g : graphs_up_to(max_n, false))
    for (int k = 1; k <= 3; ++k) {
      if (generalized_fractional(g, k) != Rational(k) * fractional_packing(g))
        return fail(name, "scaling broke at " + emit_graph6(g));
      ++checked;
    }
  return pass(name, std::to_string(checked) + " LP scalings exact");
}

CheckResult check_collection_scaling() {
  const std::string name = "collection-scaling";
  std::vector<std::vector<Graph>> collections;
  collections.push_back({complete(3), cycle(5), complement(cycle(7))});
  collections.push_back({cycle(4), cycle(5), cycle(7)});
  for (const auto& graphs : collections) {
    mpz_class lcm_k = 1, product_k = 1;
    std::vector<Rational> stars;
    for (const Graph& g : graphs) {
      FractionalSolution sol = fractional_packing_solution(g);
      mpz_class n_scale = lcm_of_denominators(sol.weights);
      mpz_lcm(lcm_k.get_mpz_t(), lcm_k.get_mpz_t(), n_scale.get_mpz_t());
      product_k *= n_scale;
      stars.push_back(sol.value);
    }
    for (mpz_class k : {lcm_k, product_k}) {
      for (size_t i = 0; i < graphs.size(); ++i) {
        int value = generalized_independence(graphs[i], int(k.get_si())).value;
        if (Rational(value) != Rational(k) * stars[i])
          return fail(name, "collection scaling broke at k=" + k.get_str());
      }
    }
  }
  return pass(name, "lcm and product choices both scale every member");
}

std::vector<CheckResult> main_suite(int jobs, unsigned seed) {
  (void)seed;
  std::vector<CheckResult> out;
  out.push_back(check_cycle_table());
  out.push_back(check_n3_discrepancy());
  out.push_back(check_reduction_formula());
  out.push_back(check_hales_maximizer());
  out.push_back(check_rosenfeld_identity());
  out.push_back(check_perfect_complement_closure());
  out.push_back(check_clique_partition_counts());
  out.push_back(check_solver_certificates());
  out.push_back(check_formats_roundtrip());
  out.push_back(check_monotonicity_spots());
  out.push_back(check_witness_search_endpoints());
  out.push_back(check_expand_oracle_agreement(5, jobs));
  out.push_back(check_conjecture_scan(6, jobs));
  return out;
}

std::vector<CheckResult> appendix_suite(int jobs, unsigned seed) {
  (void)jobs;
  std::vector<CheckResult> out;
  out.push_back(check_alpha2_c5());
  out.push_back(check_superadditivity());
  out.push_back(check_generalized_upper_bound());
  out.push_back(check_product_inequality());
  out.push_back(check_product_inequality_sampled(25, seed));
  out.push_back(check_scaling_attainment());
  out.push_back(check_limit_sandwich());
  out.push_back(check_fractional_scaling_law());
  out.push_back(check_collection_scaling());
  return out;
}

}  // namespace relpack
