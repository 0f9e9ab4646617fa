#pragma once

#include <optional>
#include <string>

#include "relpack/graph.hpp"
#include "relpack/invariants.hpp"
#include "relpack/rational.hpp"

namespace relpack {

enum class RelativeMethod {
  vertex_transitive_exact,
  perfect_exact,
  cycle_formula_exact,
  bounds,
};
std::string method_name(RelativeMethod m);

// Outcome of a relative packing computation. Exact routes carry
// lower == upper == value; the bounds route carries a certified interval
// with the witness graph attaining the lower end.
struct RelativeResult {
  RelativeMethod method = RelativeMethod::bounds;
  std::optional<Rational> value;
  Rational lower;
  Rational upper;
  std::optional<Graph> lower_witness;
  int skipped_candidates = 0;
  bool cross_checked = false;
};

// n_G / alpha(G^c x H) for vertex-transitive G.
Rational relative_vertex_transitive(const Graph& g, const Graph& h);

// alpha(G) / alpha(H) for perfect G.
Rational relative_perfect(const Graph& g, const Graph& h);

// The exact cycle-pair value. Domain n >= 4, m >= 3: at n = 3 the printed
// case table disagrees with brute force (the C3 complement is a triangle,
// not an edgeless pair), so callers are directed to relative_perfect.
Rational cycle_formula(int n, int m);

// The raw case table including n = 3, for discrepancy reporting only.
Rational cycle_formula_as_printed(int n, int m);

// The explicit independent set of size m in C_n^c x C_m for odd
// 5 <= n <= m: the diagonal, then alternating first coordinates 0/1.
VertexSet cycle_witness_set(int n, int m);

// For odd 3 <= m < n, confirms by brute force that alpha(C_n^c x C_m)
// stops at m - 1 (the +/-1 edge labeling cannot sum to 0 mod n).
bool parity_obstruction_check(int n, int m);

// Certified interval: the upper end is alpha*(G)/alpha(H); the lower end is
// the best ratio alpha(GxW)/alpha(HxW) over K1, the complements, the
// LP-scaled blowup witnesses, and `budget` connected graphs.
RelativeResult relative_bounds(const Graph& g, const Graph& h, int budget);

// Dispatch: cycle pair, then perfect, then vertex-transitive, then bounds.
RelativeResult relative(const Graph& g, const Graph& h);

struct HalesWitness {
  Graph w;
  Rational ratio;
};

// A witness graph attaining sup_W alpha(GxW)/alpha(W) = alpha*(G): scale an
// optimal LP solution to integers n_i and take the complement of the blowup
// of G by n_i (repeated vertices pairwise non-adjacent, so the diagonal
// independent set realizes N alpha*). The ratio is recomputed by brute
// force and checked exactly.
HalesWitness hales_witness(const Graph& g);

// Best-effort search for W with alpha(GxW)/alpha(W) = a, scanning K1, the
// Hales witness, blowups of G^c, and small graphs. Absence within budget is
// inconclusive.
std::optional<Graph> find_ratio_witness(const Graph& g, const Rational& a,
                                        int budget);

struct RatioBoundReport {
  Rational upper;
  Rational alpha_ratio;
  bool alpha_ok = false;
  Rational alpha_star_ratio;
  bool alpha_star_ok = false;
};

// Checks alpha(G)/alpha(H) <= upper and alpha*(G)/alpha*(H) <= upper for
// the upper end produced by relative().
RatioBoundReport ratio_bound_check(const Graph& g, const Graph& h);

}  // namespace relpack
