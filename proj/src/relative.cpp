#include "relpack/relative.hpp"

#include <algorithm>
#include <set>

#include "relpack/enumerate.hpp"
#include "relpack/formats.hpp"

namespace relpack {

std::string method_name(RelativeMethod m) {
  switch (m) {
    case RelativeMethod::vertex_transitive_exact: return "vertex-transitive-exact";
    case RelativeMethod::perfect_exact: return "perfect-exact";
    case RelativeMethod::cycle_formula_exact: return "cycle-formula-exact";
    case RelativeMethod::bounds: return "bounds";
  }
  return "?";
}

Rational relative_vertex_transitive(const Graph& g, const Graph& h) {
  if (h.vertex_count() == 0) throw PreconditionError("H must be nonempty");
  if (!is_vertex_transitive(g))
    throw PreconditionError("G is not vertex-transitive");
  Graph product = strong_product(complement(g), h);
  return Rational(g.vertex_count()) / Rational(independence_number(product));
}

Rational relative_perfect(const Graph& g, const Graph& h) {
  if (h.vertex_count() == 0) throw PreconditionError("H must be nonempty");
  if (!is_perfect(g)) throw PreconditionError("G is not perfect");
  return Rational(independence_number(g)) / Rational(independence_number(h));
}

Rational cycle_formula_as_printed(int n, int m) {
  if (n < 3 || m < 3) throw PreconditionError("cycles need >= 3 vertices");
  if (m % 2 == 0) return Rational(n, m);
  if (n % 2 == 0) return Rational(n, m - 1);
  if (n <= m) return Rational(n, m);
  return Rational(n, m - 1);
}

Rational cycle_formula(int n, int m) {
  if (n == 3)
    throw PreconditionError(
        "cycle formula excluded at n = 3; use relative_perfect (C3 is perfect)");
  if (n < 4 || m < 3) throw PreconditionError("cycle formula domain: n >= 4, m >= 3");
  return cycle_formula_as_printed(n, m);
}

VertexSet cycle_witness_set(int n, int m) {
  if (n % 2 == 0 || m % 2 == 0 || n < 5 || m < n)
    throw PreconditionError("witness set needs odd 5 <= n <= m");
  VertexSet a(n * m);
  for (int i = 0; i < n; ++i) a.insert(i * m + i);  // (u_i, v_i)
  for (int j = n; j < m; ++j) {
    int u = ((j - n) % 2 == 0) ? 0 : 1;  // u_1, u_2 alternating
    a.insert(u * m + j);
  }
  return a;
}

bool parity_obstruction_check(int n, int m) {
  if (n % 2 == 0 || m % 2 == 0 || m < 3 || m >= n)
    throw PreconditionError("parity check needs odd 3 <= m < n");
  Graph product = strong_product(complement(cycle(n)), cycle(m));
  return independence_number(product) == m - 1;
}

namespace {

Rational alpha_ratio_for_witness(const Graph& g, const Graph& h, const Graph& w) {
  Graph gw = strong_product(g, w);
  Graph hw = strong_product(h, w);
  return Rational(independence_number(gw)) / Rational(independence_number(hw));
}

// Scaled optimal weights of the k=1 clique LP: n_i = N x*_i with N the lcm
// of the solution denominators.
std::vector<int> scaled_lp_multiplicities(const FractionalSolution& sol) {
  mpz_class scale = lcm_of_denominators(sol.weights);
  std::vector<int> mult(sol.weights.size());
  for (size_t i = 0; i < sol.weights.size(); ++i) {
    Rational m = sol.weights[i] * Rational(scale);
    mult[i] = (int)m.num().get_si();
  }
  return mult;
}

}  // namespace

RelativeResult relative_bounds(const Graph& g, const Graph& h, int budget) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw PreconditionError("bounds need nonempty graphs");
  RelativeResult out;
  out.method = RelativeMethod::bounds;
  out.upper = fractional_packing(g) / Rational(independence_number(h));

  std::optional<Rational> lower;
  std::optional<Graph> witness;
  std::string witness_key;
  std::set<std::string> seen;
  int skipped = 0;

  auto consider = [&](const Graph& w) {
    if (w.vertex_count() == 0) return;
    std::string key = emit_graph6(canonical_form(w));
    if (!seen.insert(key).second) return;
    Rational ratio;
    try {
      ratio = alpha_ratio_for_witness(g, h, w);
    } catch (const SizeLimitError&) {
      ++skipped;
      return;
    }
    if (ratio > out.upper)
      throw InternalError("witness ratio exceeds the alpha*(G)/alpha(H) bound");
    if (!lower || ratio > *lower ||
        (ratio == *lower && key < witness_key)) {
      lower = ratio;
      witness = w;
      witness_key = key;
    }
  };

  consider(complete(1));
  consider(complement(g));
  consider(complement(h));
  FractionalSolution sol = fractional_packing_solution(g);
  std::vector<int> mult = scaled_lp_multiplicities(sol);
  try {
    consider(blowup(complement(g), mult));
    consider(complement(blowup(g, mult)));  // the Hales maximizer shape
  } catch (const SizeLimitError&) {
    ++skipped;
  }
  int enumerated = 0;
  for (int nw = 1; enumerated < budget && nw <= 8; ++nw) {
    for (const Graph& w : all_connected_graphs(nw)) {
      if (enumerated >= budget) break;
      ++enumerated;
      consider(w);
    }
  }

  out.lower = *lower;
  out.lower_witness = witness;
  out.skipped_candidates = skipped;
  if (out.lower > out.upper)
    throw InternalError("bounds inverted: lower exceeds upper");
  return out;
}

namespace {

constexpr int kCrossCheckProductCap = 256;
constexpr int kDefaultWitnessBudget = 64;

RelativeResult exact_result(RelativeMethod method, const Rational& value,
                            bool cross_checked) {
  RelativeResult out;
  out.method = method;
  out.value = value;
  out.lower = value;
  out.upper = value;
  out.cross_checked = cross_checked;
  return out;
}

}  // namespace

RelativeResult relative(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw PreconditionError("relative packing needs nonempty graphs");
  if (is_cycle_graph(g) && is_cycle_graph(h) && g.vertex_count() >= 4) {
    int n = g.vertex_count(), m = h.vertex_count();
    Rational value = cycle_formula(n, m);
    bool checked = false;
    if ((long long)n * m <= kCrossCheckProductCap) {
      Rational oracle = relative_vertex_transitive(g, h);
      if (oracle != value)
        throw InternalError("cycle formula disagrees with the brute-force route");
      checked = true;
    }
    return exact_result(RelativeMethod::cycle_formula_exact, value, checked);
  }
  if (g.vertex_count() <= 64 && is_perfect(g))
    return exact_result(RelativeMethod::perfect_exact, relative_perfect(g, h),
                        false);
  if (is_vertex_transitive(g))
    return exact_result(RelativeMethod::vertex_transitive_exact,
                        relative_vertex_transitive(g, h), false);
  return relative_bounds(g, h, kDefaultWitnessBudget);
}

HalesWitness hales_witness(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("G must be nonempty");
  FractionalSolution sol = fractional_packing_solution(g);
  std::vector<int> mult = scaled_lp_multiplicities(sol);
  // Repeated vertices must stay pairwise non-adjacent so the diagonal set
  // reaches N alpha*; that is the complement of the clique blowup of G.
  Graph w = complement(blowup(g, mult));
  HalesWitness out{w, Rational(0)};
  Graph gw = strong_product(g, w);
  out.ratio = Rational(independence_number(gw)) / Rational(independence_number(w));
  if (out.ratio != sol.value)
    throw InternalError("Hales witness ratio differs from alpha*");
  return out;
}

std::optional<Graph> find_ratio_witness(const Graph& g, const Rational& a,
                                        int budget) {
  Rational alpha = Rational(independence_number(g));
  Rational alpha_star = fractional_packing(g);
  if (a < alpha || a > alpha_star)
    throw PreconditionError("target ratio outside [alpha, alpha*]");

  int examined = 0;
  auto matches = [&](const Graph& w) -> bool {
    if (w.vertex_count() == 0) return false;
    ++examined;
    int aw = independence_number(w);
    // alpha(GxW) = a * alpha(W) must be integral to match exactly.
    Rational target = a * Rational(aw);
    if (!target.is_integer()) return false;
    Graph gw;
    try {
      gw = strong_product(g, w);
    } catch (const SizeLimitError&) {
      return false;
    }
    return Rational(independence_number(gw)) == target;
  };

  if (matches(complete(1))) return complete(1);
  Graph hales = hales_witness(g).w;
  if (matches(hales)) return hales;

  // Blowups of the complement by total size, then lexicographically.
  Graph gc = complement(g);
  int n = g.vertex_count();
  for (int total = 1; examined < budget && total <= 2 * n; ++total) {
    std::vector<int> mult(n, 0);
    auto rec = [&](auto&& self, int idx, int left) -> std::optional<Graph> {
      if (examined >= budget) return std::nullopt;
      if (idx == n) {
        if (left != 0) return std::nullopt;
        Graph w = blowup(gc, mult);
        if (matches(w)) return w;
        return std::nullopt;
      }
      for (int take = 0; take <= left; ++take) {
        mult[idx] = take;
        if (auto found = self(self, idx + 1, left - take)) return found;
        mult[idx] = 0;
        if (examined >= budget) return std::nullopt;
      }
      return std::nullopt;
    };
    if (auto found = rec(rec, 0, total)) return found;
  }

  for (int nw = 1; examined < budget && nw <= 8; ++nw)
    for (const Graph& w : all_graphs(nw)) {
      if (examined >= budget) break;
      if (matches(w)) return w;
    }
  return std::nullopt;
}

RatioBoundReport ratio_bound_check(const Graph& g, const Graph& h) {
  RelativeResult rel = relative(g, h);
  RatioBoundReport out;
  out.upper = rel.upper;
  out.alpha_ratio =
      Rational(independence_number(g)) / Rational(independence_number(h));
  out.alpha_ok = out.alpha_ratio <= out.upper;
  out.alpha_star_ratio = fractional_packing(g) / fractional_packing(h);
  out.alpha_star_ok = out.alpha_star_ratio <= out.upper;
  return out;
}

}  // namespace relpack
