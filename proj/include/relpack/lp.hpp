#pragma once

#include <vector>

#include "relpack/graph.hpp"
#include "relpack/rational.hpp"

namespace relpack {

// Maximize objective . x subject to coeffs . x <= rhs per constraint and
// x >= 0, all data exact rationals.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> constraints;
  std::vector<Rational> rhs;
};

struct SimplexResult {
  Rational value;
  std::vector<Rational> solution;
  std::vector<Rational> duals;  // one multiplier per constraint
};

// Exact primal simplex with Bland's rule. Requires feasibility at the
// origin (all rhs >= 0). The returned optimum is re-verified against the
// original data with its dual certificate; failure throws InternalError.
SimplexResult simplex_max(const LinearProgram& lp);

// One variable per vertex, one constraint per maximal clique with
// right-hand side k. Isolated vertices contribute singleton cliques, so
// every variable is bounded.
LinearProgram lp_from_cliques(const Graph& g, int k);

}  // namespace relpack
