#include "relpack/lp.hpp"

namespace relpack {

SimplexResult simplex_max(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = int(lp.rhs.size());
  if ((int)lp.objective.size() != n || (int)lp.constraints.size() != m)
    throw std::invalid_argument("inconsistent LP shape");
  for (const auto& row : lp.constraints)
    if ((int)row.size() != n) throw std::invalid_argument("bad constraint row");
  for (const Rational& b : lp.rhs)
    if (b < Rational(0))
      throw PreconditionError("LP is not feasible at the origin");

  // Dense tableau over structural + slack columns; basis starts all-slack.
  const int cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<Rational> reduced(cols);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = lp.constraints[i][j];
    t[i][n + i] = Rational(1);
    t[i][cols] = lp.rhs[i];
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) reduced[j] = lp.objective[j];

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (reduced[j] > Rational(0)) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (!(t[i][enter] > Rational(0))) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw UnboundedError("LP is unbounded above");
    // Pivot on (leave, enter).
    Rational pivot = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rational f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = reduced[enter];
    if (!f.is_zero())
      for (int j = 0; j < cols; ++j) reduced[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  SimplexResult res;
  res.solution.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) res.solution[basis[i]] = t[i][cols];
  res.value = Rational(0);
  for (int j = 0; j < n; ++j) res.value += lp.objective[j] * res.solution[j];
  res.duals.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) res.duals[i] = -reduced[n + i];

  // Certificate check against the original data: primal feasibility, dual
  // feasibility, and matching objective values.
  for (int j = 0; j < n; ++j)
    if (res.solution[j] < Rational(0))
      throw InternalError("simplex produced a negative variable");
  for (int i = 0; i < m; ++i) {
    Rational lhs(0);
    for (int j = 0; j < n; ++j) lhs += lp.constraints[i][j] * res.solution[j];
    if (lhs > lp.rhs[i])
      throw InternalError("simplex produced an infeasible solution");
  }
  Rational dual_value(0);
  for (int i = 0; i < m; ++i) {
    if (res.duals[i] < Rational(0))
      throw InternalError("negative dual multiplier");
    dual_value += res.duals[i] * lp.rhs[i];
  }
  for (int j = 0; j < n; ++j) {
    Rational covered(0);
    for (int i = 0; i < m; ++i) covered += res.duals[i] * lp.constraints[i][j];
    if (covered < lp.objective[j])
      throw InternalError("dual certificate does not cover the objective");
  }
  if (dual_value != res.value)
    throw InternalError("primal and dual objective values disagree");
  return res;
}

LinearProgram lp_from_cliques(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("clique LP needs k >= 1");
  LinearProgram lp;
  lp.num_vars = g.vertex_count();
  lp.objective.assign(lp.num_vars, Rational(1));
  for (const VertexSet& clique : maximal_cliques(g)) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (int v : clique.members()) row[v] = Rational(1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rational(k));
  }
  return lp;
}

}  // namespace relpack
