#pragma once

#include <vector>

#include "relpack/graph.hpp"
#include "relpack/lp.hpp"
#include "relpack/rational.hpp"

namespace relpack {

// Exact independence number by branch and bound over bitsets: branch on a
// maximum-degree vertex of the residual subgraph, bound by a greedy clique
// cover. Deterministic.
int independence_number(const Graph& g);
VertexSet max_independent_set(const Graph& g);

// Optimum of the maximal-clique LP with right-hand side 1.
Rational fractional_packing(const Graph& g);

struct FractionalSolution {
  Rational value;
  std::vector<Rational> weights;      // one per vertex
  std::vector<VertexSet> cliques;     // constraint order
  std::vector<Rational> clique_duals; // fractional clique cover
};
FractionalSolution fractional_packing_solution(const Graph& g);

struct GeneralizedIndependence {
  int value = 0;
  std::vector<int> multiplicities;
};

// Maximum total multiplicity with at most k picks from any clique.
// Depth-first branch and bound on multiplicities; the prune combines the
// clique-cover dual of the k=1 LP with memoized residual LP optima.
GeneralizedIndependence generalized_independence(const Graph& g, int k);

// LP route, computed twice: once with right-hand side k and once as k times
// the k=1 optimum. Disagreement throws InternalError.
Rational generalized_fractional(const Graph& g, int k);

// Minimum clique partition via exact coloring of the complement.
// Guarded at 20 vertices.
std::vector<VertexSet> clique_partition(const Graph& g);

}  // namespace relpack
