#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relpack/enumerate.hpp"
#include "relpack/invariants.hpp"

using namespace relpack;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("independence number agrees with subset enumeration") {
  CHECK(independence_number(cycle(5)) == 2);
  for (int n = 3; n <= 9; ++n) CHECK(independence_number(complete(n)) == 1);
  for (int n = 4; n <= 9; ++n)
    CHECK(independence_number(complement(cycle(n))) == 2);
  CHECK(independence_number(petersen()) == 4);

  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n))
      CHECK(independence_number(g) == oracle::naive_alpha(g));

  std::mt19937 rng(3);
  for (int t = 0; t < 15; ++t) {
    Graph g = random_graph(10, 0.4, rng);
    CHECK(independence_number(g) == oracle::naive_alpha(g));
  }

  // 20-vertex product pinned by the same oracle
  Graph prod = strong_product(complement(cycle(5)), cycle(4));
  CHECK(oracle::naive_alpha(prod) == 4);
  CHECK(independence_number(prod) == 4);
}

TEST_CASE("maximum independent sets are valid and deterministic") {
  for (const Graph& g : all_graphs(5)) {
    VertexSet s = max_independent_set(g);
    CHECK(is_independent_set(g, s));
    CHECK(s.size() == independence_number(g));
    CHECK(max_independent_set(g) == s);
  }
  CHECK(independence_number(strong_product(cycle(5), cycle(5))) == 5);
  CHECK(independence_number(strong_product(cycle(5), complete(1))) ==
        independence_number(cycle(5)));
}

TEST_CASE("fractional packing basics") {
  CHECK(fractional_packing(cycle(5)) == Rational(5, 2));
  CHECK(fractional_packing(complete(4)) == Rational(1));
  CHECK(fractional_packing(cycle(4)) == Rational(2));
  for (const Graph& g : all_graphs(5)) {
    Rational alpha_star = fractional_packing(g);
    CHECK(Rational(independence_number(g)) <= alpha_star);
    CHECK(alpha_star <= Rational(g.vertex_count()));
  }
}

TEST_CASE("k-fold independence values") {
  CHECK(generalized_independence(cycle(5), 2).value == 5);
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k)
      CHECK(generalized_independence(complete(n), k).value == k);
  CHECK(generalized_independence(cycle(5), 3).value == 7);
  CHECK(oracle::naive_alpha_k(cycle(5), 3, false) == 7);

  for (const Graph& g : all_graphs(4)) {
    if (g.vertex_count() == 0) continue;
    CHECK(generalized_independence(g, 1).value == independence_number(g));
    for (int k = 1; k <= 3; ++k) {
      int got = generalized_independence(g, k).value;
      // the clique family does not matter: maximal vs all cliques
      CHECK(got == oracle::naive_alpha_k(g, k, false));
      CHECK(got == oracle::naive_alpha_k(g, k, true));
    }
  }
}

TEST_CASE("k-fold solutions are feasible") {
  for (const Graph& g : all_connected_graphs(5))
    for (int k = 1; k <= 3; ++k) {
      GeneralizedIndependence sol = generalized_independence(g, k);
      int total = 0;
      for (int m : sol.multiplicities) total += m;
      CHECK(total == sol.value);
      for (const VertexSet& clique : maximal_cliques(g)) {
        int sum = 0;
        for (int v : clique.members()) sum += sol.multiplicities[v];
        CHECK(sum <= k);
      }
    }
}

TEST_CASE("fractional k-fold scaling") {
  CHECK(generalized_fractional(cycle(5), 2) == Rational(5));
  CHECK(generalized_fractional(complete(2), 3) == Rational(3));
  for (const Graph& g : all_graphs(4)) {
    if (g.vertex_count() == 0) continue;
    CHECK(generalized_fractional(g, 1) == fractional_packing(g));
  }
}

TEST_CASE("clique partitions") {
  auto c4 = clique_partition(cycle(4));
  REQUIRE(c4.size() == 2);
  CHECK(c4[0].size() == 2);
  CHECK(c4[1].size() == 2);

  auto c6 = clique_partition(cycle(6));
  REQUIRE(c6.size() == 3);
  for (const VertexSet& block : c6) CHECK(block.size() == 2);

  auto c5 = clique_partition(cycle(5));
  CHECK(c5.size() == 3);  // exceeds alpha(C5) = 2: imperfection witness

  for (const Graph& g : all_graphs(6)) {
    if (!is_perfect(g)) continue;
    CHECK((int)clique_partition(g).size() == independence_number(g));
  }
  CHECK_THROWS_AS(clique_partition(empty_graph(21)), SizeLimitError);
}

TEST_CASE("sandwich chain alpha <= alpha_k / k <= alpha*") {
  for (const Graph& g : all_graphs(5)) {
    if (g.vertex_count() == 0) continue;
    Rational alpha_star = fractional_packing(g);
    int alpha = independence_number(g);
    for (int k = 1; k <= 4; ++k) {
      int ak = generalized_independence(g, k).value;
      CHECK(Rational(alpha) <= Rational(ak) / Rational(k));
      CHECK(Rational(ak) <= Rational(k) * alpha_star);
    }
  }
}
