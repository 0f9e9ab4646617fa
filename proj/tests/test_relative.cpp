#include <doctest.h>

#include "oracles.hpp"
#include "relpack/enumerate.hpp"
#include "relpack/formats.hpp"
#include "relpack/relative.hpp"

using namespace relpack;

TEST_CASE("cycle formula cases and anchors") {
  CHECK(cycle_formula(5, 7) == Rational(5, 7));
  CHECK(cycle_formula(7, 5) == Rational(7, 4));
  CHECK(cycle_formula(6, 5) == Rational(3, 2));
  CHECK(cycle_formula(4, 6) == Rational(2, 3));
  CHECK(cycle_formula(5, 4) == Rational(5, 4));
  CHECK(cycle_formula(9, 9) == Rational(1));
  CHECK_THROWS_AS(cycle_formula(3, 5), PreconditionError);
  CHECK_THROWS_AS(cycle_formula(5, 2), PreconditionError);
  CHECK(cycle_formula_as_printed(3, 5) == Rational(3, 5));
}

TEST_CASE("vertex-transitive route") {
  CHECK(relative_vertex_transitive(complete(1), cycle(5)) == Rational(1, 2));
  CHECK(relative_vertex_transitive(cycle(5), cycle(5)) == Rational(1));
  CHECK(relative_vertex_transitive(cycle(4), cycle(6)) == Rational(2, 3));
  CHECK_THROWS_AS(relative_vertex_transitive(path(3), cycle(5)),
                  PreconditionError);
}

TEST_CASE("perfect route") {
  CHECK(relative_perfect(cycle(4), cycle(5)) == Rational(1));
  CHECK(relative_perfect(complete(1), cycle(5)) == Rational(1, 2));
  CHECK(relative_perfect(cycle(3), cycle(5)) == Rational(1, 2));
  CHECK_THROWS_AS(relative_perfect(cycle(5), cycle(4)), PreconditionError);
}

TEST_CASE("formula agrees with the brute-force route on a sample") {
  for (int n = 4; n <= 7; ++n)
    for (int m = 3; m <= 7; ++m)
      CHECK(cycle_formula(n, m) ==
            relative_vertex_transitive(cycle(n), cycle(m)));
}

TEST_CASE("cycle witness sets") {
  VertexSet a55 = cycle_witness_set(5, 5);
  CHECK(a55.size() == 5);
  CHECK(is_independent_set(strong_product(complement(cycle(5)), cycle(5)), a55));

  VertexSet a57 = cycle_witness_set(5, 7);
  CHECK(a57.size() == 7);
  CHECK(is_independent_set(strong_product(complement(cycle(5)), cycle(7)), a57));

  VertexSet a79 = cycle_witness_set(7, 9);
  CHECK(a79.size() == 9);
  CHECK(is_independent_set(strong_product(complement(cycle(7)), cycle(9)), a79));

  CHECK_THROWS_AS(cycle_witness_set(5, 4), PreconditionError);
  CHECK_THROWS_AS(cycle_witness_set(6, 7), PreconditionError);
  CHECK_THROWS_AS(cycle_witness_set(7, 5), PreconditionError);
}

TEST_CASE("parity obstruction") {
  CHECK(parity_obstruction_check(7, 5));
  CHECK(independence_number(strong_product(complement(cycle(7)), cycle(5))) == 4);
  CHECK(parity_obstruction_check(9, 5));
  CHECK(parity_obstruction_check(5, 3));
  CHECK(independence_number(strong_product(complement(cycle(5)), cycle(3))) == 2);
  CHECK_THROWS_AS(parity_obstruction_check(5, 7), PreconditionError);
}

TEST_CASE("dispatch picks the documented routes") {
  RelativeResult r1 = relative(cycle(7), cycle(5));
  CHECK(r1.method == RelativeMethod::cycle_formula_exact);
  CHECK(r1.value == Rational(7, 4));
  CHECK(r1.cross_checked);
  CHECK(r1.lower == r1.upper);

  // both cycles, so the cycle route wins even though C4 is also perfect
  RelativeResult r2 = relative(cycle(4), cycle(7));
  CHECK(r2.method == RelativeMethod::cycle_formula_exact);
  CHECK(r2.value == Rational(2, 3));
  CHECK(*r2.value == relative_perfect(cycle(4), cycle(7)));

  RelativeResult r3 = relative(cycle(3), cycle(5));
  CHECK(r3.method == RelativeMethod::perfect_exact);
  CHECK(r3.value == Rational(1, 2));

  RelativeResult r4 = relative(petersen(), cycle(5));
  CHECK(r4.method == RelativeMethod::vertex_transitive_exact);
  Graph pc5 = strong_product(complement(petersen()), cycle(5));
  CHECK(*r4.value == Rational(10) / Rational(independence_number(pc5)));

  RelativeResult r5 = relative(cycle(5), path(3));
  CHECK(r5.method == RelativeMethod::vertex_transitive_exact);
  CHECK(*r5.value == Rational(5, 4));
}

TEST_CASE("even cycles give the same value on every applicable route") {
  for (int n : {4, 6})
    for (int m : {3, 4, 5, 6, 7}) {
      Rational f = cycle_formula(n, m);
      CHECK(f == relative_perfect(cycle(n), cycle(m)));
      CHECK(f == relative_vertex_transitive(cycle(n), cycle(m)));
    }
}

TEST_CASE("bounds route") {
  RelativeResult b1 = relative_bounds(cycle(5), cycle(5), 30);
  CHECK(b1.lower == Rational(1));
  CHECK(b1.upper == Rational(5, 4));
  REQUIRE(b1.lower_witness.has_value());
  CHECK(b1.lower_witness->vertex_count() == 1);  // K1 attains the tie first

  RelativeResult b2 = relative_bounds(complete(1), cycle(5), 20);
  CHECK(b2.lower == Rational(1, 2));
  CHECK(b2.upper == Rational(1, 2));

  // witness reproduces the reported lower bound exactly
  Graph g = petersen(), h = cycle(6);
  RelativeResult b3 = relative_bounds(g, h, 25);
  REQUIRE(b3.lower_witness.has_value());
  Graph w = *b3.lower_witness;
  Rational replay = Rational(independence_number(strong_product(g, w))) /
                    Rational(independence_number(strong_product(h, w)));
  CHECK(replay == b3.lower);
  CHECK(b3.lower <= b3.upper);

  // a larger budget never lowers the reported bound
  RelativeResult small = relative_bounds(g, h, 5);
  CHECK(small.lower <= b3.lower);
}

TEST_CASE("hales witnesses attain alpha*") {
  HalesWitness c5 = hales_witness(cycle(5));
  CHECK(c5.ratio == Rational(5, 2));
  CHECK(oracle::naive_isomorphic(c5.w, cycle(5)));

  HalesWitness k3 = hales_witness(complete(3));
  CHECK(k3.ratio == Rational(1));

  HalesWitness c4 = hales_witness(cycle(4));
  CHECK(c4.ratio == Rational(2));

  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_connected_graphs(n))
      CHECK(hales_witness(g).ratio == fractional_packing(g));
}

TEST_CASE("ratio witness search") {
  Graph c5 = cycle(5);
  auto low = find_ratio_witness(c5, Rational(2), 10);
  REQUIRE(low.has_value());
  CHECK(low->vertex_count() == 1);

  auto high = find_ratio_witness(c5, Rational(5, 2), 10);
  REQUIRE(high.has_value());

  CHECK_THROWS_AS(find_ratio_witness(c5, Rational(3), 10), PreconditionError);
  CHECK_THROWS_AS(find_ratio_witness(c5, Rational(1), 10), PreconditionError);

  auto mid = find_ratio_witness(c5, Rational(9, 4), 4500);
  REQUIRE(mid.has_value());
  Graph w = *mid;
  Rational replay = Rational(independence_number(strong_product(c5, w))) /
                    Rational(independence_number(w));
  CHECK(replay == Rational(9, 4));
}

TEST_CASE("ratio bound reports") {
  RatioBoundReport r1 = ratio_bound_check(cycle(7), cycle(5));
  CHECK(r1.upper == Rational(7, 4));
  CHECK(r1.alpha_ratio == Rational(3, 2));
  CHECK(r1.alpha_ok);
  CHECK(r1.alpha_star_ratio == Rational(7, 5));
  CHECK(r1.alpha_star_ok);

  RatioBoundReport r2 = ratio_bound_check(cycle(5), cycle(5));
  CHECK(r2.alpha_ratio == Rational(1));
  CHECK(r2.alpha_ok);
  CHECK(r2.alpha_star_ok);

  RatioBoundReport r3 = ratio_bound_check(complete(1), cycle(5));
  CHECK(r3.upper == Rational(1, 2));
  CHECK(r3.alpha_ratio == Rational(1, 2));  // tight
  CHECK(r3.alpha_ok);
}
