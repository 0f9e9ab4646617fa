#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relpack/formats.hpp"

using namespace relpack;

namespace {

std::vector<Graph> labelled_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) g.add_edge(u, v);
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 matches a hand-rolled encoder on every small graph") {
  for (const Graph& g : labelled_graphs_up_to(5)) {
    std::string expected = oracle::encode_graph6(g);
    CHECK(emit_graph6(g) == expected);
    CHECK(parse_graph6(expected) == g);
    CHECK(emit_graph6(parse_graph6(expected)) == expected);
  }
}

TEST_CASE("graph6 anchors") {
  CHECK(emit_graph6(complete(3)) == "Bw");
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6("@") == empty_graph(1));
  CHECK(emit_graph6(empty_graph(2)) == "A?");
  CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
  CHECK(parse_graph6("Bw\n") == complete(3));
}

TEST_CASE("graph6 long form") {
  Graph empty63 = empty_graph(63);
  std::string enc = emit_graph6(empty63);
  CHECK(enc[0] == '~');
  CHECK(parse_graph6(enc) == empty63);
  std::mt19937 rng(5);
  Graph g(100);
  std::bernoulli_distribution coin(0.3);
  for (int u = 0; u < 100; ++u)
    for (int v = u + 1; v < 100; ++v)
      if (coin(rng)) g.add_edge(u, v);
  CHECK(parse_graph6(emit_graph6(g)) == g);
}

TEST_CASE("graph6 parse errors carry positions") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);        // truncated bits
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);      // trailing data
  CHECK_THROWS_AS(parse_graph6("B "), ParseError);       // byte out of range
  CHECK_THROWS_AS(parse_graph6("B{"), ParseError);       // nonzero padding
  try {
    parse_graph6("B{");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("sparse6 decodes everything the reference encoder produces") {
  for (const Graph& g : labelled_graphs_up_to(5)) {
    if (g.vertex_count() == 0) continue;
    CHECK(parse_sparse6(oracle::encode_sparse6(g)) == g);
  }
  CHECK_THROWS_AS(parse_sparse6("Bw"), ParseError);  // missing ':'
}

TEST_CASE("shorthand grammar") {
  CHECK(parse_shorthand("C5") == cycle(5));
  CHECK(parse_shorthand("K1") == complete(1));
  CHECK(parse_shorthand("P3") == path(3));
  CHECK(parse_shorthand("E4") == empty_graph(4));
  CHECK(parse_shorthand("petersen") == petersen());
  CHECK_THROWS_AS(parse_shorthand("C2"), ParseError);
  CHECK_THROWS_AS(parse_shorthand("X5"), ParseError);
  CHECK_THROWS_AS(parse_shorthand("K"), ParseError);
  CHECK_THROWS_AS(parse_shorthand("K3b"), ParseError);
}

TEST_CASE("edge lists") {
  CHECK(parse_edgelist("n 3\n0 1\n1 2") == path(3));
  CHECK(parse_edgelist("n 1\n") == complete(1));
  CHECK_THROWS_AS(parse_edgelist("0 1\n1 2"), ParseError);       // no header
  CHECK_THROWS_AS(parse_edgelist("n 3\n0 1\n0 1"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_edgelist("n 3\n1 1"), ParseError);       // loop
  CHECK_THROWS_AS(parse_edgelist("n 3\n0 7"), ParseError);       // range
  CHECK_THROWS_AS(parse_edgelist("n 3\n0 1 2"), ParseError);     // arity
}

TEST_CASE("graph text detection") {
  CHECK(parse_graph_text("C5") == cycle(5));  // shorthand wins over graph6
  CHECK(parse_graph_text("Bw") == complete(3));
  CHECK(parse_graph_text("n 2\n0 1") == complete(2));
  CHECK(parse_graph_text(oracle::encode_sparse6(cycle(4))) == cycle(4));
  CHECK(parse_graph_text(unescape_cli_text("n 3\\n0 1\\n1 2")) == path(3));
}
