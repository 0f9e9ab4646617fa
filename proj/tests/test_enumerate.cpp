#include <doctest.h>

#include <set>

#include "relpack/enumerate.hpp"
#include "relpack/formats.hpp"

using namespace relpack;

TEST_CASE("catalog entries are canonical, distinct, and sorted") {
  for (int n = 1; n <= 6; ++n) {
    const auto& level = all_graphs(n);
    std::set<std::string> keys;
    std::string prev;
    for (const Graph& g : level) {
      CHECK(g.vertex_count() == n);
      CHECK(canonical_form(g) == g);  // stored as canonical representative
      std::string key = emit_graph6(g);
      CHECK(keys.insert(key).second);
      CHECK(prev < key);
      prev = key;
    }
  }
}

TEST_CASE("catalog is stable across calls") {
  const auto& a = all_graphs(5);
  const auto& b = all_graphs(5);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(all_connected_graphs(2).size() == 1);
  CHECK(all_graphs(0).size() == 1);
}
