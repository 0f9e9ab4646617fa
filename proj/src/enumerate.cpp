#include "relpack/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "relpack/formats.hpp"

namespace relpack {

namespace {

std::mutex cache_mutex;

// Level extension: every graph on n vertices arises from some (n-1)-vertex
// graph by attaching one vertex, so extending all representatives with all
// neighborhoods and deduplicating canonically is exhaustive.
std::vector<Graph> build_level(const std::vector<Graph>& prev, int n) {
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> reps;
  for (const Graph& base : prev) {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      Graph g(n);
      for (int u = 0; u < n - 1; ++u)
        for (int v = u + 1; v < n - 1; ++v)
          if (base.adjacent(u, v)) g.add_edge(u, v);
      for (int u = 0; u < n - 1; ++u)
        if ((mask >> u) & 1) g.add_edge(u, n - 1);
      Graph canon = canonical_form(g);
      std::string key = emit_graph6(canon);
      if (seen.insert(key).second) reps.emplace_back(std::move(key), std::move(canon));
    }
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  return out;
}

std::map<int, std::vector<Graph>>& graph_cache() {
  static std::map<int, std::vector<Graph>> cache;
  return cache;
}

std::map<int, std::vector<Graph>>& connected_cache() {
  static std::map<int, std::vector<Graph>> cache;
  return cache;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& cache = graph_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (int k = 0; k <= n; ++k) {
    if (cache.count(k)) continue;
    if (k == 0) {
      cache[0] = {Graph(0)};
    } else {
      cache[k] = build_level(cache[k - 1], k);
    }
  }
  return cache[n];
}

const std::vector<Graph>& all_connected_graphs(int n) {
  const auto& everything = all_graphs(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& cache = connected_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  for (const Graph& g : everything)
    if (is_connected(g)) out.push_back(g);
  cache[n] = std::move(out);
  return cache[n];
}

}  // namespace relpack
