#include "relpack/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace relpack {

namespace {

using Mask = std::vector<uint64_t>;

int mask_count(const Mask& m) {
  int c = 0;
  for (uint64_t w : m) c += std::popcount(w);
  return c;
}

bool mask_get(const Mask& m, int v) { return (m[v >> 6] >> (v & 63)) & 1; }

struct MisSolver {
  const Graph& g;
  int n, words;
  Mask best_set, cur;
  int best = -1, cur_size = 0;
  std::vector<Mask> clique_pool;  // scratch for the clique-cover bound

  explicit MisSolver(const Graph& graph)
      : g(graph), n(graph.vertex_count()), words((graph.vertex_count() + 63) / 64) {
    if (n == 0) words = 0;
    cur.assign(words, 0);
  }

  int clique_cover_bound(const Mask& p) {
    int used = 0;
    for (int v = 0; v < n; ++v) {
      if (!mask_get(p, v)) continue;
      bool placed = false;
      for (int c = 0; c < used; ++c) {
        if (mask_get(clique_pool[c], v)) {
          for (int w = 0; w < words; ++w) clique_pool[c][w] &= g.row(v)[w];
          placed = true;
          break;
        }
      }
      if (!placed) {
        if ((int)clique_pool.size() <= used) clique_pool.emplace_back(words);
        for (int w = 0; w < words; ++w) clique_pool[used][w] = g.row(v)[w] & p[w];
        ++used;
      }
    }
    return used;
  }

  void expand(Mask p) {
    int remaining = mask_count(p);
    if (cur_size + remaining <= best) return;
    if (remaining == 0) {
      if (cur_size > best) {
        best = cur_size;
        best_set = cur;
      }
      return;
    }
    if (cur_size + clique_cover_bound(p) <= best) return;

    // Branch vertex: maximum degree inside p, ties by least index.
    int v = -1, vdeg = -1;
    for (int u = 0; u < n; ++u) {
      if (!mask_get(p, u)) continue;
      int d = 0;
      for (int w = 0; w < words; ++w) d += std::popcount(g.row(u)[w] & p[w]);
      if (d > vdeg) {
        vdeg = d;
        v = u;
      }
    }
    // Include v.
    Mask p_in(words);
    for (int w = 0; w < words; ++w) p_in[w] = p[w] & ~g.row(v)[w];
    p_in[v >> 6] &= ~(uint64_t(1) << (v & 63));
    cur[v >> 6] |= uint64_t(1) << (v & 63);
    ++cur_size;
    expand(std::move(p_in));
    --cur_size;
    cur[v >> 6] &= ~(uint64_t(1) << (v & 63));
    // Exclude v.
    p[v >> 6] &= ~(uint64_t(1) << (v & 63));
    expand(std::move(p));
  }

  void run() {
    best = 0;
    best_set.assign(words, 0);
    Mask p(words, 0);
    for (int v = 0; v < n; ++v) p[v >> 6] |= uint64_t(1) << (v & 63);
    expand(std::move(p));
  }
};

}  // namespace

VertexSet max_independent_set(const Graph& g) {
  MisSolver solver(g);
  solver.run();
  VertexSet out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mask_get(solver.best_set, v)) out.insert(v);
  return out;
}

int independence_number(const Graph& g) {
  MisSolver solver(g);
  solver.run();
  return solver.best;
}

Rational fractional_packing(const Graph& g) {
  if (g.vertex_count() == 0) return Rational(0);
  return simplex_max(lp_from_cliques(g, 1)).value;
}

FractionalSolution fractional_packing_solution(const Graph& g) {
  FractionalSolution out;
  out.cliques = maximal_cliques(g);
  if (g.vertex_count() == 0) {
    out.value = Rational(0);
    return out;
  }
  LinearProgram lp = lp_from_cliques(g, 1);
  SimplexResult res = simplex_max(lp);
  out.value = res.value;
  out.weights = std::move(res.solution);
  out.clique_duals = std::move(res.duals);
  return out;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph out((int)verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) out.add_edge((int)i, (int)j);
  return out;
}

struct GeneralizedSolver {
  const Graph& g;
  int k, n;
  std::vector<VertexSet> cliques;
  std::vector<std::vector<int>> cliques_of;  // vertex -> clique indices
  std::vector<long> caps;
  std::vector<int> order;            // branch order: degree desc, index asc
  std::vector<long> suffix_bound;    // floor(k * alpha*(G[order[i..]]))
  std::vector<long> dual_weight;     // clique cover scaled to integers
  long dual_scale = 1;
  long best = -1;
  std::vector<int> best_mult, cur_mult;

  GeneralizedSolver(const Graph& graph, int kk) : g(graph), k(kk), n(graph.vertex_count()) {
    cliques = maximal_cliques(g);
    cliques_of.assign(n, {});
    for (size_t c = 0; c < cliques.size(); ++c)
      for (int v : cliques[c].members()) cliques_of[v].push_back((int)c);
    caps.assign(cliques.size(), k);
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    // Residual LP bounds: the unfixed vertices always form a suffix of the
    // branch order, so only n+1 LP solves are needed.
    suffix_bound.assign(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
      std::vector<int> suffix(order.begin() + i, order.end());
      std::sort(suffix.begin(), suffix.end());
      Rational bound = Rational(k) * fractional_packing(induced_subgraph(g, suffix));
      suffix_bound[i] = bound.floor_long();
    }

    // Fractional clique cover from the k=1 dual, scaled to integers: any
    // feasible dual y gives sum_C y_C * cap_C as a capacity-aware bound.
    if (!cliques.empty()) {
      SimplexResult res = simplex_max(lp_from_cliques(g, 1));
      mpz_class scale = lcm_of_denominators(res.duals);
      dual_scale = scale.get_si();
      dual_weight.resize(cliques.size());
      for (size_t c = 0; c < cliques.size(); ++c) {
        Rational w = res.duals[c] * Rational(scale);
        dual_weight[c] = w.num().get_si();
      }
    }
  }

  long dual_bound() const {
    long total = 0;
    for (size_t c = 0; c < cliques.size(); ++c) total += dual_weight[c] * caps[c];
    return total / dual_scale;
  }

  void rec(int i, long total) {
    if (i == n) {
      if (total > best) {
        best = total;
        best_mult = cur_mult;
      }
      return;
    }
    if (total + suffix_bound[i] <= best) return;
    if (total + dual_bound() <= best) return;
    int v = order[i];
    long cap = k;
    for (int c : cliques_of[v]) cap = std::min(cap, caps[c]);
    for (long m = cap; m >= 0; --m) {
      if (total + m + suffix_bound[i + 1] <= best) break;
      cur_mult[v] = (int)m;
      for (int c : cliques_of[v]) caps[c] -= m;
      rec(i + 1, total + m);
      for (int c : cliques_of[v]) caps[c] += m;
      cur_mult[v] = 0;
    }
  }

  void run() {
    cur_mult.assign(n, 0);
    // Seed: k copies of a maximum independent set is always feasible.
    VertexSet seed = max_independent_set(g);
    best_mult.assign(n, 0);
    for (int v : seed.members()) best_mult[v] = k;
    best = (long)k * seed.size();
    rec(0, 0);
  }
};

}  // namespace

GeneralizedIndependence generalized_independence(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("generalized independence needs k >= 1");
  GeneralizedIndependence out;
  out.multiplicities.assign(g.vertex_count(), 0);
  if (g.vertex_count() == 0) return out;
  GeneralizedSolver solver(g, k);
  solver.run();
  out.value = (int)solver.best;
  out.multiplicities = solver.best_mult;
  return out;
}

Rational generalized_fractional(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("generalized fractional needs k >= 1");
  if (g.vertex_count() == 0) return Rational(0);
  Rational direct = simplex_max(lp_from_cliques(g, k)).value;
  Rational scaled = Rational(k) * simplex_max(lp_from_cliques(g, 1)).value;
  if (direct != scaled)
    throw InternalError("k-scaled clique LP disagrees with direct solve");
  return direct;
}

namespace {

// Exact k-coloring by backtracking with the usual new-color symmetry break.
bool try_coloring(const Graph& g, int k, std::vector<int>& color) {
  int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  color.assign(n, -1);

  auto rec = [&](auto&& self, int i, int used) -> bool {
    if (i == n) return true;
    int v = order[i];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (g.adjacent(v, order[j]) && color[order[j]] == c) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

std::vector<VertexSet> clique_partition(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw SizeLimitError("clique partition guarded at 20 vertices");
  if (n == 0) return {};
  Graph c = complement(g);
  int lower = independence_number(g);  // = clique number of the complement
  std::vector<int> color;
  int k = lower;
  while (!try_coloring(c, k, color)) ++k;
  std::vector<VertexSet> blocks(k, VertexSet(n));
  for (int v = 0; v < n; ++v) blocks[color[v]].insert(v);
  std::sort(blocks.begin(), blocks.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.members() < b.members();
            });
  return blocks;
}

}  // namespace relpack
