#include "relpack/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace relpack {

namespace {

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices)
    throw SizeLimitError("graph exceeds " + std::to_string(kMaxVertices) +
                         " vertices");
  n_ = n;
  words_ = words_for(n);
  bits_.assign(size_t(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  mutable_row(u)[v >> 6] |= uint64_t(1) << (v & 63);
  mutable_row(v)[u >> 6] |= uint64_t(1) << (u & 63);
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && (int)labels.size() != n_)
    throw std::invalid_argument("label count must match vertex count");
  labels_ = std::move(labels);
}

VertexSet::VertexSet(int universe) {
  if (universe < 0) throw std::invalid_argument("negative universe");
  universe_ = universe;
  words_.assign(words_for(universe), 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

int VertexSet::size() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 0; v < universe_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
  size_t k = std::min(words_.size(), o.words_.size());
  for (size_t i = 0; i < k; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  c.set_labels(g.labels());
  return c;
}

Graph strong_product(const Graph& g, const Graph& h) {
  long long product = (long long)g.vertex_count() * h.vertex_count();
  if (product > Graph::kMaxVertices)
    throw SizeLimitError("strong product would have " +
                         std::to_string(product) + " vertices");
  int ng = g.vertex_count(), nh = h.vertex_count();
  Graph p(static_cast<int>(product));
  auto id = [nh](int u, int v) { return u * nh + v; };
  for (int u1 = 0; u1 < ng; ++u1)
    for (int v1 = 0; v1 < nh; ++v1)
      for (int u2 = u1; u2 < ng; ++u2) {
        int v2_start = (u2 == u1) ? v1 + 1 : 0;
        for (int v2 = v2_start; v2 < nh; ++v2) {
          bool gu = (u1 == u2) || g.adjacent(u1, u2);
          bool hv = (v1 == v2) || h.adjacent(v1, v2);
          if (gu && hv) p.add_edge(id(u1, v1), id(u2, v2));
        }
      }
  return p;
}

Graph strong_power(const Graph& g, int n) {
  if (n < 1) throw PreconditionError("strong power exponent must be >= 1");
  Graph p = g;
  for (int i = 1; i < n; ++i) p = strong_product(p, g);
  return p;
}

Graph blowup(const Graph& g, const std::vector<int>& multiplicities) {
  int n = g.vertex_count();
  if ((int)multiplicities.size() != n)
    throw std::invalid_argument("multiplicity vector length mismatch");
  long long total = 0;
  for (int m : multiplicities) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    total += m;
  }
  if (total > Graph::kMaxVertices)
    throw SizeLimitError("blowup would have " + std::to_string(total) +
                         " vertices");
  std::vector<int> first(n, 0);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    first[v] = next;
    next += multiplicities[v];
  }
  Graph b(static_cast<int>(total));
  std::vector<std::string> labels(total);
  for (int v = 0; v < n; ++v) {
    std::string src = g.has_labels() ? g.labels()[v] : std::to_string(v);
    for (int i = 0; i < multiplicities[v]; ++i) {
      labels[first[v] + i] = src;
      for (int j = i + 1; j < multiplicities[v]; ++j)
        b.add_edge(first[v] + i, first[v] + j);
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (int i = 0; i < multiplicities[u]; ++i)
        for (int j = 0; j < multiplicities[v]; ++j)
          b.add_edge(first[u] + i, first[v] + j);
    }
  b.set_labels(std::move(labels));
  return b;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

namespace {

// Word-level helpers over fixed-width masks.
using Mask = std::vector<uint64_t>;

Mask full_mask(int n) {
  Mask m(words_for(n), 0);
  for (int v = 0; v < n; ++v) m[v >> 6] |= uint64_t(1) << (v & 63);
  return m;
}

bool mask_get(const Mask& m, int v) { return (m[v >> 6] >> (v & 63)) & 1; }
void mask_set(Mask& m, int v) { m[v >> 6] |= uint64_t(1) << (v & 63); }
void mask_clear(Mask& m, int v) { m[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

bool mask_empty(const Mask& m) {
  for (uint64_t w : m)
    if (w) return false;
  return true;
}

int mask_count(const Mask& m) {
  int c = 0;
  for (uint64_t w : m) c += std::popcount(w);
  return c;
}

struct CliqueCollector {
  const Graph& g;
  int words;
  std::vector<VertexSet> out;

  void run() {
    int n = g.vertex_count();
    Mask r(words, 0), p = full_mask(n), x(words, 0);
    bron_kerbosch(r, p, x);
  }

  void bron_kerbosch(Mask& r, Mask& p, Mask& x) {
    if (mask_empty(p) && mask_empty(x)) {
      VertexSet clique(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v)
        if (mask_get(r, v)) clique.insert(v);
      out.push_back(std::move(clique));
      return;
    }
    int pivot = -1, best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!mask_get(p, v) && !mask_get(x, v)) continue;
      int cnt = 0;
      for (int w = 0; w < words; ++w)
        cnt += std::popcount(p[w] & g.row(v)[w]);
      if (cnt > best) {
        best = cnt;
        pivot = v;
      }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!mask_get(p, v)) continue;
      if (pivot >= 0 && g.adjacent(pivot, v) && pivot != v) continue;
      Mask r2 = r, p2(words), x2(words);
      mask_set(r2, v);
      for (int w = 0; w < words; ++w) {
        p2[w] = p[w] & g.row(v)[w];
        x2[w] = x[w] & g.row(v)[w];
      }
      bron_kerbosch(r2, p2, x2);
      mask_clear(p, v);
      mask_set(x, v);
    }
  }
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  CliqueCollector c{g, words_for(g.vertex_count())};
  if (g.vertex_count() > 0) c.run();
  std::sort(c.out.begin(), c.out.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.members() < b.members();
            });
  return c.out;
}

namespace {

// Backtracking search for an automorphism with map[0] = target.
bool automorphism_to(const Graph& g, int target) {
  int n = g.vertex_count();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> degs(n);
  for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
  map[0] = target;
  used[target] = 1;
  if (degs[0] != degs[target]) return false;

  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || degs[cand] != degs[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (g.adjacent(i, j) != g.adjacent(cand, map[j])) ok = false;
      if (!ok) continue;
      map[i] = cand;
      used[cand] = 1;
      if (self(self, i + 1)) return true;
      used[cand] = 0;
      map[i] = -1;
    }
    return false;
  };
  return rec(rec, 1);
}

}  // namespace

bool is_vertex_transitive(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  int d0 = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != d0) return false;
  for (int v = 1; v < n; ++v)
    if (!automorphism_to(g, v)) return false;
  return true;
}

namespace {

// DFS over induced paths rooted at their minimum vertex; reports an induced
// odd cycle of length >= 5 if one exists.
bool has_odd_hole(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> pathv;
  std::vector<char> in_path(n, 0);

  auto rec = [&](auto&& self, int s) -> bool {
    int u = pathv.back();
    int t = (int)pathv.size();
    for (int w = s + 1; w < n; ++w) {
      if (in_path[w] || !g.adjacent(u, w)) continue;
      bool chord = false;
      for (int i = 1; i + 1 < t && !chord; ++i)
        if (g.adjacent(w, pathv[i])) chord = true;
      if (chord) continue;
      // Root adjacency is the path edge itself while t == 1; from t >= 2 it
      // means w closes a cycle of length t + 1 and cannot extend chordlessly.
      if (t >= 2 && g.adjacent(w, pathv[0])) {
        int len = t + 1;
        if (len >= 5 && len % 2 == 1) return true;
        continue;
      }
      pathv.push_back(w);
      in_path[w] = 1;
      bool found = self(self, s);
      pathv.pop_back();
      in_path[w] = 0;
      if (found) return true;
    }
    return false;
  };

  for (int s = 0; s + 4 < n; ++s) {
    pathv.assign(1, s);
    std::fill(in_path.begin(), in_path.end(), 0);
    in_path[s] = 1;
    if (rec(rec, s)) return true;
  }
  return false;
}

}  // namespace

bool is_perfect(const Graph& g) {
  if (g.vertex_count() > 64)
    throw SizeLimitError("perfectness check guarded at 64 vertices");
  return !has_odd_hole(g) && !has_odd_hole(complement(g));
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

bool is_cycle_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (g.adjacent(m[i], m[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

bool are_disconnected(const VertexSet& s, const VertexSet& t, const Graph& g) {
  if (s.intersects(t)) return false;
  for (int u : s.members())
    for (int v : t.members())
      if (g.adjacent(u, v)) return false;
  return true;
}

VertexSet projection(const VertexSet& set, int left_count, int right_count,
                     Side side, int v) {
  if (set.universe() != left_count * right_count)
    throw std::out_of_range("set universe does not match product shape");
  if (side == Side::left) {
    if (v < 0 || v >= left_count) throw std::out_of_range("left vertex index");
    VertexSet out(right_count);
    for (int w = 0; w < right_count; ++w)
      if (set.contains(v * right_count + w)) out.insert(w);
    return out;
  }
  if (v < 0 || v >= right_count) throw std::out_of_range("right vertex index");
  VertexSet out(left_count);
  for (int u = 0; u < left_count; ++u)
    if (set.contains(u * right_count + v)) out.insert(u);
  return out;
}

namespace {

// Iterated neighbor-color refinement. Returns one color id per vertex; the
// ids are ordered by a structural key, so they are isomorphism-invariant.
std::vector<int> stable_coloring(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, 0);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  {
    // normalize initial degrees to dense ordinals
    std::map<int, int> order;
    for (int v = 0; v < n; ++v) order[color[v]] = 0;
    int next = 0;
    for (auto& [k, id] : order) id = next++;
    for (int v = 0; v < n; ++v) color[v] = order[color[v]];
  }
  int classes = 0;
  for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> order;
    std::vector<std::pair<int, std::vector<int>>> key(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> neigh;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w)) neigh.push_back(color[w]);
      std::sort(neigh.begin(), neigh.end());
      key[v] = {color[v], std::move(neigh)};
      order[key[v]] = 0;
    }
    int next = 0;
    for (auto& [k, id] : order) id = next++;
    if (next == classes) {
      // still relabel so ids follow the canonical key order
      for (int v = 0; v < n; ++v) color[v] = order[key[v]];
      return color;
    }
    classes = next;
    for (int v = 0; v < n; ++v) color[v] = order[key[v]];
  }
}

// Backtracking minimization of the upper-triangle bit stream (in graph6
// column order) over all colour-respecting labelings. Twin vertices are
// interchangeable by a transposition automorphism, so at each node only the
// first member of every twin class is branched on; without this, graphs
// with large symmetric blocks (cliques, blowups) degrade to n! search.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> pos_color;  // required color per position
  std::vector<std::vector<int>> by_color;
  std::vector<std::vector<char>> twin;
  std::vector<int> perm;
  std::vector<char> used;
  std::vector<uint8_t> cur_bits, best_bits;
  std::vector<int> best_perm;
  bool have_best = false;
  uint64_t best_gen = 0;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    auto color = stable_coloring(g);
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    by_color.assign(classes, {});
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    pos_color.reserve(n);
    for (int c = 0; c < classes; ++c)
      for (size_t i = 0; i < by_color[c].size(); ++i) pos_color.push_back(c);
    used.assign(n, 0);
    cur_bits.reserve(n * (n - 1) / 2);
    twin.assign(n, std::vector<char>(n, 0));
    int words = g.words();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool same = true;
        for (int w = 0; w < words && same; ++w) {
          uint64_t diff = g.row(u)[w] ^ g.row(v)[w];
          if ((u >> 6) == w) diff &= ~(uint64_t(1) << (u & 63));
          if ((v >> 6) == w) diff &= ~(uint64_t(1) << (v & 63));
          if (diff) same = false;
        }
        twin[u][v] = twin[v][u] = same;
      }
  }

  void run() {
    if (n == 0) {
      have_best = true;
      return;
    }
    rec(0, true);
  }

  // tight means the bits placed so far equal the best prefix exactly; a
  // strictly smaller branch explores freely until its first leaf replaces
  // best, after which every ancestor prefix equals the new best again (the
  // generation counter restores tight on the way out).
  void rec(int i, bool tight) {
    if (i == n) {
      if (!have_best || !tight) {
        best_bits = cur_bits;
        best_perm = perm;
        have_best = true;
        ++best_gen;
      }
      return;
    }
    size_t offset = size_t(i) * (i - 1) / 2;
    int tried[64];
    int tried_count = 0;
    for (int v : by_color[pos_color[i]]) {
      if (used[v]) continue;
      bool redundant = false;
      for (int t = 0; t < tried_count && !redundant; ++t)
        if (twin[tried[t]][v]) redundant = true;
      if (redundant) continue;
      if (tried_count < 64) tried[tried_count++] = v;
      bool child_tight = tight && have_best;
      bool prune = false;
      cur_bits.resize(offset);
      for (int j = 0; j < i; ++j) {
        uint8_t bit = g.adjacent(v, perm[j]) ? 1 : 0;
        if (child_tight) {
          uint8_t ref = best_bits[offset + j];
          if (bit > ref) {
            prune = true;
            break;
          }
          if (bit < ref) child_tight = false;
        }
        cur_bits.push_back(bit);
      }
      if (prune) continue;
      uint64_t gen = best_gen;
      perm.push_back(v);
      used[v] = 1;
      rec(i + 1, child_tight);
      used[v] = 0;
      perm.pop_back();
      if (best_gen != gen) tight = true;
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  CanonSearch s(g);
  s.run();
  return s.best_perm;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if ((int)perm.size() != n) throw std::invalid_argument("bad permutation");
  Graph out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(perm[i], perm[j])) out.add_edge(i, j);
  if (g.has_labels()) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = g.labels()[perm[i]];
    out.set_labels(std::move(labels));
  }
  return out;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> find_spanning_embedding(const Graph& sub,
                                                        const Graph& host) {
  int n = sub.vertex_count();
  if (host.vertex_count() != n) return std::nullopt;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sub.degree(a) > sub.degree(b);
  });
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    int u = order[idx];
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || host.degree(cand) < sub.degree(u)) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int w = order[j];
        if (sub.adjacent(u, w) && !host.adjacent(cand, map[w])) ok = false;
      }
      if (!ok) continue;
      map[u] = cand;
      used[cand] = 1;
      if (self(self, idx + 1)) return true;
      used[cand] = 0;
      map[u] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

}  // namespace relpack
