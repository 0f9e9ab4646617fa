#include "relpack/expand.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "relpack/enumerate.hpp"
#include "relpack/formats.hpp"
#include "relpack/invariants.hpp"
#include "relpack/parallel.hpp"
#include "relpack/relative.hpp"

namespace relpack {

std::string ExpandOperation::str() const {
  switch (kind) {
    case Kind::remove_vertex:
      return "remove(" + std::to_string(u) + ")";
    case Kind::add_edge:
      return "add_edge(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Kind::clique_substitute:
      return "substitute(" + std::to_string(u) + ",k=" + std::to_string(size) +
             ")";
  }
  return "?";
}

Graph apply_operation(const Graph& g, const ExpandOperation& op) {
  int n = g.vertex_count();
  auto check = [&](int v) {
    if (v < 0 || v >= n) throw std::out_of_range("operation index out of range");
  };
  switch (op.kind) {
    case ExpandOperation::Kind::remove_vertex: {
      check(op.u);
      Graph out(n - 1);
      auto shift = [&](int w) { return w > op.u ? w - 1 : w; };
      for (int a = 0; a < n; ++a) {
        if (a == op.u) continue;
        for (int b = a + 1; b < n; ++b) {
          if (b == op.u) continue;
          if (g.adjacent(a, b)) out.add_edge(shift(a), shift(b));
        }
      }
      return out;
    }
    case ExpandOperation::Kind::add_edge: {
      check(op.u);
      check(op.v);
      if (op.u == op.v) throw std::invalid_argument("cannot add a loop");
      if (g.adjacent(op.u, op.v))
        throw std::invalid_argument("edge already present");
      Graph out = g;
      out.add_edge(op.u, op.v);
      return out;
    }
    case ExpandOperation::Kind::clique_substitute: {
      check(op.u);
      if (op.size < 1) throw std::invalid_argument("clique size must be >= 1");
      long long total = n + op.size - 1;
      if (total > Graph::kMaxVertices)
        throw SizeLimitError("substitution exceeds the vertex cap");
      // op.u keeps the first copy; the other size-1 copies are appended.
      Graph out(static_cast<int>(total));
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (g.adjacent(a, b)) out.add_edge(a, b);
      for (int c = 0; c < op.size - 1; ++c) {
        int copy = n + c;
        out.add_edge(op.u, copy);
        for (int d = 0; d < c; ++d) out.add_edge(n + d, copy);
        for (int w = 0; w < n; ++w)
          if (w != op.u && g.adjacent(op.u, w)) out.add_edge(copy, w);
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown operation");
}

Graph merge_vertices(const Graph& g, int u, int v) {
  int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::out_of_range("merge index out of range");
  if (u == v) throw PreconditionError("merge needs two distinct vertices");
  std::vector<int> former;
  for (int w = 0; w < n; ++w)
    if (w != u && g.adjacent(v, w)) former.push_back(w);
  Graph out = apply_operation(g, ExpandOperation::remove(v));
  auto shift = [&](int w) { return w > v ? w - 1 : w; };
  int keep = shift(u);
  for (int w : former) {
    int sw = shift(w);
    if (!out.adjacent(keep, sw))
      out = apply_operation(out, ExpandOperation::add(keep, sw));
  }
  return out;
}

namespace {

// Reachable graphs from a start under removals and substitutions with all
// orders capped; states deduplicated by canonical form, first-reached
// representative kept so stored operations replay verbatim.
struct ReachEngine {
  struct Node {
    Graph graph;
    int parent = -1;
    ExpandOperation op;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> seen;
  int cap = 0;

  ReachEngine(const Graph& start, int size_cap) : cap(size_cap) {
    if (start.vertex_count() > cap) return;
    push(start, -1, ExpandOperation::remove(-1));
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (nodes.size() > 2'000'000)
        throw SizeLimitError("expand search state space too large");
      Graph cur = nodes[i].graph;  // copy: push may reallocate
      int n = cur.vertex_count();
      for (int v = 0; v < n; ++v)
        push(apply_operation(cur, ExpandOperation::remove(v)), int(i),
             ExpandOperation::remove(v));
      for (int v = 0; v < n; ++v)
        for (int k = 2; n - 1 + k <= cap; ++k)
          push(apply_operation(cur, ExpandOperation::substitute(v, k)), int(i),
               ExpandOperation::substitute(v, k));
    }
  }

  void push(Graph g, int parent, ExpandOperation op) {
    std::string key = emit_graph6(canonical_form(g));
    if (seen.count(key)) return;
    seen[key] = int(nodes.size());
    nodes.push_back({std::move(g), parent, op});
  }

  std::optional<std::vector<ExpandOperation>> query(const Graph& target) const {
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Graph& state = nodes[i].graph;
      if (state.vertex_count() != target.vertex_count()) continue;
      auto embed = find_spanning_embedding(state, target);
      if (!embed) continue;
      std::vector<ExpandOperation> ops;
      for (int at = int(i); nodes[at].parent >= 0; at = nodes[at].parent)
        ops.push_back(nodes[at].op);
      std::reverse(ops.begin(), ops.end());
      std::vector<int> inv(target.vertex_count());
      for (int x = 0; x < state.vertex_count(); ++x) inv[(*embed)[x]] = x;
      for (int a = 0; a < target.vertex_count(); ++a)
        for (int b = a + 1; b < target.vertex_count(); ++b)
          if (target.adjacent(a, b) && !state.adjacent(inv[a], inv[b]))
            ops.push_back(ExpandOperation::add(std::min(inv[a], inv[b]),
                                               std::max(inv[a], inv[b])));
      return ops;
    }
    return std::nullopt;
  }
};

std::mutex engine_mutex;
std::map<std::string, std::shared_ptr<const ReachEngine>>& engine_cache() {
  static std::map<std::string, std::shared_ptr<const ReachEngine>> cache;
  return cache;
}

std::shared_ptr<const ReachEngine> get_engine(const Graph& h, int cap) {
  std::string key = emit_graph6(h) + "#" + std::to_string(cap);
  {
    std::lock_guard<std::mutex> lock(engine_mutex);
    auto& cache = engine_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto engine = std::make_shared<const ReachEngine>(h, cap);
  std::lock_guard<std::mutex> lock(engine_mutex);
  auto& cache = engine_cache();
  if (cache.size() > 64) cache.clear();
  cache[key] = engine;
  return engine;
}

}  // namespace

std::optional<ExpandCertificate> expand_sequence_search(const Graph& g,
                                                        const Graph& h,
                                                        int size_bound) {
  if (size_bound < g.vertex_count())
    throw PreconditionError("size bound must be at least |V(G)|");
  if (h.vertex_count() > size_bound) return std::nullopt;
  auto engine = get_engine(h, size_bound);
  auto ops = engine->query(g);
  if (!ops) return std::nullopt;
  ExpandCertificate cert;
  cert.kind = ExpandCertificate::Kind::sequence;
  cert.sequence = std::move(*ops);
  return cert;
}

std::optional<ExpandCertificate> is_in_expand(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng == 0) {
    ExpandCertificate cert;
    cert.kind = ExpandCertificate::Kind::labelmap;
    return cert;
  }
  if (nh == 0) return std::nullopt;
  Graph gc = complement(g), hc = complement(h);
  std::vector<int> order(ng);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gc.degree(a) > gc.degree(b); });
  std::vector<int> phi(ng, -1);

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == ng) return true;
    int u = order[idx];
    for (int cand = 0; cand < nh; ++cand) {
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int w = order[j];
        if (gc.adjacent(u, w) && !hc.adjacent(cand, phi[w])) ok = false;
      }
      if (!ok) continue;
      phi[u] = cand;
      if (self(self, idx + 1)) return true;
      phi[u] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  ExpandCertificate cert;
  cert.kind = ExpandCertificate::Kind::labelmap;
  cert.phi = phi;
  return cert;
}

bool verify_certificate(const Graph& g, const Graph& h,
                        const ExpandCertificate& cert) {
  if (cert.kind == ExpandCertificate::Kind::sequence) {
    Graph cur = h;
    try {
      for (const ExpandOperation& op : cert.sequence)
        cur = apply_operation(cur, op);
    } catch (const std::exception&) {
      return false;
    }
    return isomorphic(cur, g);
  }
  if ((int)cert.phi.size() != g.vertex_count()) return false;
  for (int img : cert.phi)
    if (img < 0 || img >= h.vertex_count()) return false;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (cert.phi[u] == cert.phi[v] && !g.adjacent(u, v)) return false;
      if (cert.phi[u] != cert.phi[v] && h.adjacent(cert.phi[u], cert.phi[v]) &&
          !g.adjacent(u, v))
        return false;
    }
  return true;
}

namespace {

// Sequence under construction: the working graph plus one target-vertex
// label per current vertex.
struct Builder {
  Graph cur;
  std::vector<int> label;
  std::vector<ExpandOperation> seq;

  void apply(const ExpandOperation& op) {
    seq.push_back(op);
    cur = apply_operation(cur, op);
  }

  void remove(int v) {
    apply(ExpandOperation::remove(v));
    label.erase(label.begin() + v);
  }

  void substitute(int v, int k, const std::vector<int>& copy_labels) {
    // copy_labels[0] stays at v, the rest land on the appended copies.
    apply(ExpandOperation::substitute(v, k));
    label[v] = copy_labels[0];
    for (int i = 1; i < k; ++i) label.push_back(copy_labels[i]);
  }

  void merge(int x, int y) {  // keep x, fold y into it (x < y)
    std::vector<int> former;
    for (int w = 0; w < cur.vertex_count(); ++w)
      if (w != x && cur.adjacent(y, w)) former.push_back(w);
    remove(y);
    auto shift = [&](int w) { return w > y ? w - 1 : w; };
    for (int w : former) {
      int sw = shift(w);
      if (!cur.adjacent(x, sw)) apply(ExpandOperation::add(x, sw));
    }
  }

  // Complete the labelled spanning subgraph to the target adjacency.
  bool finish(const Graph& target) {
    int n = cur.vertex_count();
    if (n != target.vertex_count()) return false;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        bool want = target.adjacent(label[x], label[y]);
        if (cur.adjacent(x, y) && !want) return false;
        if (!cur.adjacent(x, y) && want) apply(ExpandOperation::add(x, y));
      }
    return true;
  }
};

ProjectionCertificate perfect_route(const Graph& g, const Graph& h) {
  int alpha_g = independence_number(g);
  int alpha_h = independence_number(h);
  if (alpha_g > alpha_h)
    return {std::nullopt, "hypothesis fails: alpha(G) > alpha(H)"};
  std::vector<VertexSet> blocks = clique_partition(g);
  if ((int)blocks.size() != alpha_g)
    return {std::nullopt, "clique partition did not reach alpha(G) blocks"};

  std::vector<int> chosen = max_independent_set(h).members();
  chosen.resize(alpha_g);
  std::set<int> keep(chosen.begin(), chosen.end());

  Builder b;
  b.cur = h;
  b.label.assign(h.vertex_count(), -1);
  for (int v = h.vertex_count() - 1; v >= 0; --v)
    if (!keep.count(v)) b.remove(v);
  for (int i = 0; i < alpha_g; ++i) {
    std::vector<int> labels = blocks[i].members();
    if ((int)labels.size() >= 2)
      b.substitute(i, (int)labels.size(), labels);
    else
      b.label[i] = labels[0];
  }
  if (!b.finish(g))
    return {std::nullopt, "construction left an edge outside the target"};
  ExpandCertificate cert;
  cert.kind = ExpandCertificate::Kind::sequence;
  cert.sequence = std::move(b.seq);
  return {cert, "perfect-graph route"};
}

ProjectionCertificate cycle_route(const Graph& g, const Graph& h) {
  int n = g.vertex_count();
  int nh = h.vertex_count();
  Graph prod = strong_product(complement(g), h);
  VertexSet best = max_independent_set(prod);
  if (best.size() < n)
    return {std::nullopt, "hypothesis fails: alpha*(G|H) > 1"};

  std::vector<VertexSet> a_left(n, VertexSet(nh));
  for (int u = 0; u < n; ++u)
    a_left[u] = projection(best, n, nh, Side::left, u);
  std::vector<VertexSet> a_right(nh, VertexSet(n));
  for (int v = 0; v < nh; ++v)
    a_right[v] = projection(best, n, nh, Side::right, v);

  bool all_covered = true;
  for (int u = 0; u < n; ++u)
    if (a_left[u].empty()) all_covered = false;

  if (all_covered) {
    // Every projection is a clique of G, so blow up, merge equal labels,
    // and complete the edges.
    Builder b;
    b.cur = h;
    b.label.assign(nh, -1);
    std::vector<std::vector<int>> labels_of(nh);
    for (int v = 0; v < nh; ++v) labels_of[v] = a_right[v].members();
    for (int v = nh - 1; v >= 0; --v)
      if (labels_of[v].empty()) {
        b.remove(v);
        labels_of.erase(labels_of.begin() + v);
      }
    for (size_t i = 0; i < labels_of.size(); ++i) {
      if (labels_of[i].size() >= 2)
        b.substitute(int(i), int(labels_of[i].size()), labels_of[i]);
      else
        b.label[i] = labels_of[i][0];
    }
    // Merge duplicate labels, smallest pair first.
    while (true) {
      int x = -1, y = -1;
      for (int i = 0; i < b.cur.vertex_count() && x < 0; ++i)
        for (int j = i + 1; j < b.cur.vertex_count(); ++j)
          if (b.label[i] == b.label[j]) {
            x = i;
            y = j;
            break;
          }
      if (x < 0) break;
      b.merge(x, y);
    }
    if (b.cur.vertex_count() != n)
      return {std::nullopt, "label set did not cover all of G"};
    if (!b.finish(g))
      return {std::nullopt, "construction left an edge outside the target"};
    ExpandCertificate cert;
    cert.kind = ExpandCertificate::Kind::sequence;
    cert.sequence = std::move(b.seq);
    return {cert, "cycle route, full projections"};
  }

  // Some projection is empty: alternate-vertex route. Recover the cyclic
  // order of G starting at an uncovered vertex.
  int u1 = 0;
  while (!a_left[u1].empty()) ++u1;
  std::vector<int> order{u1};
  {
    int prev = -1, at = u1;
    while ((int)order.size() < n) {
      int next = -1;
      for (int w = 0; w < n; ++w)
        if (w != prev && g.adjacent(at, w)) {
          next = w;
          break;
        }
      order.push_back(next);
      prev = at;
      at = next;
    }
  }
  auto weight = [&](const std::vector<int>& verts) {
    int total = 0;
    for (int u : verts) total += a_left[u].size();
    return total;
  };
  std::vector<int> s_set, t_set;
  for (int i = 1; i + 1 < n; i += 2) s_set.push_back(order[i]);
  for (int i = 2; i < n; i += 2) t_set.push_back(order[i]);
  int need = (n + 1) / 2;
  std::vector<int> chosen;
  if (weight(s_set) >= need) {
    chosen = s_set;
  } else if (weight(t_set) >= need) {
    chosen = t_set;
    // Relabel the cycle walked in the opposite direction so the chosen set
    // again sits at the odd positions.
    std::reverse(order.begin() + 1, order.end());
  } else {
    return {std::nullopt, "neither alternating set carries enough projection"};
  }
  std::set<int> chosen_set(chosen.begin(), chosen.end());

  std::vector<int> keep;
  for (int v = 0; v < nh; ++v)
    if (a_right[v].members().size() > 0) {
      bool touches = false;
      for (int u : a_right[v].members())
        if (chosen_set.count(u)) touches = true;
      if (touches) keep.push_back(v);
    }
  if ((int)keep.size() < need)
    return {std::nullopt, "kept vertex count fell short of ceil(n/2)"};
  keep.resize(need);
  std::set<int> keep_set(keep.begin(), keep.end());

  Builder b;
  b.cur = h;
  b.label.assign(nh, -1);
  for (int v = nh - 1; v >= 0; --v)
    if (!keep_set.count(v)) b.remove(v);
  for (int i = 0; i < b.cur.vertex_count(); ++i)
    for (int j = i + 1; j < b.cur.vertex_count(); ++j)
      if (b.cur.adjacent(i, j))
        return {std::nullopt, "kept vertices were not independent"};
  int half = n / 2;
  for (int i = 0; i < half; ++i)
    b.substitute(i, 2, {order[2 * i + 1], order[2 * i + 2]});
  b.label[half] = order[0];
  if (!b.finish(g))
    return {std::nullopt, "construction left an edge outside the target"};
  ExpandCertificate cert;
  cert.kind = ExpandCertificate::Kind::sequence;
  cert.sequence = std::move(b.seq);
  return {cert, "cycle route, alternating sets"};
}

}  // namespace

ProjectionCertificate certificate_via_projections(const Graph& g,
                                                  const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    return {std::nullopt, "empty graph"};
  if (g.vertex_count() <= 64 && is_perfect(g)) return perfect_route(g, h);
  if (is_cycle_graph(g)) return cycle_route(g, h);
  return {std::nullopt, "no constructive route: G is neither perfect nor a cycle"};
}

MonotonicityReport monotonicity_check(const Graph& h, const ExpandOperation& op,
                                      int max_w_vertices) {
  Graph transformed = apply_operation(h, op);
  MonotonicityReport report;
  for (int nw = 1; nw <= max_w_vertices; ++nw)
    for (const Graph& w : all_connected_graphs(nw)) {
      int before = independence_number(strong_product(h, w));
      int after = independence_number(strong_product(transformed, w));
      ++report.checked;
      if (after > before) ++report.violations;
    }
  return report;
}

ConjectureScan conjecture_scan(int max_vertices, int jobs) {
  if (max_vertices > 7)
    throw PreconditionError("conjecture scan guarded at 7 vertices");
  ConjectureScan scan;
  scan.max_vertices = max_vertices;

  std::vector<Graph> graphs;
  for (int n = 1; n <= max_vertices; ++n)
    for (const Graph& g : all_connected_graphs(n)) graphs.push_back(g);
  int count = int(graphs.size());

  struct PairResult {
    std::string method;
    bool exact = false;
    bool disagree = false;
    bool critical = false;
    bool triv_violation = false;
    std::string detail;
  };
  std::vector<PairResult> results(size_t(count) * count);

  parallel_for(count * count, jobs, [&](int idx) {
    const Graph& g = graphs[idx / count];
    const Graph& h = graphs[idx % count];
    PairResult& r = results[idx];
    if (!is_cycle_graph(g) && !is_perfect(g) && !is_vertex_transitive(g)) {
      r.method = method_name(RelativeMethod::bounds);
      return;  // no exact route; skip without enumerating witnesses
    }
    RelativeResult rel = relative(g, h);
    r.method = method_name(rel.method);
    if (!rel.value) return;
    r.exact = true;
    bool le1 = *rel.value <= Rational(1);
    bool member = is_in_expand(g, h).has_value();
    if (member && !le1) r.triv_violation = true;
    if (le1 != member) {
      r.disagree = true;
      r.critical = (rel.method == RelativeMethod::cycle_formula_exact ||
                    rel.method == RelativeMethod::perfect_exact);
      r.detail = "G=" + emit_graph6(g) + " H=" + emit_graph6(h) +
                 " value=" + rel.value->str() +
                 " member=" + (member ? "yes" : "no");
    }
  });

  for (const PairResult& r : results) {
    ++scan.pairs_total;
    ++scan.pairs_by_method[r.method];
    if (!r.exact) {
      ++scan.skipped_inexact;
      continue;
    }
    if (r.triv_violation) ++scan.triv_violations;
    if (r.disagree) {
      if (r.critical)
        scan.critical.push_back(r.detail);
      else
        scan.candidates.push_back(r.detail);
    }
  }
  return scan;
}

}  // namespace relpack
