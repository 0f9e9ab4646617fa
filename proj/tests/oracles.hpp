#pragma once

// Independent brute-force oracles used to pin expected values. Everything
// here recomputes from first principles and stays off the library's own
// solver paths.

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "relpack/expand.hpp"
#include "relpack/graph.hpp"
#include "relpack/lp.hpp"
#include "relpack/rational.hpp"

namespace oracle {

inline bool independent(const relpack::Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) return false;
  return true;
}

// Full subset enumeration; fine up to ~20 vertices.
inline int naive_alpha(const relpack::Graph& g) {
  int n = g.vertex_count();
  std::vector<uint32_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= uint32_t(1) << v;
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((mask >> v) & 1)
        if (adj[v] & mask) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Every clique of g, as sorted vertex lists (includes the empty set's
// complementary singletons naturally: all nonempty cliques).
inline std::vector<std::vector<int>> all_cliques(const relpack::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) verts.push_back(v);
    bool clique = true;
    for (size_t i = 0; i < verts.size() && clique; ++i)
      for (size_t j = i + 1; j < verts.size() && clique; ++j)
        if (!g.adjacent(verts[i], verts[j])) clique = false;
    if (clique) out.push_back(std::move(verts));
  }
  return out;
}

inline std::vector<std::vector<int>> naive_maximal_cliques(
    const relpack::Graph& g) {
  auto cliques = all_cliques(g);
  std::vector<std::vector<int>> out;
  for (const auto& c : cliques) {
    bool maximal = true;
    for (const auto& d : cliques)
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end()))
        maximal = false;
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Multiplicity-vector enumeration for the k-fold number; tiny inputs only.
// clique_family: false = maximal cliques only, true = every clique.
inline int naive_alpha_k(const relpack::Graph& g, int k, bool every_clique) {
  auto cliques = every_clique ? all_cliques(g) : naive_maximal_cliques(g);
  int n = g.vertex_count();
  std::vector<int> mult(n, 0);
  int best = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (const auto& c : cliques) {
        int total = 0;
        for (int u : c) total += mult[u];
        if (total > k) return;
      }
      best = std::max(best, std::accumulate(mult.begin(), mult.end(), 0));
      return;
    }
    for (int m = 0; m <= k; ++m) {
      mult[v] = m;
      self(self, v + 1);
    }
    mult[v] = 0;
  };
  rec(rec, 0);
  return best;
}

inline bool naive_isomorphic(const relpack::Graph& a, const relpack::Graph& b) {
  int n = a.vertex_count();
  if (b.vertex_count() != n) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0;
}

// Exhaustive-permutation canonical key, for deduplicating tiny graphs.
inline std::string perm_canonical_key(const relpack::Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key(size_t(n) * n, '0');
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && g.adjacent(perm[u], perm[v])) key[u * n + v] = '1';
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

// Literal three-operation breadth-first reachability within a vertex cap.
inline bool naive_expand_reachable(const relpack::Graph& target,
                                   const relpack::Graph& start, int cap) {
  using relpack::ExpandOperation;
  if (start.vertex_count() > cap) return false;
  std::vector<relpack::Graph> frontier{start};
  std::vector<std::string> seen{perm_canonical_key(start)};
  std::string want = perm_canonical_key(target);
  if (seen[0] == want) return true;
  for (size_t at = 0; at < frontier.size(); ++at) {
    relpack::Graph cur = frontier[at];
    int n = cur.vertex_count();
    std::vector<relpack::Graph> children;
    for (int v = 0; v < n; ++v)
      children.push_back(apply_operation(cur, ExpandOperation::remove(v)));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!cur.adjacent(u, v))
          children.push_back(apply_operation(cur, ExpandOperation::add(u, v)));
    for (int v = 0; v < n; ++v)
      for (int k = 2; n - 1 + k <= cap; ++k)
        children.push_back(
            apply_operation(cur, ExpandOperation::substitute(v, k)));
    for (relpack::Graph& child : children) {
      std::string key = perm_canonical_key(child);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      if (key == want) return true;
      seen.push_back(key);
      frontier.push_back(std::move(child));
    }
  }
  return false;
}

// graph6 encoder written directly from the format definition.
inline std::string encode_graph6(const relpack::Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(char(63 + n));  // n <= 62 in tests
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int j = 0; j < 6; ++j) value = (value << 1) | bits[i + j];
    out.push_back(char(63 + value));
  }
  return out;
}

// sparse6 encoder per the format definition, 1-padded.
inline std::string encode_sparse6(const relpack::Graph& g) {
  int n = g.vertex_count();
  std::string out = ":";
  out.push_back(char(63 + n));
  int k = 1;
  while ((1 << k) < n) ++k;
  std::vector<int> bits;
  auto push_bits = [&](long value, int width) {
    for (int j = width - 1; j >= 0; --j) bits.push_back((value >> j) & 1);
  };
  int cur = 0;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (!g.adjacent(u, v)) continue;
      if (v == cur) {
        bits.push_back(0);
        push_bits(u, k);
      } else if (v == cur + 1) {
        cur = v;
        bits.push_back(1);
        push_bits(u, k);
      } else {
        cur = v;
        bits.push_back(1);
        push_bits(v, k);
        bits.push_back(0);
        push_bits(u, k);
      }
    }
  while (bits.size() % 6 != 0) bits.push_back(1);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int j = 0; j < 6; ++j) value = (value << 1) | bits[i + j];
    out.push_back(char(63 + value));
  }
  return out;
}

// Optimum of a small LP by enumerating basis vertices of the polytope
// {x >= 0, Ax <= b} with exact Gaussian elimination.
inline std::optional<relpack::Rational> lp_optimum_by_vertex_enumeration(
    const relpack::LinearProgram& lp) {
  using relpack::Rational;
  int n = lp.num_vars;
  int m = int(lp.rhs.size());
  int total = n + m;  // nonnegativity rows then constraint rows
  std::vector<int> choice(n);
  std::optional<Rational> best;

  auto row_of = [&](int idx, std::vector<Rational>& coeffs, Rational& rhs) {
    coeffs.assign(n, Rational(0));
    if (idx < n) {
      coeffs[idx] = Rational(1);
      rhs = Rational(0);
    } else {
      coeffs = lp.constraints[idx - n];
      rhs = lp.rhs[idx - n];
    }
  };

  auto consider = [&](const std::vector<int>& rows) {
    // Solve the n x n system of tight rows.
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
      Rational rhs;
      std::vector<Rational> coeffs;
      row_of(rows[i], coeffs, rhs);
      for (int j = 0; j < n; ++j) mat[i][j] = coeffs[j];
      mat[i][n] = rhs;
    }
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (!(mat[r][col] == Rational(0))) {
          pivot = r;
          break;
        }
      if (pivot < 0) return;  // singular
      std::swap(mat[col], mat[pivot]);
      Rational p = mat[col][col];
      for (int j = col; j <= n; ++j) mat[col][j] /= p;
      for (int r = 0; r < n; ++r) {
        if (r == col || mat[r][col] == Rational(0)) continue;
        Rational f = mat[r][col];
        for (int j = col; j <= n; ++j) mat[r][j] -= f * mat[col][j];
      }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = mat[i][n];
    for (int i = 0; i < n; ++i)
      if (x[i] < Rational(0)) return;
    for (int c = 0; c < m; ++c) {
      Rational lhs(0);
      for (int j = 0; j < n; ++j) lhs += lp.constraints[c][j] * x[j];
      if (lhs > lp.rhs[c]) return;
    }
    Rational value(0);
    for (int j = 0; j < n; ++j) value += lp.objective[j] * x[j];
    if (!best || value > *best) best = value;
  };

  auto rec = [&](auto&& self, int idx, int from) -> void {
    if (idx == n) {
      consider(choice);
      return;
    }
    for (int r = from; r < total; ++r) {
      choice[idx] = r;
      self(self, idx + 1, r + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace oracle
