#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "relpack/errors.hpp"

namespace relpack {

// Simple undirected graph stored as one bitset row per vertex (symmetric,
// empty diagonal). Graphs are value types: build with add_edge, then treat
// as immutable; every operation below returns a fresh graph.
class Graph {
 public:
  static constexpr int kMaxVertices = 4096;

  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int words() const { return words_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }
  void add_edge(int u, int v);

  int degree(int v) const;
  int edge_count() const;

  const uint64_t* row(int v) const { return bits_.data() + size_t(v) * words_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Structural equality; labels are display metadata and not compared.
  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }
  uint64_t* mutable_row(int v) { return bits_.data() + size_t(v) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<std::string> labels_;
};

// Subset of the vertices of a specific graph, as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, std::initializer_list<int> members);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void insert(int v) {
    check(v);
    words_[v >> 6] |= uint64_t(1) << (v & 63);
  }
  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
  }
  std::vector<int> members() const;
  bool intersects(const VertexSet& o) const;

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator<(const VertexSet& o) const { return members() < o.members(); }

 private:
  void check(int v) const {
    if (v < 0 || v >= universe_)
      throw std::out_of_range("vertex index out of range for set");
  }
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

enum class Side { left, right };

// Constructions.
Graph complement(const Graph& g);
Graph strong_product(const Graph& g, const Graph& h);  // row-major (g-major)
Graph strong_power(const Graph& g, int n);
Graph blowup(const Graph& g, const std::vector<int>& multiplicities);
Graph cycle(int n);  // n >= 3
Graph complete(int n);
Graph path(int n);
Graph empty_graph(int n);
Graph petersen();

// Structure predicates and queries.
std::vector<VertexSet> maximal_cliques(const Graph& g);  // canonical order
bool is_vertex_transitive(const Graph& g);
bool is_perfect(const Graph& g);  // guard: <= 64 vertices
bool is_connected(const Graph& g);
bool is_cycle_graph(const Graph& g);  // connected and 2-regular
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool are_disconnected(const VertexSet& s, const VertexSet& t, const Graph& g);

// For a vertex set of strong_product(G, H) in row-major order: the partners
// of v on the other side. side names the factor v belongs to.
VertexSet projection(const VertexSet& set, int left_count, int right_count,
                     Side side, int v);

// Canonical form by color-refinement plus backtracking over the upper
// triangle bit stream; exact for any input, intended for small graphs.
std::vector<int> canonical_labeling(const Graph& g);  // new index -> old vertex
Graph canonical_form(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& perm);
bool isomorphic(const Graph& a, const Graph& b);

// Bijection mapping every edge of sub onto an edge of host (host may have
// more edges). Both graphs must have the same vertex count.
std::optional<std::vector<int>> find_spanning_embedding(const Graph& sub,
                                                        const Graph& host);

}  // namespace relpack
