#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relpack/graph.hpp"

namespace relpack {

// One of the three graph operations: delete a vertex (indices above it
// shift down), add a missing edge, or substitute a clique for a vertex
// (the original index keeps the first copy, extra copies are appended).
struct ExpandOperation {
  enum class Kind { remove_vertex, add_edge, clique_substitute };
  Kind kind = Kind::remove_vertex;
  int u = -1;
  int v = -1;
  int size = 0;

  static ExpandOperation remove(int v) {
    return {Kind::remove_vertex, v, -1, 0};
  }
  static ExpandOperation add(int u, int v) {
    return {Kind::add_edge, u, v, 0};
  }
  static ExpandOperation substitute(int v, int size) {
    return {Kind::clique_substitute, v, -1, size};
  }
  std::string str() const;
};

Graph apply_operation(const Graph& g, const ExpandOperation& op);

// Contraction of u and v as the two-step replay: remove v, then connect u
// to v's former neighbors.
Graph merge_vertices(const Graph& g, int u, int v);

struct ExpandCertificate {
  enum class Kind { sequence, labelmap };
  Kind kind = Kind::sequence;
  std::vector<ExpandOperation> sequence;  // replays from H
  std::vector<int> phi;                   // vertex of G -> vertex of H
};

// Ground-truth bounded search: breadth-first over vertex removals and
// clique substitutions with all intermediate orders capped at size_bound,
// states deduplicated by canonical form, edge additions appended last.
// (Additions commute past the other two operations without raising any
// intermediate order, so exploring them last loses no reachable graph.)
// Returns a replayable sequence reaching an isomorph of G, or nullopt.
std::optional<ExpandCertificate> expand_sequence_search(const Graph& g,
                                                        const Graph& h,
                                                        int size_bound);

// Membership decision via the label-map normal form: phi with (a) equal
// images only on adjacent vertices of G, (b) edges of H pulling back to
// edges of G; equivalently a homomorphism from G^c to H^c. Validated
// against expand_sequence_search by the test suites.
std::optional<ExpandCertificate> is_in_expand(const Graph& g, const Graph& h);

// Replays sequence certificates (result must be isomorphic to G) and
// checks label-map conditions literally.
bool verify_certificate(const Graph& g, const Graph& h,
                        const ExpandCertificate& cert);

struct ProjectionCertificate {
  std::optional<ExpandCertificate> certificate;
  std::string note;
};

// Constructive certificate extraction from a maximum independent set of
// G^c x H: blow up each H-vertex by its projection, merge equal labels,
// complete the missing edges. Falls back to the alternating-set route when
// some projection is empty; G must be a cycle with alpha*(G|H) <= 1 or
// perfect with alpha(G) <= alpha(H).
ProjectionCertificate certificate_via_projections(const Graph& g,
                                                  const Graph& h);

struct MonotonicityReport {
  int checked = 0;
  int violations = 0;
};

// For every connected W up to max_w_vertices, asserts that applying op to
// h does not increase alpha(. x W).
MonotonicityReport monotonicity_check(const Graph& h, const ExpandOperation& op,
                                      int max_w_vertices);

struct ConjectureScan {
  int max_vertices = 0;
  int pairs_total = 0;
  std::map<std::string, int> pairs_by_method;
  int skipped_inexact = 0;
  // Disagreements of (value <= 1) with membership, split by severity.
  std::vector<std::string> critical;    // cycle or perfect G: contradiction
  std::vector<std::string> candidates;  // other vertex-transitive G
  int triv_violations = 0;              // member but value > 1
};

// Scans all ordered pairs of connected graphs up to max_vertices where an
// exact route applies.
ConjectureScan conjecture_scan(int max_vertices, int jobs = 1);

}  // namespace relpack
