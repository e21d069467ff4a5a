#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ksforge/hypergraph.hpp"

namespace ksf {

/// Canonical form of a hypergraph, computed on its vertex/edge incidence graph
/// by colour refinement plus individualization search. Two hypergraphs are
/// isomorphic iff their forms compare equal.
struct CanonicalForm {
  int dimension = 0;
  int vertex_count = 0;
  int edge_count = 0;
  /// Sorted (vertex label, edge label) incidence pairs under the canonical labeling.
  std::vector<std::pair<int, int>> certificate;
  /// Vertex id -> canonical vertex label in [0, vertex_count).
  std::map<int, int> vertex_label;
  /// Search statistics.
  long leaves = 0;
  int automorphisms = 0;

  bool same_structure(const CanonicalForm& other) const {
    return dimension == other.dimension && vertex_count == other.vertex_count &&
           edge_count == other.edge_count && certificate == other.certificate;
  }
};

CanonicalForm canonical_form(const ContextHypergraph& h);

bool iso_check(const ContextHypergraph& a, const ContextHypergraph& b);

/// Vertex bijection a -> b mapping edges onto edges, if one exists.
std::optional<std::map<int, int>> find_isomorphism(const ContextHypergraph& a, const ContextHypergraph& b);

/// True iff `map` is a bijection from a's vertices to b's carrying edges onto edges.
bool is_isomorphism(const ContextHypergraph& a, const ContextHypergraph& b, const std::map<int, int>& map);

}  // namespace ksf
