#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "ksforge/vector.hpp"

namespace ksf {

using Edge = std::vector<int>;

/// D-uniform hypergraph: vertices are ray ids, hyperedges are contexts.
///
/// Vertices and edges are kept sorted (each edge internally, the edge list
/// lexicographically), so two hypergraphs with the same contexts compare
/// equal regardless of how they were assembled.
struct ContextHypergraph {
  int dimension = 0;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  /// Optional exact vectors behind the vertices (absent for abstract fixtures).
  std::map<int, CycloVector> vectors;
  std::map<int, std::string> labels;
  nlohmann::json meta = nlohmann::json::object();

  /// Sorts and validates: edge size D, distinct members, known vertices, no
  /// duplicate edges, and pairwise orthogonality when vectors are attached.
  /// Throws InvalidInput.
  static ContextHypergraph make(int dimension, std::vector<int> vertices, std::vector<Edge> edges);

  void normalize();
  void validate() const;

  bool vector_backed() const { return !vectors.empty(); }
  /// Vertices lying in no edge.
  std::vector<int> isolated() const;
  /// Vertex id -> incident edge indices.
  std::map<int, std::vector<int>> incidence() const;
  std::string label_of(int v) const;

  friend bool operator==(const ContextHypergraph& a, const ContextHypergraph& b) {
    return a.dimension == b.dimension && a.vertices == b.vertices && a.edges == b.edges;
  }
};

}  // namespace ksf
