#include "ksforge/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "ksforge/errors.hpp"

namespace ksf {

ContextHypergraph ContextHypergraph::make(int dimension, std::vector<int> vertices,
                                          std::vector<Edge> edges) {
  ContextHypergraph h;
  h.dimension = dimension;
  h.vertices = std::move(vertices);
  h.edges = std::move(edges);
  h.normalize();
  h.validate();
  return h;
}

void ContextHypergraph::normalize() {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
}

void ContextHypergraph::validate() const {
  if (dimension < 1) throw InvalidInput("hypergraph dimension must be positive");
  const std::set<int> known(vertices.begin(), vertices.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (static_cast<int>(e.size()) != dimension) {
      throw InvalidInput("edge " + std::to_string(k) + " has " + std::to_string(e.size()) +
                         " vertices, expected " + std::to_string(dimension));
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!known.count(e[i])) throw InvalidInput("edge references unknown vertex " + std::to_string(e[i]));
      if (i > 0 && e[i] == e[i - 1]) throw InvalidInput("edge repeats vertex " + std::to_string(e[i]));
    }
    if (k > 0 && edges[k] == edges[k - 1]) throw InvalidInput("duplicate edge");
  }
  if (vectors.empty()) return;
  for (int v : vertices) {
    auto it = vectors.find(v);
    if (it == vectors.end()) throw InvalidInput("vertex " + std::to_string(v) + " lacks a vector");
    if (static_cast<int>(it->second.dim()) != dimension) {
      throw InvalidInput("vector of vertex " + std::to_string(v) + " has the wrong dimension");
    }
  }
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (!orthogonal(vectors.at(e[i]), vectors.at(e[j]))) {
          throw InvalidInput("context members " + std::to_string(e[i]) + " and " +
                             std::to_string(e[j]) + " are not orthogonal");
        }
      }
    }
  }
}

std::vector<int> ContextHypergraph::isolated() const {
  std::set<int> used;
  for (const auto& e : edges) used.insert(e.begin(), e.end());
  std::vector<int> out;
  for (int v : vertices) {
    if (!used.count(v)) out.push_back(v);
  }
  return out;
}

std::map<int, std::vector<int>> ContextHypergraph::incidence() const {
  std::map<int, std::vector<int>> inc;
  for (int v : vertices) inc[v];
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (int v : edges[k]) inc[v].push_back(static_cast<int>(k));
  }
  return inc;
}

std::string ContextHypergraph::label_of(int v) const {
  auto it = labels.find(v);
  return it == labels.end() ? std::to_string(v) : it->second;
}

}  // namespace ksf
