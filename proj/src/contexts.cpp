#include "ksforge/contexts.hpp"

#include <algorithm>
#include <array>

#include "ksforge/errors.hpp"

namespace ksf {

namespace {

// Extends sorted cliques: every member after the first is a later-indexed
// neighbour of all earlier members, so each D-clique is produced exactly once.
void extend(const std::vector<std::vector<char>>& adj, std::vector<int>& clique,
            const std::vector<int>& candidates, int dimension, std::vector<Edge>& out) {
  if (static_cast<int>(clique.size()) == dimension) {
    out.push_back(clique);
    return;
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const int v = candidates[k];
    std::vector<int> next;
    for (std::size_t t = k + 1; t < candidates.size(); ++t) {
      if (adj[v][candidates[t]]) next.push_back(candidates[t]);
    }
    if (static_cast<int>(clique.size() + 1 + next.size()) < dimension) continue;
    clique.push_back(v);
    extend(adj, clique, next, dimension, out);
    clique.pop_back();
  }
}

}  // namespace

std::string_view to_string(ContextColor c) {
  static constexpr std::array<std::string_view, 4> names = {"Red", "Green", "Blue", "Mixed"};
  return names[static_cast<int>(c)];
}

ContextHypergraph enumerate_contexts(std::span<const ProjectiveRay> rays, int dimension) {
  const std::size_t n = rays.size();
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(rays[i].canon.dim()) != dimension) {
      throw InvalidInput("ray " + std::to_string(i) + " does not have dimension " +
                         std::to_string(dimension));
    }
    ids[i] = rays[i].id >= 0 ? rays[i].id : static_cast<int>(i);
  }

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (orthogonal(rays[i].canon, rays[j].canon)) adj[i][j] = adj[j][i] = 1;
    }
  }

  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  std::vector<Edge> local;
  std::vector<int> clique;
  extend(adj, clique, all, dimension, local);

  ContextHypergraph h;
  h.dimension = dimension;
  h.vertices = ids;
  for (auto& e : local) {
    Edge mapped;
    for (int i : e) mapped.push_back(ids[i]);
    h.edges.push_back(std::move(mapped));
  }
  for (std::size_t i = 0; i < n; ++i) {
    h.vectors.emplace(ids[i], rays[i].canon);
    if (!rays[i].label.empty()) h.labels.emplace(ids[i], rays[i].label);
  }
  h.normalize();
  h.validate();
  return h;
}

ContextHypergraph enumerate_contexts(std::span<const CycloVector> vectors, int dimension) {
  std::vector<ProjectiveRay> rays;
  rays.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    ProjectiveRay r = canonicalize(vectors[i]);
    r.id = static_cast<int>(i);
    rays.push_back(std::move(r));
  }
  return enumerate_contexts(rays, dimension);
}

ContextHypergraph atlas_hypergraph(const RayAtlas& atlas) {
  ContextHypergraph h = enumerate_contexts(atlas.rays, 3);
  h.meta["source"] = "atlas";
  h.meta["seeds"] = atlas.seeds;
  return h;
}

ContextColor context_color(const Edge& edge, const std::map<int, ColorClass>& colors) {
  std::optional<ColorClass> common;
  for (int v : edge) {
    auto it = colors.find(v);
    if (it == colors.end()) throw InvalidInput("vertex " + std::to_string(v) + " has no color");
    const ColorClass c = it->second;
    if (c == ColorClass::Universal || c == ColorClass::Mixed) return ContextColor::Mixed;
    if (common && *common != c) return ContextColor::Mixed;
    common = c;
  }
  if (!common) return ContextColor::Mixed;
  return static_cast<ContextColor>(static_cast<int>(*common));
}

ContextCensus classify_contexts(const ContextHypergraph& h, const std::map<int, ColorClass>& colors) {
  ContextCensus census;
  for (ContextColor c : {ContextColor::Red, ContextColor::Green, ContextColor::Blue, ContextColor::Mixed}) {
    census.counts[c] = 0;
  }
  for (const auto& e : h.edges) {
    const ContextColor c = context_color(e, colors);
    census.per_edge.push_back(c);
    ++census.counts[c];
  }
  return census;
}

std::map<int, ColorClass> color_map(const RayAtlas& atlas, ColorPolicy policy) {
  std::map<int, ColorClass> out;
  for (const auto& r : atlas.rays) out[r.id] = color_ray(atlas, r.id, policy);
  return out;
}

std::pair<RayAtlas, ContextHypergraph> restrict_subgroup(int subgroup) {
  if (subgroup < 1 || subgroup > 3) throw InvalidInput("subgroup must be 1, 2 or 3");
  const std::array<int, 3> seeds = {3 * subgroup - 2, 3 * subgroup - 1, 3 * subgroup};
  RayAtlas atlas = generate_atlas(seeds);
  ContextHypergraph h = atlas_hypergraph(atlas);
  h.meta["subgroup"] = subgroup;
  return {std::move(atlas), std::move(h)};
}

}  // namespace ksf
