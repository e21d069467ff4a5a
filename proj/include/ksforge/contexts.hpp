#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ksforge/atlas.hpp"
#include "ksforge/hypergraph.hpp"

namespace ksf {

/// All D-element sets of pairwise orthogonal rays. Vertex ids are the ray ids
/// (or positions when a ray has no id); vectors and labels are attached.
ContextHypergraph enumerate_contexts(std::span<const ProjectiveRay> rays, int dimension);
ContextHypergraph enumerate_contexts(std::span<const CycloVector> vectors, int dimension);

ContextHypergraph atlas_hypergraph(const RayAtlas& atlas);

enum class ContextColor { Red, Green, Blue, Mixed };
std::string_view to_string(ContextColor c);

struct ContextCensus {
  std::vector<ContextColor> per_edge;
  std::map<ContextColor, int> counts;  ///< all four colors present, zero-filled

  int count(ContextColor c) const { return counts.at(c); }
};

/// Pure iff every member shares one pure ray color; Universal members make
/// the context Mixed.
ContextColor context_color(const Edge& edge, const std::map<int, ColorClass>& colors);
ContextCensus classify_contexts(const ContextHypergraph& h, const std::map<int, ColorClass>& colors);
std::map<int, ColorClass> color_map(const RayAtlas& atlas, ColorPolicy policy);

/// Regenerates the atlas from one subgroup's three seeds (1..3) and enumerates
/// its contexts.
std::pair<RayAtlas, ContextHypergraph> restrict_subgroup(int subgroup);

}  // namespace ksf
