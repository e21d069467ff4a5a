#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "ksforge/atlas.hpp"
#include "ksforge/contexts.hpp"
#include "ksforge/cyclo.hpp"
#include "ksforge/gadget.hpp"
#include "ksforge/hypergraph.hpp"
#include "ksforge/mub.hpp"
#include "ksforge/states.hpp"
#include "ksforge/vector.hpp"

namespace ksf::io {

using nlohmann::json;

/// {"c":[c0,c1,c2,c3],"d":d}; integers beyond 64 bits become decimal strings.
json to_json(const CycloNum& z);
/// Accepts the object form, an integer, or a string such as "1 + 2w".
CycloNum cyclo_from_json(const json& j);

json to_json(const CycloVector& v);
/// Accepts an array of entries or a string "(1,w,w^2)".
CycloVector vector_from_json(const json& j);

json to_json(const Rational& q);

json to_json(const RayAtlas& atlas);
RayAtlas atlas_from_json(const json& j);

/// {"dimension","vertices","edges","meta"} plus "vectors"/"labels" when present.
json to_json(const ContextHypergraph& h);
ContextHypergraph hypergraph_from_json(const json& j);

/// {"count","separating","unital","ks","tifs","states"} plus the host data
/// needed to rebuild the set; `with_states = false` drops the state list.
json to_json(const StateSet& s, bool with_states = true);
StateSet states_from_json(const json& j);

json to_json(const GadgetBlocks& g);
json to_json(const NamedRaySet& s);
json to_json(const MubFamily& f, const MubVerification& v);

enum class DotStyle { Clique, Chain };

/// One node per vertex; each context drawn as a clique (or a chain) whose
/// edges carry the context colour. Without colours a fixed palette is cycled.
std::string to_dot(const ContextHypergraph& h, DotStyle style,
                   const std::optional<std::vector<ContextColor>>& colors = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ksf::io
