#include "ksforge/io.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "ksforge/errors.hpp"

namespace ksf::io {

namespace {

json big_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return to_string(n);
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: " + s);
    }
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

template <class T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

json to_json(const CycloNum& z) {
  json c = json::array();
  for (const auto& x : z.coeffs()) c.push_back(big_to_json(x));
  return {{"c", c}, {"d", big_to_json(z.den())}};
}

CycloNum cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return CycloNum(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_cyclo(j.get<std::string>());
  if (j.is_object()) {
    if (!j.contains("c") || !j["c"].is_array() || j["c"].size() != 4) {
      throw InvalidInput("cyclotomic number needs \"c\" with four coefficients");
    }
    CycloNum::Coeffs c;
    for (std::size_t k = 0; k < 4; ++k) c[k] = big_from_json(j["c"][k]);
    const BigInt d = j.contains("d") ? big_from_json(j["d"]) : BigInt(1);
    if (d == 0) throw InvalidInput("zero denominator");
    return CycloNum::from_coeffs(c, d);
  }
  throw InvalidInput("cannot read a cyclotomic number from " + j.dump());
}

json to_json(const CycloVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

CycloVector vector_from_json(const json& j) {
  if (j.is_string()) return parse_vector(j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("vector must be an array or a string");
  std::vector<CycloNum> entries;
  for (const auto& x : j) entries.push_back(cyclo_from_json(x));
  return CycloVector(std::move(entries));
}

json to_json(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

json to_json(const RayAtlas& atlas) {
  const auto first = color_all(atlas, ColorPolicy::FirstClaim);
  const auto strict = color_all(atlas, ColorPolicy::Strict);
  json rays = json::array();
  for (const auto& r : atlas.rays) {
    json log = json::array();
    for (const auto& g : atlas.log[r.id]) log.push_back(json::array({std::string(to_string(g.row)), g.seed}));
    rays.push_back({{"id", r.id},
                    {"label", r.label},
                    {"canon", to_json(r.canon)},
                    {"pretty", to_json(r.pretty)},
                    {"origin", atlas.origin[r.id]},
                    {"color_first_claim", std::string(to_string(first[r.id]))},
                    {"color_strict", std::string(to_string(strict[r.id]))},
                    {"log", log}});
  }
  return {{"dimension", 3}, {"seeds", atlas.seeds}, {"rays", rays}};
}

RayAtlas atlas_from_json(const json& j) {
  RayAtlas atlas;
  atlas.seeds = require<std::vector<int>>(j, "seeds");
  if (!j.contains("rays") || !j["rays"].is_array()) throw InvalidInput("atlas needs a \"rays\" array");
  for (const auto& r : j["rays"]) {
    ProjectiveRay ray;
    ray.id = require<int>(r, "id");
    if (ray.id != static_cast<int>(atlas.rays.size())) throw InvalidInput("atlas ray ids must be 0..n-1 in order");
    ray.canon = vector_from_json(r.at("canon"));
    ray.pretty = r.contains("pretty") ? vector_from_json(r["pretty"]) : canonicalize(ray.canon).pretty;
    ray.label = r.value("label", std::string());
    atlas.origin.push_back(require<std::vector<int>>(r, "origin"));
    std::vector<Generation> gens;
    for (const auto& g : r.value("log", json::array())) {
      if (!g.is_array() || g.size() != 2 || !g[0].is_string() || !g[1].is_number_integer()) {
        throw InvalidInput("log entries are [row, seed] pairs, got " + g.dump());
      }
      const auto row = parse_row(g[0].get<std::string>());
      if (!row) throw InvalidInput("unknown row " + g[0].dump());
      gens.push_back({*row, g[1].get<int>()});
      atlas.generation_log[{*row, gens.back().seed}] = ray.id;
    }
    atlas.log.push_back(std::move(gens));
    atlas.rays.push_back(std::move(ray));
  }
  return atlas;
}

json to_json(const ContextHypergraph& h) {
  json out = {{"dimension", h.dimension}, {"vertices", h.vertices}, {"edges", h.edges}, {"meta", h.meta}};
  if (!h.vectors.empty()) {
    json vs = json::object();
    for (const auto& [id, v] : h.vectors) vs[std::to_string(id)] = to_json(v);
    out["vectors"] = vs;
  }
  if (!h.labels.empty()) {
    json ls = json::object();
    for (const auto& [id, l] : h.labels) ls[std::to_string(id)] = l;
    out["labels"] = ls;
  }
  return out;
}

ContextHypergraph hypergraph_from_json(const json& j) {
  ContextHypergraph h;
  h.dimension = require<int>(j, "dimension");
  h.vertices = require<std::vector<int>>(j, "vertices");
  h.edges = require<std::vector<Edge>>(j, "edges");
  if (j.contains("meta")) h.meta = j["meta"];
  auto key = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw InvalidInput("bad vertex key " + s);
      return v;
    } catch (const std::logic_error&) {
      throw InvalidInput("bad vertex key " + s);
    }
  };
  if (j.contains("vectors")) {
    for (const auto& [k, v] : j["vectors"].items()) h.vectors.emplace(key(k), vector_from_json(v));
  }
  if (j.contains("labels")) {
    for (const auto& [k, v] : j["labels"].items()) h.labels.emplace(key(k), v.get<std::string>());
  }
  h.normalize();
  h.validate();
  return h;
}

json to_json(const StateSet& s, bool with_states) {
  const StateReport r = verdicts(s);
  json tifs = json::array();
  for (auto [a, b] : r.tifs) tifs.push_back({a, b});
  json out = {{"count", r.count}, {"separating", r.separating}, {"unital", r.unital}, {"ks", r.ks}, {"tifs", tifs}};
  if (with_states) out["states"] = s.states;
  out["vertices"] = s.vertices;
  out["free_vertices"] = s.free_vertices;
  out["edges"] = s.edges;
  return out;
}

StateSet states_from_json(const json& j) {
  StateSet s;
  s.vertices = require<std::vector<int>>(j, "vertices");
  s.free_vertices = j.value("free_vertices", std::vector<int>{});
  s.edges = require<std::vector<Edge>>(j, "edges");
  s.states = require<std::vector<TwoValuedState>>(j, "states");
  for (auto& st : s.states) std::sort(st.begin(), st.end());
  std::sort(s.states.begin(), s.states.end());
  if (std::adjacent_find(s.states.begin(), s.states.end()) != s.states.end()) {
    throw InvalidInput("duplicate states");
  }
  return s;
}

json to_json(const NamedRaySet& s) {
  json items = json::array();
  for (const auto& it : s.items) items.push_back({{"name", it.name}, {"vector", to_json(it.v)}});
  return {{"dimension", s.dimension}, {"vectors", items}};
}

json to_json(const GadgetBlocks& g) {
  json out = to_json(g.vectors);
  out["center"] = to_json(g.center);
  out["blocks"] = g.blocks;
  out["block_names"] = g.block_names;
  const auto conn = default_connectors(g.dimension);
  json ns = json::array();
  for (const auto& v : forcing_check(g.dimension, conn)) {
    json row = json::array();
    for (const auto& q : v) row.push_back(to_json(q));
    ns.push_back(row);
  }
  out["forcing"] = {{"nullspace", ns}};
  out["all_cliques"] = g.all_cliques();
  out["blocks_orthogonal"] = g.all_blocks_orthogonal();
  return out;
}

json to_json(const MubFamily& f, const MubVerification& v) {
  json bases = json::array();
  for (std::size_t j = 0; j < f.bases.size(); ++j) {
    json vs = json::array();
    for (const auto& x : f.bases[j]) vs.push_back(to_json(x));
    bases.push_back({{"label", f.labels[j]}, {"vectors", vs}, {"orthogonal", static_cast<bool>(v.orthogonal[j])}});
  }
  json matrix = json::array();
  for (const auto& row : v.unbiased) {
    json r = json::array();
    for (bool b : row) r.push_back(b);
    matrix.push_back(r);
  }
  json failures = json::array();
  for (auto [a, b] : v.failures) failures.push_back({f.labels[a], f.labels[b]});
  return {{"dimension", f.dimension}, {"bases", bases},          {"unbiased", matrix},
          {"failures", failures},     {"seed_alias", f.seed_alias}, {"all_pass", v.all_pass()}};
}

std::string to_dot(const ContextHypergraph& h, DotStyle style, const std::optional<std::vector<ContextColor>>& colors) {
  static constexpr std::array<const char*, 8> palette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                         "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  auto color_name = [](ContextColor c) {
    switch (c) {
      case ContextColor::Red: return "red";
      case ContextColor::Green: return "green";
      case ContextColor::Blue: return "blue";
      case ContextColor::Mixed: return "black";
    }
    return "black";
  };
  if (colors && colors->size() != h.edges.size()) throw InvalidInput("one colour per context is required");
  std::ostringstream os;
  os << "graph contexts {\n  node [shape=circle];\n";
  for (int v : h.vertices) os << "  " << v << " [label=\"" << h.label_of(v) << "\"];\n";
  for (std::size_t k = 0; k < h.edges.size(); ++k) {
    const auto& e = h.edges[k];
    const std::string col = colors ? color_name((*colors)[k]) : palette[k % palette.size()];
    auto line = [&](int a, int b) {
      os << "  " << a << " -- " << b << " [color=\"" << col << "\", context=" << k << "];\n";
    };
    if (style == DotStyle::Clique) {
      for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) line(e[a], e[b]);
      }
    } else {
      for (std::size_t a = 0; a + 1 < e.size(); ++a) line(e[a], e[a + 1]);
    }
  }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace ksf::io
