#include "ksforge/atlas.hpp"

#include <algorithm>
#include <set>

#include "ksforge/errors.hpp"

namespace ksf {

namespace {

constexpr std::array<std::string_view, 25> kRowNames = {
    "a1", "a2", "a3", "u",   "b1",  "b2",  "b3",  "c1",   "c2",   "c3",   "d1",   "d2",   "d3",
    "b12", "b13", "b23", "e1", "e2", "e3", "b112", "b212", "b113", "b313", "b223", "b323",
};

constexpr std::array<std::string_view, 5> kColorNames = {"Red", "Green", "Blue", "Universal",
                                                         "Mixed"};

}  // namespace

std::string_view to_string(RowLabel row) { return kRowNames[static_cast<int>(row)]; }

std::optional<RowLabel> parse_row(std::string_view name) {
  for (std::size_t i = 0; i < kRowNames.size(); ++i) {
    if (kRowNames[i] == name) return kAllRows[i];
  }
  return std::nullopt;
}

std::string_view to_string(ColorClass c) { return kColorNames[static_cast<int>(c)]; }

std::optional<ColorClass> parse_color(std::string_view name) {
  for (std::size_t i = 0; i < kColorNames.size(); ++i) {
    if (kColorNames[i] == name) return static_cast<ColorClass>(i);
  }
  return std::nullopt;
}

const std::array<CycloVector, 9>& seed_vectors() {
  static const std::array<CycloVector, 9> seeds = [] {
    const CycloNum w = CycloNum::omega();
    const CycloNum w2 = w * w;
    return std::array<CycloVector, 9>{
        CycloVector{1, 1, 1},  CycloVector{1, w, w2}, CycloVector{1, w2, w},
        CycloVector{1, w, w},  CycloVector{1, w2, 1}, CycloVector{1, 1, w2},
        CycloVector{1, w2, w2}, CycloVector{1, w, 1}, CycloVector{1, 1, w},
    };
  }();
  return seeds;
}

int seed_subgroup(int seed) {
  if (seed < 1 || seed > 9) throw InvalidInput("seed index must be in 1..9");
  return (seed - 1) / 3 + 1;
}

CycloVector apply_row(RowLabel row, const CycloVector& s) {
  if (s.dim() != 3) throw InvalidInput("row functions act on 3-dimensional seeds");
  const CycloNum& x1 = s[0];
  const CycloNum& x2 = s[1];
  const CycloNum& x3 = s[2];
  const CycloNum two = 2;
  auto e = [](std::size_t i) { return CycloVector::unit(3, i); };
  auto zeroed = [&](std::size_t i) {
    CycloVector v = s;
    v[i - 1] = 0;
    return v;
  };

  CycloVector out;
  switch (row) {
    case RowLabel::A1: out = e(1); break;
    case RowLabel::A2: out = e(2); break;
    case RowLabel::A3: out = e(3); break;
    case RowLabel::U: out = s; break;
    case RowLabel::B1: out = zeroed(1); break;
    case RowLabel::B2: out = zeroed(2); break;
    case RowLabel::B3: out = zeroed(3); break;
    case RowLabel::C1: out = cross3(e(1), s); break;
    case RowLabel::C2: out = cross3(e(2), s); break;
    case RowLabel::C3: out = cross3(e(3), s); break;
    case RowLabel::D1: out = cross3(cross3(e(1), s), s); break;
    case RowLabel::D2: out = cross3(cross3(e(2), s), s); break;
    case RowLabel::D3: out = cross3(cross3(e(3), s), s); break;
    case RowLabel::B12: out = CycloVector{x1, x2, -x3}; break;
    case RowLabel::B13: out = CycloVector{x1, -x2, x3}; break;
    case RowLabel::B23: out = CycloVector{-x1, x2, x3}; break;
    case RowLabel::E1: out = CycloVector{x1, two * x2, x3}; break;
    case RowLabel::E2: out = CycloVector{x1, x2, two * x3}; break;
    case RowLabel::E3: out = CycloVector{two * x1, x2, x3}; break;
    case RowLabel::B112: out = CycloVector{two * x1, -x2, x3}; break;
    case RowLabel::B212: out = CycloVector{-x1, two * x2, x3}; break;
    case RowLabel::B113: out = CycloVector{two * x1, x2, -x3}; break;
    case RowLabel::B313: out = CycloVector{-x1, x2, two * x3}; break;
    case RowLabel::B223: out = CycloVector{x1, two * x2, -x3}; break;
    case RowLabel::B323: out = CycloVector{x1, -x2, two * x3}; break;
  }
  if (out.is_zero()) {
    throw InternalError("row " + std::string(to_string(row)) + " produced the zero vector");
  }
  return out;
}

const ProjectiveRay& RayAtlas::ray(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= rays.size()) {
    throw InvalidInput("unknown ray id " + std::to_string(id));
  }
  return rays[id];
}

std::optional<int> RayAtlas::find(const CycloVector& v) const {
  if (v.is_zero() || rays.empty() || v.dim() != rays.front().canon.dim()) return std::nullopt;
  const CycloVector canon = canonicalize(v).canon;
  auto it = std::lower_bound(rays.begin(), rays.end(), canon,
                             [](const ProjectiveRay& r, const CycloVector& c) { return r.canon < c; });
  if (it != rays.end() && it->canon == canon) return it->id;
  return std::nullopt;
}

std::optional<int> RayAtlas::find_label(std::string_view label) const {
  for (const auto& r : rays) {
    if (r.label == label) return r.id;
  }
  return std::nullopt;
}

std::vector<CycloVector> RayAtlas::vectors() const {
  std::vector<CycloVector> out;
  out.reserve(rays.size());
  for (const auto& r : rays) out.push_back(r.canon);
  return out;
}

RayAtlas generate_atlas(std::span<const int> seed_indices) {
  if (seed_indices.empty()) throw InvalidInput("generate_atlas needs at least one seed");
  std::set<int> chosen;
  for (int j : seed_indices) {
    seed_subgroup(j);  // range check
    chosen.insert(j);
  }

  struct Cell {
    Generation gen;
    ProjectiveRay ray;
  };
  std::vector<Cell> cells;
  for (RowLabel row : kAllRows) {
    for (int j : chosen) {
      cells.push_back({{row, j}, canonicalize(apply_row(row, seed_vectors()[j - 1]))});
    }
  }

  RayAtlas atlas;
  atlas.seeds.assign(chosen.begin(), chosen.end());
  std::map<CycloVector, std::vector<Generation>> groups;
  std::map<CycloVector, CycloVector> pretty;
  for (auto& c : cells) {
    groups[c.ray.canon].push_back(c.gen);
    pretty.emplace(c.ray.canon, c.ray.pretty);
  }

  // std::map iteration is sorted by canon, which fixes the ids.
  for (auto& [canon, gens] : groups) {
    std::sort(gens.begin(), gens.end());
    ProjectiveRay r;
    r.canon = canon;
    r.pretty = pretty.at(canon);
    r.id = static_cast<int>(atlas.rays.size());
    r.label = std::string(to_string(gens.front().row)) + std::to_string(gens.front().seed);

    std::set<int> origin;
    for (const auto& g : gens) {
      origin.insert(g.seed);
      atlas.generation_log[{g.row, g.seed}] = r.id;
    }
    atlas.origin.emplace_back(origin.begin(), origin.end());
    atlas.log.push_back(gens);
    atlas.rays.push_back(std::move(r));
  }
  return atlas;
}

ColorClass color_ray(const RayAtlas& atlas, int id, ColorPolicy policy) {
  atlas.ray(id);
  const auto& origin = atlas.origin[id];
  if (origin.size() == 9) return ColorClass::Universal;
  auto color_of = [](int subgroup) { return static_cast<ColorClass>(subgroup - 1); };
  if (policy == ColorPolicy::FirstClaim) return color_of(seed_subgroup(origin.front()));
  const int g = seed_subgroup(origin.front());
  for (int s : origin) {
    if (seed_subgroup(s) != g) return ColorClass::Mixed;
  }
  return color_of(g);
}

std::vector<ColorClass> color_all(const RayAtlas& atlas, ColorPolicy policy) {
  std::vector<ColorClass> out;
  out.reserve(atlas.size());
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    out.push_back(color_ray(atlas, static_cast<int>(i), policy));
  }
  return out;
}

bool closure_probe(const RayAtlas& atlas, int a, int b) {
  const auto& ra = atlas.ray(a);
  const auto& rb = atlas.ray(b);
  if (ra.canon.dim() != 3) throw InvalidInput("closure_probe needs a 3-dimensional atlas");
  CycloVector x = cross3(ra.canon, rb.canon);
  if (x.is_zero()) throw DegenerateInput("closure_probe: parallel rays have zero cross product");
  return atlas.find(x).has_value();
}

}  // namespace ksf
