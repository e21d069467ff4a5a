#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ksforge/vector.hpp"

namespace ksf {

/// The 25 generating functions, in table order.
enum class RowLabel {
  A1, A2, A3, U, B1, B2, B3, C1, C2, C3, D1, D2, D3,
  B12, B13, B23, E1, E2, E3, B112, B212, B113, B313, B223, B323,
};

inline constexpr std::array<RowLabel, 25> kAllRows = {
    RowLabel::A1,   RowLabel::A2,   RowLabel::A3,   RowLabel::U,    RowLabel::B1,
    RowLabel::B2,   RowLabel::B3,   RowLabel::C1,   RowLabel::C2,   RowLabel::C3,
    RowLabel::D1,   RowLabel::D2,   RowLabel::D3,   RowLabel::B12,  RowLabel::B13,
    RowLabel::B23,  RowLabel::E1,   RowLabel::E2,   RowLabel::E3,   RowLabel::B112,
    RowLabel::B212, RowLabel::B113, RowLabel::B313, RowLabel::B223, RowLabel::B323,
};

/// ASCII name, e.g. "b112".
std::string_view to_string(RowLabel row);
std::optional<RowLabel> parse_row(std::string_view name);

/// u1..u9: three mutually unbiased bases of C^3 (Fourier basis first).
const std::array<CycloVector, 9>& seed_vectors();
/// Subgroup 1..3 of a seed index 1..9.
int seed_subgroup(int seed);

CycloVector apply_row(RowLabel row, const CycloVector& seed);

enum class ColorClass { Red, Green, Blue, Universal, Mixed };
enum class ColorPolicy { FirstClaim, Strict };

std::string_view to_string(ColorClass c);
std::optional<ColorClass> parse_color(std::string_view name);

struct Generation {
  RowLabel row;
  int seed;  // 1..9
  friend auto operator<=>(const Generation&, const Generation&) = default;
};

struct RayAtlas {
  std::vector<int> seeds;            ///< selected seed indices, sorted
  std::vector<ProjectiveRay> rays;   ///< ids equal positions; sorted by canon
  std::vector<std::vector<int>> origin;        ///< per ray: seeds generating it
  std::vector<std::vector<Generation>> log;    ///< per ray: every (row, seed) hitting it
  std::map<std::pair<RowLabel, int>, int> generation_log;

  std::size_t size() const { return rays.size(); }
  const ProjectiveRay& ray(int id) const;
  /// Id of the atlas ray collinear with v, if any.
  std::optional<int> find(const CycloVector& v) const;
  std::optional<int> find_label(std::string_view label) const;
  std::vector<CycloVector> vectors() const;
};

/// Applies all rows to the selected seeds and dedupes projectively.
RayAtlas generate_atlas(std::span<const int> seed_indices);

/// Strict: pure iff the origin lies inside one subgroup. FirstClaim: the
/// subgroup of the smallest originating seed. Both: Universal iff all nine
/// seeds generate the ray.
ColorClass color_ray(const RayAtlas& atlas, int id, ColorPolicy policy);
std::vector<ColorClass> color_all(const RayAtlas& atlas, ColorPolicy policy);

/// True iff cross3(a, b) lands on an atlas ray.
bool closure_probe(const RayAtlas& atlas, int a, int b);

}  // namespace ksf
