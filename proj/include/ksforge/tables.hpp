#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ksforge/atlas.hpp"
#include "ksforge/contexts.hpp"
#include "ksforge/vector.hpp"

namespace ksf {

/// Reference tables for the C^3 construction, shipped as plain text under
/// data/tables and compiled into the library.
struct GenerationCell {
  RowLabel row;
  int seed;
  CycloVector v;
};

struct GenerationTable {
  std::vector<GenerationCell> cells;
  /// Printed number of distinct rays per row function.
  std::map<RowLabel, int> counts;
};

struct RayEntry {
  std::string label;
  ColorClass color;
  CycloVector v;
};

struct ContextEntry {
  ContextColor color;
  std::array<std::string, 3> labels;
};

GenerationTable parse_generation_table(std::string_view text);
std::vector<RayEntry> parse_ray_table(std::string_view text);
std::vector<ContextEntry> parse_context_table(std::string_view text);

const GenerationTable& generation_table();
const std::vector<RayEntry>& ray_table();
const std::vector<ContextEntry>& context_table();

std::string_view embedded_table(int which);

}  // namespace ksf
