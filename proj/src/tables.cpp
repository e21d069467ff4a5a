#include "ksforge/tables.hpp"

#include <sstream>

#include "ksforge/errors.hpp"

namespace ksf {

namespace embedded {
extern const std::string_view kTable1;
extern const std::string_view kTable2;
extern const std::string_view kTable3;
}  // namespace embedded

namespace {

// Non-comment, non-blank lines split on whitespace, with the 1-based line number.
std::vector<std::pair<int, std::vector<std::string>>> records(std::string_view text, bool keep_comments = false) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string w; fields >> w;) f.push_back(w);
    if (f.empty()) continue;
    if (f[0] == "#" && !keep_comments) continue;
    out.emplace_back(n, std::move(f));
  }
  return out;
}

[[noreturn]] void bad_line(int n, const std::string& what) {
  throw InvalidInput("table line " + std::to_string(n) + ": " + what);
}

CycloVector vector_of(const std::vector<std::string>& f, std::size_t from, int line) {
  if (f.size() != from + 3) bad_line(line, "expected three coordinates");
  return CycloVector{parse_cyclo(f[from]), parse_cyclo(f[from + 1]), parse_cyclo(f[from + 2])};
}

}  // namespace

GenerationTable parse_generation_table(std::string_view text) {
  GenerationTable t;
  for (const auto& [n, f] : records(text, true)) {
    if (f[0] == "#") {
      if (f.size() == 4 && f[1] == "count") {
        const auto row = parse_row(f[2]);
        if (!row) bad_line(n, "unknown row " + f[2]);
        t.counts[*row] = std::stoi(f[3]);
      }
      continue;
    }
    const auto row = parse_row(f[0]);
    if (!row) bad_line(n, "unknown row " + f[0]);
    t.cells.push_back({*row, std::stoi(f.at(1)), vector_of(f, 2, n)});
  }
  return t;
}

std::vector<RayEntry> parse_ray_table(std::string_view text) {
  std::vector<RayEntry> out;
  for (const auto& [n, f] : records(text)) {
    const auto color = parse_color(f.at(1));
    if (!color) bad_line(n, "unknown color " + f[1]);
    out.push_back({f[0], *color, vector_of(f, 2, n)});
  }
  return out;
}

std::vector<ContextEntry> parse_context_table(std::string_view text) {
  std::vector<ContextEntry> out;
  for (const auto& [n, f] : records(text)) {
    if (f.size() != 4) bad_line(n, "expected a color and three labels");
    ContextColor c;
    if (f[0] == "Red") c = ContextColor::Red;
    else if (f[0] == "Green") c = ContextColor::Green;
    else if (f[0] == "Blue") c = ContextColor::Blue;
    else if (f[0] == "Mixed") c = ContextColor::Mixed;
    else bad_line(n, "unknown context color " + f[0]);
    out.push_back({c, {f[1], f[2], f[3]}});
  }
  return out;
}

std::string_view embedded_table(int which) {
  switch (which) {
    case 1: return embedded::kTable1;
    case 2: return embedded::kTable2;
    case 3: return embedded::kTable3;
  }
  throw InvalidInput("tables are numbered 1..3");
}

const GenerationTable& generation_table() {
  static const GenerationTable t = parse_generation_table(embedded::kTable1);
  return t;
}

const std::vector<RayEntry>& ray_table() {
  static const auto t = parse_ray_table(embedded::kTable2);
  return t;
}

const std::vector<ContextEntry>& context_table() {
  static const auto t = parse_context_table(embedded::kTable3);
  return t;
}

}  // namespace ksf
