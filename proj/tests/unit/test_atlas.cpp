#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "ksforge/atlas.hpp"
#include "ksforge/errors.hpp"
#include "ksforge/tables.hpp"

using namespace ksf;

namespace {

std::string fixture(const char* name) {
  std::ifstream in(std::string(KSF_TABLE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const RayAtlas& full() {
  static const RayAtlas a = [] {
    const std::vector<int> all = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    return generate_atlas(all);
  }();
  return a;
}

int id_of(const char* label) {
  const auto id = full().find_label(label);
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_SUITE("atlas") {
  TEST_CASE("embedded tables match the files on disk") {
    CHECK(embedded_table(1) == fixture("table1_generation.txt"));
    CHECK(embedded_table(2) == fixture("table2_rays.txt"));
    CHECK(embedded_table(3) == fixture("table3_contexts.txt"));
  }

  TEST_CASE("row names round-trip") {
    for (RowLabel r : kAllRows) CHECK(parse_row(to_string(r)) == r);
    CHECK_FALSE(parse_row("zz").has_value());
  }

  TEST_CASE("apply_row examples") {
    const auto& u = seed_vectors();
    CHECK(apply_row(RowLabel::D1, u[0]) == parse_vector("(-2,1,1)"));
    CHECK(collinear(apply_row(RowLabel::B12, u[3]), parse_vector("(w,w^2,-w^2)")));
    CHECK(collinear(apply_row(RowLabel::A2, u[6]), parse_vector("(0,1,0)")));
  }

  TEST_CASE("every Table I cell is reproduced from the file on disk") {
    const GenerationTable t = parse_generation_table(fixture("table1_generation.txt"));
    REQUIRE(t.cells.size() == 225);
    for (const auto& cell : t.cells) {
      CHECK(collinear(apply_row(cell.row, seed_vectors()[cell.seed - 1]), cell.v));
    }
  }

  TEST_CASE("atlas sizes") {
    CHECK(full().size() == 165);
    const std::vector<int> s1 = {1, 2, 3}, one = {1};
    CHECK(generate_atlas(s1).size() == 69);
    CHECK(generate_atlas(one).size() == 25);
    const std::vector<int> bad = {0};
    CHECK_THROWS_AS(generate_atlas(bad), InvalidInput);
  }

  TEST_CASE("atlas rays are pairwise non-collinear") {
    const auto& rays = full().rays;
    std::set<CycloVector> canon;
    for (const auto& r : rays) canon.insert(r.canon);
    CHECK(canon.size() == rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) CHECK(rays[i].id == static_cast<int>(i));
  }

  TEST_CASE("Table II rays are exactly the atlas") {
    const auto rows = parse_ray_table(fixture("table2_rays.txt"));
    REQUIRE(rows.size() == 165);
    std::set<int> hit;
    for (const auto& r : rows) {
      const auto id = full().find(r.v);
      REQUIRE(id.has_value());
      hit.insert(*id);
      CHECK(color_ray(full(), *id, ColorPolicy::FirstClaim) == r.color);
    }
    CHECK(hit.size() == 165);
  }

  TEST_CASE("color examples") {
    const int a11 = id_of("a11");
    CHECK(color_ray(full(), a11, ColorPolicy::FirstClaim) == ColorClass::Universal);
    CHECK(color_ray(full(), a11, ColorPolicy::Strict) == ColorClass::Universal);
    const int u5 = *full().find(parse_vector("(1,w^2,1)"));
    CHECK(color_ray(full(), u5, ColorPolicy::FirstClaim) == ColorClass::Green);
    CHECK(color_ray(full(), u5, ColorPolicy::Strict) == ColorClass::Green);
    const int b11 = *full().find(parse_vector("(0,1,1)"));
    CHECK(full().origin[b11] == std::vector<int>{1, 4, 7});
    CHECK(color_ray(full(), b11, ColorPolicy::FirstClaim) == ColorClass::Red);
    CHECK(color_ray(full(), b11, ColorPolicy::Strict) == ColorClass::Mixed);
  }

  TEST_CASE("closure_probe examples") {
    CHECK_FALSE(closure_probe(full(), id_of("a11"), id_of("d21")));
    CHECK(closure_probe(full(), id_of("a11"), id_of("a21")));
    const int u1 = *full().find(parse_vector("(1,1,1)"));
    const int c11 = *full().find(parse_vector("(0,1,-1)"));
    CHECK(closure_probe(full(), u1, c11));
    for (const auto& r : full().rays) CHECK_FALSE(collinear(r.canon, parse_vector("(0,1,2)")));
  }

  TEST_CASE("origin sets are consistent with the generation log") {
    for (const auto& [key, id] : full().generation_log) {
      const auto& origin = full().origin[id];
      CHECK(std::find(origin.begin(), origin.end(), key.second) != origin.end());
    }
  }

  TEST_CASE("adding seeds never shrinks a ray's origin") {
    const std::vector<int> s = {1, 4}, big = {1, 4, 7};
    const RayAtlas a = generate_atlas(s), b = generate_atlas(big);
    for (const auto& r : a.rays) {
      const auto id = b.find(r.canon);
      REQUIRE(id.has_value());
      const auto& small_origin = a.origin[r.id];
      const auto& big_origin = b.origin[*id];
      CHECK(std::includes(big_origin.begin(), big_origin.end(), small_origin.begin(), small_origin.end()));
    }
  }

  TEST_CASE("seed triples per subgroup") {
    for (int s = 1; s <= 9; ++s) CHECK(seed_subgroup(s) == (s - 1) / 3 + 1);
  }
}
