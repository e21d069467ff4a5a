#include <algorithm>
#include <set>

#include "doctest.h"
#include "ksforge/contexts.hpp"
#include "ksforge/errors.hpp"
#include "ksforge/properties.hpp"
#include "ksforge/tables.hpp"

using namespace ksf;

namespace {

// Every D-subset checked for pairwise orthogonality.
std::set<Edge> subset_oracle(const std::vector<CycloVector>& vs, int dim) {
  const int n = static_cast<int>(vs.size());
  std::set<Edge> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != dim) continue;
    Edge e;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) e.push_back(i);
    }
    bool ok = true;
    for (std::size_t a = 0; a < e.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < e.size() && ok; ++b) ok = orthogonal(vs[e[a]], vs[e[b]]);
    }
    if (ok) out.insert(e);
  }
  return out;
}

const RayAtlas& full() {
  static const RayAtlas a = [] {
    const std::vector<int> all = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    return generate_atlas(all);
  }();
  return a;
}

const ContextHypergraph& full_h() {
  static const ContextHypergraph h = atlas_hypergraph(full());
  return h;
}

Edge edge_of(std::initializer_list<const char*> labels) {
  Edge e;
  for (const char* l : labels) e.push_back(*full().find_label(l));
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_SUITE("contexts") {
  TEST_CASE("context counts") {
    CHECK(full_h().edges.size() == 130);
    const std::vector<int> one = {1};
    CHECK(atlas_hypergraph(generate_atlas(one)).edges.size() == 16);
    for (int s = 1; s <= 3; ++s) {
      const auto [atlas, h] = restrict_subgroup(s);
      CHECK(atlas.size() == 69);
      CHECK(h.edges.size() == 50);
    }
    CHECK_THROWS_AS(restrict_subgroup(4), InvalidInput);
  }

  TEST_CASE("clique search matches the exhaustive subset oracle") {
    Rng rng(21);
    const auto& rays = full().rays;
    for (int t = 0; t < 40; ++t) {
      const int n = 6 + static_cast<int>(rng() % 7);
      std::vector<int> pick(rays.size());
      for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = static_cast<int>(i);
      std::shuffle(pick.begin(), pick.end(), rng);
      std::vector<CycloVector> vs;
      for (int i = 0; i < n; ++i) vs.push_back(rays[pick[i]].pretty);
      const ContextHypergraph h = enumerate_contexts(vs, 3);
      const std::set<Edge> got(h.edges.begin(), h.edges.end());
      CHECK(got == subset_oracle(vs, 3));
    }
  }

  TEST_CASE("D=4 oracle on small Peres-type sets") {
    const std::vector<CycloVector> vs = {
        parse_vector("(1,0,0,0)"),  parse_vector("(0,1,0,0)"),  parse_vector("(0,0,1,0)"),
        parse_vector("(0,0,0,1)"),  parse_vector("(1,1,0,0)"),  parse_vector("(1,-1,0,0)"),
        parse_vector("(0,0,1,1)"),  parse_vector("(0,0,1,-1)"), parse_vector("(1,1,1,1)"),
        parse_vector("(1,-1,1,-1)"), parse_vector("(1,1,-1,-1)"), parse_vector("(1,-1,-1,1)")};
    const ContextHypergraph h = enumerate_contexts(vs, 4);
    CHECK(std::set<Edge>(h.edges.begin(), h.edges.end()) == subset_oracle(vs, 4));
  }

  TEST_CASE("contexts are invariant under rescaling and reordering") {
    const std::vector<int> one = {1};
    const PropertyResult r = scaling_permutation_invariance(22, generate_atlas(one).vectors(), 3, 10);
    CHECK_MESSAGE(r.pass, r.detail);
  }

  TEST_CASE("Table III is exactly the context list") {
    const auto& table = context_table();
    REQUIRE(table.size() == 130);
    std::set<Edge> printed;
    for (const auto& c : table) {
      Edge e;
      for (const auto& l : c.labels) {
        const auto it = std::find_if(ray_table().begin(), ray_table().end(),
                                     [&](const RayEntry& r) { return r.label == l; });
        REQUIRE(it != ray_table().end());
        e.push_back(*full().find(it->v));
      }
      std::sort(e.begin(), e.end());
      printed.insert(e);
    }
    CHECK(printed == std::set<Edge>(full_h().edges.begin(), full_h().edges.end()));
  }

  TEST_CASE("context colors") {
    const auto colors = color_map(full(), ColorPolicy::FirstClaim);
    const ContextCensus census = classify_contexts(full_h(), colors);
    CHECK(census.count(ContextColor::Red) == 40);
    CHECK(census.count(ContextColor::Green) == 4);
    CHECK(census.count(ContextColor::Blue) == 4);
    CHECK(census.count(ContextColor::Mixed) == 82);

    const Edge u456 = edge_of({"u4", "u5", "u6"});
    REQUIRE(std::find(full_h().edges.begin(), full_h().edges.end(), u456) != full_h().edges.end());
    CHECK(context_color(u456, colors) == ContextColor::Green);
    CHECK(context_color(edge_of({"a11", "a21", "a31"}), colors) == ContextColor::Mixed);

    const auto strict = classify_contexts(full_h(), color_map(full(), ColorPolicy::Strict));
    CHECK(strict.count(ContextColor::Red) + strict.count(ContextColor::Green) +
              strict.count(ContextColor::Blue) + strict.count(ContextColor::Mixed) ==
          130);
  }

  TEST_CASE("missing ray colour is rejected") {
    CHECK_THROWS_AS(context_color(Edge{0, 1, 2}, {{0, ColorClass::Red}}), InvalidInput);
  }

  TEST_CASE("every context is pairwise orthogonal and D-sized") {
    for (const auto& e : full_h().edges) {
      REQUIRE(e.size() == 3);
      for (int a : e) {
        for (int b : e) {
          if (a != b) CHECK(orthogonal(full().ray(a).canon, full().ray(b).canon));
        }
      }
    }
  }

  TEST_CASE("wrong dimension is rejected") {
    const std::vector<CycloVector> vs = {parse_vector("(1,0,0,0)")};
    CHECK_THROWS_AS(enumerate_contexts(vs, 3), InvalidInput);
  }
}
