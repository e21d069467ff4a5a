#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ksforge/contexts.hpp"
#include "ksforge/iso.hpp"
#include "ksforge/properties.hpp"
#include "ksforge/states.hpp"

using namespace ksf;

namespace {

std::set<Edge> mapped_edges(const ContextHypergraph& h, const std::vector<int>& pos_to_b,
                            const std::vector<int>& verts_a) {
  std::set<Edge> out;
  for (const auto& e : h.edges) {
    Edge m;
    for (int v : e) {
      const auto it = std::find(verts_a.begin(), verts_a.end(), v);
      m.push_back(pos_to_b[it - verts_a.begin()]);
    }
    std::sort(m.begin(), m.end());
    out.insert(m);
  }
  return out;
}

// Tries every vertex bijection.
bool brute_iso(const ContextHypergraph& a, const ContextHypergraph& b) {
  if (a.dimension != b.dimension || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) {
    return false;
  }
  const std::set<Edge> target(b.edges.begin(), b.edges.end());
  std::vector<int> perm = b.vertices;
  std::sort(perm.begin(), perm.end());
  do {
    if (mapped_edges(a, perm, a.vertices) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_SUITE("iso") {
  TEST_CASE("canonical labelling agrees with brute force on small hypergraphs") {
    Rng rng(31);
    int iso_pairs = 0;
    for (int t = 0; t < 150; ++t) {
      const int n = 4 + static_cast<int>(rng() % 4);
      const int dim = 2 + static_cast<int>(rng() % 2);
      const ContextHypergraph a = random_hypergraph(rng, n, dim, 1 + static_cast<int>(rng() % 6));
      const ContextHypergraph b = (t % 2 == 0) ? relabeled(a, random_permutation(rng, n))
                                               : random_hypergraph(rng, n, dim, static_cast<int>(a.edges.size()));
      const bool expected = brute_iso(a, b);
      iso_pairs += expected;
      CHECK(iso_check(a, b) == expected);
      const auto map = find_isomorphism(a, b);
      CHECK(map.has_value() == expected);
      if (map) CHECK(is_isomorphism(a, b, *map));
    }
    CHECK(iso_pairs > 75);
  }

  TEST_CASE("reflexive, symmetric and relabelling invariant") {
    Rng rng(32);
    for (int t = 0; t < 40; ++t) {
      const int n = 8 + static_cast<int>(rng() % 10);
      const ContextHypergraph a = random_hypergraph(rng, n, 3, 2 * n);
      const ContextHypergraph b = relabeled(a, random_permutation(rng, n));
      CHECK(iso_check(a, a));
      CHECK(iso_check(a, b));
      CHECK(iso_check(b, a));
      CHECK(canonical_form(a).same_structure(canonical_form(b)));
    }
  }

  TEST_CASE("subgroup hypergraphs are isomorphic") {
    const auto s1 = restrict_subgroup(1).second;
    const auto s2 = restrict_subgroup(2).second;
    CHECK(iso_check(s1, s2));
    const auto map = find_isomorphism(s1, s2);
    REQUIRE(map.has_value());
    CHECK(is_isomorphism(s1, s2, *map));
  }

  TEST_CASE("YO is not isomorphic to a subgroup core") {
    const std::vector<int> one = {1};
    const auto yo = atlas_hypergraph(generate_atlas(one));
    CHECK_FALSE(iso_check(restrict_subgroup(1).second, yo));
    CHECK(iso_check(yo, yo));
  }

  TEST_CASE("B10 and B13 differ") {
    CHECK_FALSE(iso_check(fixture_b10(), fixture_b13()));
  }

  TEST_CASE("a broken map is rejected") {
    const ContextHypergraph h = ContextHypergraph::make(3, {1, 2, 3, 4}, {{1, 2, 3}});
    CHECK(is_isomorphism(h, h, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
    CHECK_FALSE(is_isomorphism(h, h, {{1, 4}, {2, 2}, {3, 3}, {4, 1}}));
    CHECK_FALSE(is_isomorphism(h, h, {{1, 1}, {2, 1}, {3, 3}, {4, 4}}));
  }
}
