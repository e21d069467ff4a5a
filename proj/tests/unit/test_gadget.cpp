#include <set>

#include "doctest.h"
#include "ksforge/errors.hpp"
#include "ksforge/gadget.hpp"
#include "ksforge/iso.hpp"
#include "ksforge/properties.hpp"
#include "ksforge/states.hpp"

using namespace ksf;

namespace {

CycloVector V(const char* text) { return parse_vector(text); }

bool disjoint(const CycloVector& a, const CycloVector& b) {
  for (auto i : a.support()) {
    if (!b[i].is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("gadget") {
  TEST_CASE("pair minor examples") {
    CHECK(pair_minor(V("(1,1,1,1)"), 1, 2) == V("(0,0,1,-1)"));
    CHECK(pair_complement(V("(1,1,1,1)"), 3, 4) == V("(1,1,0,0)"));
    const CycloVector u = V("(1,2,1,1)");
    // (0,0,x4,-x3): the coordinates that stay are 3 and 4, not 2.
    CHECK(pair_minor(u, 1, 2) == V("(0,0,1,-1)"));
    CHECK(pair_minor(u, 3, 4) == V("(2,-1,0,0)"));
    CHECK(inner(pair_minor(u, 1, 2), u) == CycloNum(0));
  }

  TEST_CASE("connector examples") {
    const auto c = connectors4(V("(1,1,1,1)"));
    CHECK(c[0] == V("(1,1,-1,-1)"));
    CHECK(c[1] == V("(1,-1,1,-1)"));
    CHECK(c[2] == V("(1,-1,-1,1)"));
    const CycloVector u = V("(1,1,2,2)");
    CHECK(inner(u, connectors4(u)[0]) == CycloNum(-6));
    CHECK(connector5(V("(1,1,1,1,1)"), 3) == V("(0,0,1,0,-1)"));
  }

  TEST_CASE("D=4 gadget at the all-ones center") {
    const GadgetBlocks g = build_gadget4(V("(1,1,1,1)"));
    CHECK(g.vectors.items.size() == 20);
    CHECK(g.blocks.size() == 13);
    CHECK(g.all_blocks_orthogonal());
    CHECK(g.block_orthogonal(emergent_block4()));
    CHECK(g.all_cliques() == 17);
    CHECK(g.hypergraph().edges.size() == 13);
  }

  TEST_CASE("gadget-13 matches the B13 fixture") {
    const auto h = build_gadget4(V("(1,1,1,1)")).hypergraph();
    const auto b13 = fixture_b13();
    const auto map = find_isomorphism(h, b13);
    REQUIRE(map.has_value());
    const StateSet s = enumerate_states(h);
    CHECK(s.count() == 36);
    CHECK(verdicts(s).separating);
    CHECK(same_state_set(s, enumerate_states(b13), *map));
  }

  TEST_CASE("gadget construction preconditions") {
    CHECK_THROWS_AS(build_gadget4(V("(1,2,1,1)")), ForcingPreconditionFailed);
    CHECK_THROWS_AS(build_gadget4(V("(1,0,1,1)")), InvalidInput);
    CHECK_THROWS_AS(build_gadget4(V("(1,1,1)")), InvalidInput);
    CHECK(equal_moduli(V("(1,i,-1,w)")));
    CHECK_FALSE(equal_moduli(V("(1,1+i,1,1)")));
  }

  TEST_CASE("forcing nullspaces") {
    const auto n4 = forcing_check(4, default_connectors(4));
    REQUIRE(n4.size() == 1);
    CHECK(n4[0] == std::vector<Rational>{1, 1, 1, 1});
    const auto n5 = forcing_check(5, default_connectors(5));
    REQUIRE(n5.size() == 1);
    CHECK(n5[0] == std::vector<Rational>{1, 1, 1, 1, 1});
    const auto only = default_connectors(4);
    const std::vector<std::pair<std::string, SymVector>> first = {only.front()};
    CHECK(forcing_check(4, first).size() == 3);
  }

  TEST_CASE("gadgets at random equal-moduli centers") {
    Rng rng(61);
    const std::vector<CycloNum> units = {CycloNum(1), CycloNum(-1), CycloNum::imag(), -CycloNum::imag(),
                                         CycloNum::omega(), CycloNum::zeta(1)};
    for (int t = 0; t < 10; ++t) {
      std::vector<CycloNum> e4, e5;
      for (int m = 0; m < 4; ++m) e4.push_back(units[rng() % units.size()]);
      for (int m = 0; m < 5; ++m) e5.push_back(units[rng() % units.size()]);
      const GadgetBlocks g4 = build_gadget4(CycloVector(e4));
      CHECK(g4.all_blocks_orthogonal());
      CHECK(g4.block_orthogonal(emergent_block4()));
      const GadgetBlocks g5 = build_gadget5(CycloVector(e5));
      CHECK(g5.blocks.size() == 14);
      CHECK(g5.all_blocks_orthogonal());
    }
  }

  TEST_CASE("disjoint supports imply orthogonality") {
    const GadgetBlocks g4 = build_gadget4(CycloVector{CycloNum(1), CycloNum::imag(), CycloNum::omega(), CycloNum(-1)});
    const GadgetBlocks g5 = build_gadget5(V("(1,i,w,-1,z)"));
    for (const GadgetBlocks* g : {&g4, &g5}) {
      const auto& it = g->vectors.items;
      for (std::size_t a = 0; a < it.size(); ++a) {
        for (std::size_t b = a + 1; b < it.size(); ++b) {
          if (disjoint(it[a].v, it[b].v)) CHECK(orthogonal(it[a].v, it[b].v));
        }
      }
    }
  }

  TEST_CASE("D=5 gadget at the all-ones center") {
    const GadgetBlocks g = build_gadget5(V("(1,1,1,1,1)"));
    const CycloVector v123 = g.vectors.at("v123");
    CHECK(v123[0].is_zero());
    CHECK(v123[1].is_zero());
    CHECK(v123[2].is_zero());
    CHECK(inner(v123, g.center) == CycloNum(0));
    CHECK(g.vectors.at("g3") == V("(0,0,1,0,-1)"));
    CHECK(g.blocks.size() == 14);
    CHECK(g.all_blocks_orthogonal());
  }

  TEST_CASE("named ray sets") {
    const NamedRaySet p = peres24(), c = cabello18(), g = gadget20();
    CHECK(p.items.size() == 24);
    CHECK(p.contexts().edges.size() == 24);
    CHECK(enumerate_states(p.contexts()).count() == 0);
    CHECK(c.items.size() == 18);
    CHECK(c.contexts().edges.size() == 9);
    CHECK(verdicts(enumerate_states(c.contexts())).ks);
    CHECK(missing_from(c, p).empty());
    CHECK(missing_from(g, p).empty());
    std::set<std::string> covered;
    for (const auto& it : p.items) {
      if (c.find_ray(it.v) || g.find_ray(it.v)) covered.insert(it.name);
    }
    CHECK(covered.size() == 23);
  }

  TEST_CASE("reconstruction examples") {
    const NamedRaySet c = cabello18(), g = gadget20();
    const auto rows = table4_reconstructions();
    REQUIRE(rows.size() == 6);
    CHECK(reconstruct_row(c, rows[0]).ok());
    CHECK(*reconstruct_row(c, rows[0]).computed == V("(0,0,1,0)"));
    CHECK(reconstruct_row(g, rows[5]).ok());
    CHECK(reconstruct_row(g, rows[4]).ok());
    // The printed triple for w34 is linearly dependent.
    const auto w34 = reconstruct_row(c, rows[3]);
    CHECK(w34.complement_dim == 2);
    const std::vector<Reconstruction> one = {rows[3]};
    CHECK_THROWS_AS(reconstruct_missing(c, one), ReconstructionFailure);
    const std::vector<Reconstruction> good = {rows[0]};
    CHECK(reconstruct_missing(c, good).size() == 1);
  }

  TEST_CASE("every missing vector has some constructing triple") {
    const NamedRaySet c = cabello18(), g = gadget20();
    for (const auto& row : table4_reconstructions()) {
      const NamedRaySet& src = row.source == "cabello18" ? c : g;
      CHECK_FALSE(constructing_triples(src, row.expected).empty());
    }
  }
}
