#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ksforge/gadget.hpp"
#include "ksforge/properties.hpp"
#include "ksforge/states.hpp"

using namespace ksf;

TEST_SUITE("properties") {
  TEST_CASE("generators are deterministic and well formed") {
    Rng a(91), b(91);
    for (int t = 0; t < 50; ++t) {
      const CycloNum x = random_cyclo(a), y = random_cyclo(b);
      CHECK(x == y);
      CHECK_FALSE(x.is_zero());
      const CycloVector c = random_center(a, 5);
      CHECK(c == random_center(b, 5));
      for (const auto& e : c) CHECK_FALSE(e.is_zero());
    }
    Rng rng(92);
    for (int t = 0; t < 50; ++t) {
      auto p = random_permutation(rng, 9);
      std::sort(p.begin(), p.end());
      std::vector<int> id(9);
      std::iota(id.begin(), id.end(), 0);
      CHECK(p == id);
      const auto h = random_hypergraph(rng, 10, 3, 12);
      CHECK_NOTHROW(h.validate());
      CHECK(h.edges.size() <= 12);
    }
  }

  TEST_CASE("gaussian rationals have no omega part") {
    Rng rng(93);
    for (int t = 0; t < 50; ++t) {
      const CycloNum g = random_gaussian(rng);
      CHECK(g.coeffs()[1] == 0);
      CHECK(g.coeffs()[2] == 0);
    }
  }

  TEST_CASE("oracle equivalence sweep") {
    const PropertyResult r = oracle_equivalence(94, 100);
    CHECK_MESSAGE(r.pass, r.detail);
  }

  TEST_CASE("invariance on a D=4 set") {
    const PropertyResult r = scaling_permutation_invariance(95, peres24().vectors(), 4, 5);
    CHECK_MESSAGE(r.pass, r.detail);
  }

  TEST_CASE("partition checks on the block fixtures") {
    CHECK(partition_checks(fixture_b10()).pass);
    CHECK(partition_checks(fixture_b13()).pass);
  }
}
