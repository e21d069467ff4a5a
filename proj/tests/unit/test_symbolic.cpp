#include "doctest.h"
#include "ksforge/gadget.hpp"
#include "ksforge/properties.hpp"
#include "ksforge/symbolic.hpp"

using namespace ksf;

namespace {

std::vector<std::pair<int, int>> pairs4() {
  return {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
}

}  // namespace

TEST_SUITE("symbolic") {
  TEST_CASE("levi-civita signs") {
    CHECK(levi_civita({0, 1, 2, 3}) == 1);
    CHECK(levi_civita({1, 0, 2, 3}) == -1);
    CHECK(levi_civita({1, 2, 0, 3}) == 1);
    CHECK(levi_civita({0, 0, 2, 3}) == 0);
    CHECK(levi_civita({4, 3, 2, 1, 0}) == 1);
  }

  TEST_CASE("pair minors are orthogonal to the center identically") {
    const SymVector u = SymVector::center(4);
    for (auto [i, j] : pairs4()) {
      CHECK(sym_inner(sym_pair_minor(i, j), u).is_zero());
      CHECK(sym_inner(sym_pair_minor(i, j), sym_pair_complement(i, j)).is_zero());
    }
  }

  TEST_CASE("emergent identity is m2 - m3") {
    const SymPoly p = sym_inner(sym_pair_complement(1, 4), sym_connectors4()[0]);
    CHECK(p.moduli_only());
    CHECK(p == moduli_poly({0, 1, -1, 0}));
    CHECK(p.to_string() == "m2 - m3");
    CHECK(p.moduli_coeffs(4) == std::vector<Rational>{0, 1, -1, 0});
  }

  TEST_CASE("connectors give moduli-only forms") {
    const SymVector u = SymVector::center(4);
    const auto c = sym_connectors4();
    CHECK(sym_inner(u, c[0]) == moduli_poly({1, 1, -1, -1}));
    CHECK(sym_inner(u, c[1]) == moduli_poly({1, -1, 1, -1}));
    CHECK(sym_inner(u, c[2]) == moduli_poly({1, -1, -1, 1}));
    CHECK(sym_inner(SymVector::center(5), sym_connector5(3)).moduli_coeffs(5) == std::vector<Rational>{0, 0, 1, 0, -1});
  }

  TEST_CASE("triple minors in D=5") {
    const SymVector u = SymVector::center(5);
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        for (int k = j + 1; k <= 5; ++k) {
          CHECK(sym_inner(sym_triple_minor5(i, j, k), u).is_zero());
          CHECK(sym_inner(sym_triple_minor5(i, j, k), sym_triple_complement5(i, j, k)).is_zero());
        }
      }
    }
  }

  TEST_CASE("evaluation matches the concrete builders on random centers") {
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
      const CycloVector u = random_center(rng, 4);
      for (auto [i, j] : pairs4()) {
        const CycloVector v = pair_minor(u, i, j), w = pair_complement(u, i, j);
        CHECK(v == sym_pair_minor(i, j).evaluate(u));
        CHECK(inner(v, u) == CycloNum(0));
        CHECK(inner(v, w) == CycloNum(0));
        CHECK(v[i - 1] == CycloNum(0));
        CHECK(v[j - 1] == CycloNum(0));
      }
      const CycloVector u5 = random_center(rng, 5);
      CHECK(inner(triple_minor5(u5, 1, 2, 3), u5) == CycloNum(0));
      CHECK(inner(triple_minor5(u5, 2, 4, 5), u5) == CycloNum(0));
    }
  }

  TEST_CASE("moduli polynomial evaluates like the inner product") {
    Rng rng(52);
    for (int t = 0; t < 50; ++t) {
      const CycloVector u = random_center(rng, 4);
      const CycloNum lhs = inner(pair_complement(u, 1, 4), connectors4(u)[0]);
      CHECK(lhs == u[1].conj() * u[1] - u[2].conj() * u[2]);
    }
  }

  TEST_CASE("to_string of a symbolic vector") {
    CHECK_FALSE(sym_pair_minor(1, 2).to_string().empty());
    CHECK(SymVector::unit(4, 2).evaluate(CycloVector{1, 2, 3, 4}) == CycloVector::unit(4, 2));
  }
}
