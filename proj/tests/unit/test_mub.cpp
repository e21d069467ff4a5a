#include "doctest.h"
#include "ksforge/atlas.hpp"
#include "ksforge/mub.hpp"
#include "ksforge/properties.hpp"

using namespace ksf;

namespace {

CycloVector V(const char* text) { return parse_vector(text); }

bool same_ray_set(const std::vector<CycloVector>& a, const std::vector<CycloVector>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b) found = found || collinear(x, y);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("mub") {
  TEST_CASE("printed bases") {
    const MubFamily f3 = mubs3();
    CHECK(f3.basis("B1") == std::vector<CycloVector>{V("(1,1,1)"), V("(1,w,w^2)"), V("(1,w^2,w)")});
    const MubFamily f4 = mubs4();
    CHECK(f4.basis("B3") ==
          std::vector<CycloVector>{V("(1,0,0,1)"), V("(0,1,1,0)"), V("(1,0,0,-1)"), V("(0,1,-1,0)")});
  }

  TEST_CASE("B4 columns are the Fourier matrix i^(jk)") {
    const MubFamily f = mubs4();
    const auto& b4 = f.basis("B4");
    REQUIRE(b4.size() == 4);
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 4; ++j) CHECK(b4[k][j] == CycloNum::zeta(3 * j * k));
    }
  }

  TEST_CASE("D=3 family is complete and unbiased") {
    const MubVerification v = verify_family(mubs3());
    CHECK(v.all_pass());
    CHECK(v.failures.empty());
    for (bool o : v.orthogonal) CHECK(o);
  }

  TEST_CASE("D=4 verdicts as printed") {
    const MubVerification v = verify_family(mubs4());
    for (bool o : v.orthogonal) CHECK(o);
    CHECK(v.unbiased[0][2]);
    CHECK_FALSE(v.unbiased[1][4]);
    CHECK_FALSE(v.all_pass());
    const std::vector<std::pair<int, int>> failures = {{0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};
    CHECK(v.failures == failures);
    for (std::size_t j = 0; j < v.unbiased.size(); ++j) {
      for (std::size_t k = 0; k < v.unbiased.size(); ++k) CHECK(v.unbiased[j][k] == v.unbiased[k][j]);
    }
  }

  TEST_CASE("seed triples match the aliased appendix bases") {
    const MubFamily f = mubs3();
    const auto& seeds = seed_vectors();
    for (int s = 1; s <= 3; ++s) {
      const std::string label = "B" + std::to_string(s);
      const std::vector<CycloVector> triple = {seeds[3 * s - 3], seeds[3 * s - 2], seeds[3 * s - 1]};
      CHECK(same_ray_set(triple, f.basis(f.seed_alias.at(label))));
    }
    CHECK(f.seed_alias.at("B2") == "B3");
  }

  TEST_CASE("verdicts are invariant under rescaling") {
    Rng rng(71);
    for (MubFamily f : {mubs3(), mubs4()}) {
      const MubVerification before = verify_family(f);
      for (auto& basis : f.bases) {
        for (auto& v : basis) v = v.scaled(random_cyclo(rng));
      }
      const MubVerification after = verify_family(f);
      CHECK(before.unbiased == after.unbiased);
      CHECK(before.orthogonal == after.orthogonal);
    }
  }
}
