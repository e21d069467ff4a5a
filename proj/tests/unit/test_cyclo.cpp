#include <random>

#include "doctest.h"
#include "ksforge/cyclo.hpp"
#include "ksforge/errors.hpp"
#include "ksforge/properties.hpp"
#include "oracle.hpp"

using namespace ksf;

TEST_SUITE("cyclo") {
  TEST_CASE("defining relations of omega, i and zeta") {
    const CycloNum w = CycloNum::omega(), i = CycloNum::imag(), z = CycloNum::zeta(1);
    CHECK(w * w * w == CycloNum(1));
    CHECK(CycloNum(1) + w + w * w == CycloNum(0));
    CHECK(i * i == CycloNum(-1));
    CHECK(CycloNum::zeta(6) == CycloNum(-1));
    CHECK(CycloNum::zeta(12) == CycloNum(1));
    CHECK(CycloNum::zeta(4) == z * z - CycloNum(1));
    CHECK(w == CycloNum::from_coeffs({-1, 0, 1, 0}));
  }

  TEST_CASE("conjugation examples") {
    const CycloNum w = CycloNum::omega(), i = CycloNum::imag();
    CHECK(w.conj() == w * w);
    CHECK(CycloNum(5).conj() == CycloNum(5));
    CHECK(i.conj() == -i);
    CHECK(CycloNum::zeta(1).conj() == CycloNum::zeta(11));
  }

  TEST_CASE("representation stays reduced") {
    const CycloNum a = CycloNum::from_coeffs({2, 4, 6, 8}, 4);
    CHECK(a.den() == 2);
    CHECK(a.coeffs()[0] == 1);
    CHECK(CycloNum::rational(3, -6) == CycloNum::rational(-1, 2));
    CHECK(CycloNum::rational(3, -6).den() == 2);
    CHECK(CycloNum(0).den() == 1);
    CHECK_THROWS_AS(CycloNum::rational(1, 0), InvalidInput);
  }

  TEST_CASE("parser") {
    CHECK(parse_cyclo("w") == CycloNum::omega());
    CHECK(parse_cyclo("w^2") == CycloNum::omega() * CycloNum::omega());
    CHECK(parse_cyclo("-2w^2") == CycloNum(-2) * CycloNum::omega() * CycloNum::omega());
    CHECK(parse_cyclo("1 + i") == CycloNum(1) + CycloNum::imag());
    CHECK(parse_cyclo("(1 + z^3)/2") == (CycloNum(1) + CycloNum::zeta(3)) / CycloNum(2));
    CHECK(parse_cyclo("w^-1") == CycloNum::omega() * CycloNum::omega());
    CHECK(parse_cyclo("3/4") == CycloNum::rational(3, 4));
    CHECK_THROWS_AS(parse_cyclo("1 +"), InvalidInput);
    CHECK_THROWS_AS(parse_cyclo("q"), InvalidInput);
    CHECK_THROWS_AS(parse_cyclo("1/0"), InvalidInput);
  }

  TEST_CASE("to_string round-trips through the parser") {
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
      const CycloNum z = random_cyclo(rng, 7);
      CHECK(parse_cyclo(z.to_string()) == z);
    }
  }

  TEST_CASE("big integers do not overflow") {
    CycloNum big(1);
    for (int k = 0; k < 80; ++k) big *= CycloNum(1000003);
    CHECK(big / big == CycloNum(1));
    CHECK(parse_cyclo(big.to_string()) == big);
  }

  TEST_CASE("field axioms on random elements") {
    Rng rng(2);
    for (int t = 0; t < 300; ++t) {
      const CycloNum a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a * a.inverse() == CycloNum(1));
      CHECK((a / b) * b == a);
      CHECK(a - a == CycloNum(0));
    }
  }

  TEST_CASE("galois action is a ring automorphism and conj an involution") {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
      const CycloNum a = random_cyclo(rng), b = random_cyclo(rng);
      CHECK(a.conj().conj() == a);
      for (int k : {1, 5, 7, 11}) {
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
      }
      CHECK((a * a.conj()).conj() == a * a.conj());
    }
    CHECK_THROWS_AS(CycloNum(1).galois(2), InvalidInput);
  }

  TEST_CASE("norm is the product of the four embeddings") {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
      const CycloNum a = random_cyclo(rng);
      CycloNum prod(1);
      for (int k : {1, 5, 7, 11}) prod *= a.galois(k);
      Rational q;
      REQUIRE(prod.to_rational(q));
      CHECK(q == a.norm());
    }
  }

  TEST_CASE("numerical oracle agrees with exact arithmetic") {
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
      const CycloNum a = random_cyclo(rng), b = random_cyclo(rng);
      CHECK(oracle::close(oracle::embed(a * b), oracle::embed(a) * oracle::embed(b)));
      CHECK(oracle::close(oracle::embed(a + b), oracle::embed(a) + oracle::embed(b)));
      CHECK(oracle::close(oracle::embed(a.conj()), std::conj(oracle::embed(a))));
      CHECK(oracle::close(oracle::embed(a.inverse()), 1.0 / oracle::embed(a)));
    }
  }

  TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(CycloNum(0).inverse(), InvalidInput);
    CHECK_THROWS_AS(CycloNum(1) / CycloNum(0), InvalidInput);
  }

  TEST_CASE("ordering and hashing are consistent with equality") {
    const CycloNum a = parse_cyclo("1 + w"), b = parse_cyclo("-w^2");
    CHECK(a == b);
    CHECK((a <=> b) == std::strong_ordering::equal);
    CHECK(a.hash() == b.hash());
    CHECK(parse_cyclo("1") < parse_cyclo("2"));
  }
}
