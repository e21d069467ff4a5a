#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ksf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of the cyclotomic field Q(z), z = exp(2*pi*i/12).
///
/// Stored as (c0 + c1 z + c2 z^2 + c3 z^3) / den over the power basis, reduced
/// modulo z^4 - z^2 + 1. The representation is kept normalized (den > 0 and
/// gcd(c0..c3, den) = 1), so structural equality is field equality.
///
/// omega = z^4 = z^2 - 1 and i = z^3 both live here, so the D=3 Eisenstein
/// vectors and the D=4/5 Gaussian vectors share one arithmetic.
class CycloNum {
 public:
  using Coeffs = std::array<BigInt, 4>;

  CycloNum() : c_{0, 0, 0, 0}, den_(1) {}
  CycloNum(long long n) : c_{n, 0, 0, 0}, den_(1) {}  // NOLINT: implicit by design of literals
  CycloNum(const BigInt& n) : c_{n, 0, 0, 0}, den_(1) {}  // NOLINT
  CycloNum(const Rational& q);  // NOLINT

  static CycloNum from_coeffs(Coeffs c, BigInt den = 1);
  static CycloNum rational(const BigInt& num, const BigInt& den);
  /// z^k for any integer k.
  static CycloNum zeta(int k);
  static CycloNum omega() { return zeta(4); }
  static CycloNum imag() { return zeta(3); }

  const Coeffs& coeffs() const { return c_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// True when the number is rational; `out` receives it.
  bool to_rational(Rational& out) const;

  /// Field automorphism z -> z^k, k coprime to 12.
  CycloNum galois(int k) const;
  /// Complex conjugation (z -> z^11).
  CycloNum conj() const { return galois(11); }
  /// Field norm down to Q: product of all four Galois conjugates.
  Rational norm() const;
  CycloNum inverse() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.den_ == b.den_ && a.c_ == b.c_;
  }
  /// Total order on representations (coefficients, then denominator). Has no
  /// arithmetic meaning; used for canonical sorting only.
  friend std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b);

  /// Text form over the power basis, e.g. "2 - z^2" or "(1 + z^3)/2".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  void normalize();

  Coeffs c_;
  BigInt den_;
};

/// Parses the mini syntax used by fixtures and the CLI: a sum of terms, each an
/// optional rational coefficient followed by an optional unit `w` (omega),
/// `i`, or `z` (primitive 12th root) with optional `^k`. Examples: "1", "-2w^2",
/// "1+i", "-1/2", "(1 + z^3)/2", "3*z^2".
CycloNum parse_cyclo(std::string_view text);

std::string to_string(const BigInt& n);

}  // namespace ksf

template <>
struct std::hash<ksf::CycloNum> {
  std::size_t operator()(const ksf::CycloNum& z) const { return z.hash(); }
};
