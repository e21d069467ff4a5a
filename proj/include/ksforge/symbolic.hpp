#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ksforge/cyclo.hpp"
#include "ksforge/vector.hpp"

namespace ksf {

/// coef * x_var, or coef * conj(x_var); variables are 0-based center coordinates.
struct SymTerm {
  Rational coef;
  int var = 0;
  bool conj = false;
};

using SymEntry = std::vector<SymTerm>;

/// A vector whose entries are linear forms in the center coordinates x_j and
/// their conjugates.
struct SymVector {
  std::vector<SymEntry> entries;

  static SymVector zero(int dim);
  /// The center itself, (x_1, ..., x_D).
  static SymVector center(int dim);
  /// Standard basis vector, 1-based.
  static SymVector unit(int dim, int i);

  int dim() const { return static_cast<int>(entries.size()); }
  void add(int m, const Rational& coef, int var, bool conj);
  CycloVector evaluate(const CycloVector& u) const;
  std::string to_string() const;
};

/// Degree-two form in the letters x_j, conj(x_j). conj(x_j) x_j is written m_j.
class SymPoly {
 public:
  using Letter = std::pair<int, bool>;
  using Monomial = std::pair<Letter, Letter>;

  void add(Letter a, Letter b, const Rational& coef);
  bool is_zero() const { return terms_.empty(); }
  /// True iff only m_j monomials occur.
  bool moduli_only() const;
  /// Coefficients of m_1..m_D; throws InternalError unless moduli_only().
  std::vector<Rational> moduli_coeffs(int dim) const;
  std::string to_string() const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

/// sum_m conj(a_m) b_m, the same convention as `inner`.
SymPoly sym_inner(const SymVector& a, const SymVector& b);

/// sum_j c_j m_j.
SymPoly moduli_poly(const std::vector<Rational>& coeffs);

/// Sign of a permutation of distinct 0-based indices; 0 if any repeat.
int levi_civita(const std::vector<int>& idx);

}  // namespace ksf
