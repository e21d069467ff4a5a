#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ksforge/cyclo.hpp"

namespace ksf {

/// Vector in C^D with exact cyclotomic entries, D in {3, 4, 5}.
class CycloVector {
 public:
  CycloVector() = default;
  explicit CycloVector(std::vector<CycloNum> entries);
  CycloVector(std::initializer_list<CycloNum> entries)
      : CycloVector(std::vector<CycloNum>(entries)) {}

  /// Zero vector of the given dimension.
  static CycloVector zero(std::size_t dim);
  /// Standard basis vector e_i, 1-based index.
  static CycloVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  const CycloNum& operator[](std::size_t i) const { return entries_[i]; }
  CycloNum& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<CycloNum>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  /// 0-based indices of nonzero entries.
  std::vector<std::size_t> support() const;
  CycloVector scaled(const CycloNum& s) const;
  CycloVector conj() const;

  friend bool operator==(const CycloVector&, const CycloVector&) = default;
  friend std::strong_ordering operator<=>(const CycloVector& a, const CycloVector& b);

  std::string to_string() const;

 private:
  std::vector<CycloNum> entries_;
};

/// Canonical representative of a 1-dimensional subspace, with provenance.
struct ProjectiveRay {
  CycloVector canon;   ///< first nonzero entry is exactly 1
  CycloVector pretty;  ///< integer-cleared, content-free multiple of canon
  int id = -1;
  std::string label;

  friend bool operator==(const ProjectiveRay& a, const ProjectiveRay& b) {
    return a.canon == b.canon;
  }
};

/// Hermitian inner product sum_m conj(v_m) w_m.
CycloNum inner(const CycloVector& v, const CycloVector& w);
CycloNum norm_sq(const CycloVector& v);
bool orthogonal(const CycloVector& v, const CycloVector& w);

/// Hermitian cross product: conj of the ordinary cross product, so the result
/// is orthogonal to both arguments under `inner`.
CycloVector cross3(const CycloVector& u, const CycloVector& v);

/// The unique ray orthogonal to D-1 independent vectors in C^D. Throws
/// DegenerateInput when the inputs do not span a hyperplane.
CycloVector complement_ray(std::span<const CycloVector> vs);

ProjectiveRay canonicalize(const CycloVector& v);
bool collinear(const CycloVector& v, const CycloVector& w);

/// |<v,w>|^2 == |v|^2 |w|^2 / D, decided exactly.
bool is_unbiased(const CycloVector& v, const CycloVector& w);

/// Parses "(1, w, w^2)" / "1,w,w^2" style vectors using parse_cyclo entries.
CycloVector parse_vector(std::string_view text);

}  // namespace ksf
