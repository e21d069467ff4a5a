#include "ksforge/vector.hpp"

#include <cctype>
#include <numeric>

#include "ksforge/errors.hpp"
#include "ksforge/linalg.hpp"

namespace ksf {

namespace {

void require_same_dim(const CycloVector& v, const CycloVector& w, const char* op) {
  if (v.dim() != w.dim()) {
    throw InvalidInput(std::string(op) + ": dimension mismatch (" + std::to_string(v.dim()) +
                       " vs " + std::to_string(w.dim()) + ")");
  }
}

}  // namespace

CycloVector::CycloVector(std::vector<CycloNum> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 3 || entries_.size() > 5) {
    throw InvalidInput("vector dimension must be 3, 4 or 5, got " +
                       std::to_string(entries_.size()));
  }
}

CycloVector CycloVector::zero(std::size_t dim) {
  return CycloVector(std::vector<CycloNum>(dim));
}

CycloVector CycloVector::unit(std::size_t dim, std::size_t i) {
  if (i < 1 || i > dim) throw InvalidInput("unit vector index out of range");
  std::vector<CycloNum> e(dim);
  e[i - 1] = 1;
  return CycloVector(std::move(e));
}

bool CycloVector::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> CycloVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) s.push_back(i);
  }
  return s;
}

CycloVector CycloVector::scaled(const CycloNum& s) const {
  CycloVector out = *this;
  for (auto& x : out.entries_) x *= s;
  return out;
}

CycloVector CycloVector::conj() const {
  CycloVector out = *this;
  for (auto& x : out.entries_) x = x.conj();
  return out;
}

std::strong_ordering operator<=>(const CycloVector& a, const CycloVector& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto c = a[i] <=> b[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string CycloVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ", ";
    s += entries_[i].to_string();
  }
  return s + ")";
}

CycloNum inner(const CycloVector& v, const CycloVector& w) {
  require_same_dim(v, w, "inner");
  CycloNum acc;
  for (std::size_t m = 0; m < v.dim(); ++m) {
    if (v[m].is_zero() || w[m].is_zero()) continue;
    acc += v[m].conj() * w[m];
  }
  return acc;
}

CycloNum norm_sq(const CycloVector& v) { return inner(v, v); }

bool orthogonal(const CycloVector& v, const CycloVector& w) { return inner(v, w).is_zero(); }

CycloVector cross3(const CycloVector& u, const CycloVector& v) {
  if (u.dim() != 3 || v.dim() != 3) throw InvalidInput("cross3 requires two 3-dimensional vectors");
  return CycloVector{(u[1] * v[2] - u[2] * v[1]).conj(), (u[2] * v[0] - u[0] * v[2]).conj(),
                     (u[0] * v[1] - u[1] * v[0]).conj()};
}

CycloVector complement_ray(std::span<const CycloVector> vs) {
  if (vs.empty()) throw InvalidInput("complement_ray needs at least one vector");
  const std::size_t dim = vs.front().dim();
  if (vs.size() != dim - 1) {
    throw InvalidInput("complement_ray needs exactly D-1 vectors in C^D");
  }
  // <v_k, x> = sum conj(v_k,m) x_m = 0 for every k.
  linalg::Matrix<CycloNum> rows;
  for (const auto& v : vs) {
    if (v.dim() != dim) throw InvalidInput("complement_ray: dimension mismatch");
    rows.push_back(v.conj().entries());
  }
  auto basis = linalg::nullspace(std::move(rows), dim);
  if (basis.size() != 1) {
    throw DegenerateInput("complement_ray: inputs are linearly dependent (complement has dimension " +
                          std::to_string(basis.size()) + ")");
  }
  return canonicalize(CycloVector(std::move(basis.front()))).pretty;
}

ProjectiveRay canonicalize(const CycloVector& v) {
  std::size_t lead = 0;
  while (lead < v.dim() && v[lead].is_zero()) ++lead;
  if (lead == v.dim()) throw InvalidInput("cannot canonicalize the zero vector");

  ProjectiveRay ray;
  ray.canon = v.scaled(v[lead].inverse());

  BigInt lcd = 1;
  for (const auto& x : ray.canon) lcd = boost::multiprecision::lcm(lcd, x.den());
  CycloVector cleared = ray.canon.scaled(CycloNum(lcd));
  BigInt content = 0;
  for (const auto& x : cleared) {
    for (const auto& c : x.coeffs()) {
      if (c != 0) content = boost::multiprecision::gcd(content, c);
    }
  }
  if (content < 0) content = -content;
  ray.pretty = content > 1 ? cleared.scaled(CycloNum::rational(1, content)) : cleared;
  return ray;
}

bool collinear(const CycloVector& v, const CycloVector& w) {
  require_same_dim(v, w, "collinear");
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = i + 1; j < v.dim(); ++j) {
      if (v[i] * w[j] != v[j] * w[i]) return false;
    }
  }
  return true;
}

bool is_unbiased(const CycloVector& v, const CycloVector& w) {
  require_same_dim(v, w, "is_unbiased");
  CycloNum ip = inner(v, w);
  CycloNum lhs = CycloNum(static_cast<long long>(v.dim())) * ip * ip.conj();
  return lhs == norm_sq(v) * norm_sq(w);
}

CycloVector parse_vector(std::string_view text) {
  std::string_view s = text;
  auto trim = [](std::string_view x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.remove_prefix(1);
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.remove_suffix(1);
    return x;
  };
  s = trim(s);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<CycloNum> entries;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      entries.push_back(parse_cyclo(trim(s.substr(start, i - start))));
      start = i + 1;
    }
  }
  return CycloVector(std::move(entries));
}

}  // namespace ksf
