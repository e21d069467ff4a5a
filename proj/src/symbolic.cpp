#include "ksforge/symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "ksforge/errors.hpp"

namespace ksf {

SymVector SymVector::zero(int dim) {
  SymVector v;
  v.entries.resize(dim);
  return v;
}

SymVector SymVector::center(int dim) {
  SymVector v = zero(dim);
  for (int m = 0; m < dim; ++m) v.add(m, 1, m, false);
  return v;
}

SymVector SymVector::unit(int dim, int i) {
  SymVector v = zero(dim);
  v.entries[i - 1].push_back({Rational(1), -1, false});
  return v;
}

void SymVector::add(int m, const Rational& coef, int var, bool conj) {
  if (coef == 0) return;
  auto& entry = entries.at(m);
  for (auto it = entry.begin(); it != entry.end(); ++it) {
    if (it->var == var && it->conj == conj) {
      it->coef += coef;
      if (it->coef == 0) entry.erase(it);
      return;
    }
  }
  entry.push_back({coef, var, conj});
}

// var == -1 marks a constant term (used by unit vectors).
CycloVector SymVector::evaluate(const CycloVector& u) const {
  if (u.dim() != entries.size()) throw InvalidInput("center dimension does not match the symbolic vector");
  std::vector<CycloNum> out(entries.size());
  for (std::size_t m = 0; m < entries.size(); ++m) {
    for (const auto& t : entries[m]) {
      CycloNum x = t.var < 0 ? CycloNum(1) : (t.conj ? u[t.var].conj() : u[t.var]);
      out[m] += CycloNum(t.coef) * x;
    }
  }
  return CycloVector(std::move(out));
}

namespace {

std::string letter_name(int var, bool conj) {
  const std::string x = "x" + std::to_string(var + 1);
  return conj ? "conj(" + x + ")" : x;
}

std::string coef_prefix(const Rational& c, bool first) {
  std::ostringstream os;
  const Rational a = c < 0 ? Rational(-c) : c;
  if (c < 0) os << (first ? "-" : " - ");
  else if (!first) os << " + ";
  if (a != 1) os << a << "*";
  return os.str();
}

}  // namespace

std::string SymVector::to_string() const {
  std::string out = "(";
  for (std::size_t m = 0; m < entries.size(); ++m) {
    if (m) out += ", ";
    if (entries[m].empty()) {
      out += "0";
      continue;
    }
    bool first = true;
    for (const auto& t : entries[m]) {
      if (t.var < 0) {
        std::ostringstream os;
        os << (first ? "" : (t.coef < 0 ? " - " : " + ")) << (first ? t.coef : abs(t.coef));
        out += os.str();
      } else {
        out += coef_prefix(t.coef, first) + letter_name(t.var, t.conj);
      }
      first = false;
    }
  }
  return out + ")";
}

void SymPoly::add(Letter a, Letter b, const Rational& coef) {
  if (coef == 0) return;
  if (b < a) std::swap(a, b);
  auto& c = terms_[{a, b}];
  c += coef;
  if (c == 0) terms_.erase({a, b});
}

bool SymPoly::moduli_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    const auto& [a, b] = kv.first;
    return a.first == b.first && a.first >= 0 && a.second != b.second;
  });
}

std::vector<Rational> SymPoly::moduli_coeffs(int dim) const {
  if (!moduli_only()) throw InternalError("polynomial is not linear in the squared moduli: " + to_string());
  std::vector<Rational> out(dim, Rational(0));
  for (const auto& [mono, c] : terms_) out.at(mono.first.first) += c;
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const auto& [a, b] = mono;
    std::string name;
    if (a.first < 0 && b.first < 0) {
      name = "1";
    } else if (a.first < 0 || b.first < 0) {
      const Letter& l = a.first < 0 ? b : a;
      name = letter_name(l.first, l.second);
    } else if (a.first == b.first && a.second != b.second) {
      name = "m" + std::to_string(a.first + 1);
    } else {
      name = letter_name(a.first, a.second) + "*" + letter_name(b.first, b.second);
    }
    out += coef_prefix(c, first) + name;
    first = false;
  }
  return out;
}

SymPoly sym_inner(const SymVector& a, const SymVector& b) {
  if (a.dim() != b.dim()) throw InvalidInput("sym_inner: dimension mismatch");
  SymPoly p;
  for (int m = 0; m < a.dim(); ++m) {
    for (const auto& s : a.entries[m]) {
      for (const auto& t : b.entries[m]) {
        // Constants carry var -1; conjugating them is a no-op.
        const SymPoly::Letter la{s.var, s.var < 0 ? false : !s.conj};
        const SymPoly::Letter lb{t.var, t.var < 0 ? false : t.conj};
        p.add(la, lb, s.coef * t.coef);
      }
    }
  }
  return p;
}

SymPoly moduli_poly(const std::vector<Rational>& coeffs) {
  SymPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    p.add({static_cast<int>(j), true}, {static_cast<int>(j), false}, coeffs[j]);
  }
  return p;
}

int levi_civita(const std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace ksf
