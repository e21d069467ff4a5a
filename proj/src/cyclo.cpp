#include "ksforge/cyclo.hpp"

#include <cctype>
#include <functional>
#include <numeric>

#include "ksforge/errors.hpp"

namespace ksf {

namespace {

// Power-basis coordinates of z^k, k = 0..11.
const std::array<std::array<int, 4>, 12> kZetaPowers = {{
    {1, 0, 0, 0},
    {0, 1, 0, 0},
    {0, 0, 1, 0},
    {0, 0, 0, 1},
    {-1, 0, 1, 0},  // z^4 = z^2 - 1
    {0, -1, 0, 1},  // z^5 = z^3 - z
    {-1, 0, 0, 0},
    {0, -1, 0, 0},
    {0, 0, -1, 0},
    {0, 0, 0, -1},
    {1, 0, -1, 0},
    {0, 1, 0, -1},
}};

int mod12(int k) { return ((k % 12) + 12) % 12; }

int cmp(const BigInt& a, const BigInt& b) { return a.compare(b); }

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::CapacityExceeded: return "capacity-exceeded";
    case ErrorKind::ForcingPreconditionFailed: return "forcing-precondition-failed";
    case ErrorKind::ReconstructionFailure: return "reconstruction-failure";
    case ErrorKind::NoEmbedding: return "no-embedding";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

std::string to_string(const BigInt& n) { return n.str(); }

CycloNum::CycloNum(const Rational& q)
    : c_{boost::multiprecision::numerator(q), 0, 0, 0},
      den_(boost::multiprecision::denominator(q)) {
  normalize();
}

CycloNum CycloNum::from_coeffs(Coeffs c, BigInt den) {
  if (den == 0) throw InvalidInput("cyclotomic number with zero denominator");
  CycloNum z;
  z.c_ = std::move(c);
  z.den_ = std::move(den);
  z.normalize();
  return z;
}

CycloNum CycloNum::rational(const BigInt& num, const BigInt& den) {
  return from_coeffs({num, 0, 0, 0}, den);
}

CycloNum CycloNum::zeta(int k) {
  const auto& p = kZetaPowers[mod12(k)];
  return from_coeffs({p[0], p[1], p[2], p[3]}, 1);
}

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : c_) x = -x;
  }
  BigInt g = den_;
  for (const auto& x : c_) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
  }
  if (g < 0) g = -g;
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g > 1) {
    for (auto& x : c_) x /= g;
    den_ /= g;
  }
}

bool CycloNum::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycloNum::is_rational() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycloNum::to_rational(Rational& out) const {
  if (!is_rational()) return false;
  out = Rational(c_[0], den_);
  return true;
}

CycloNum CycloNum::galois(int k) const {
  if (std::gcd(mod12(k), 12) != 1) {
    throw InvalidInput("galois exponent must be coprime to 12");
  }
  Coeffs out{0, 0, 0, 0};
  for (int j = 0; j < 4; ++j) {
    if (c_[j] == 0) continue;
    const auto& p = kZetaPowers[mod12(j * k)];
    for (int t = 0; t < 4; ++t) {
      if (p[t] != 0) out[t] += p[t] * c_[j];
    }
  }
  return from_coeffs(std::move(out), den_);
}

Rational CycloNum::norm() const {
  CycloNum prod = *this * galois(5) * galois(7) * galois(11);
  Rational q;
  if (!prod.to_rational(q)) throw InternalError("field norm is not rational");
  return q;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero in cyclotomic field");
  CycloNum rest = galois(5) * galois(7) * galois(11);
  CycloNum n = *this * rest;
  if (!n.is_rational()) throw InternalError("field norm is not rational");
  // rest / (n0 / nd) = rest * nd / n0
  CycloNum out = rest;
  for (auto& x : out.c_) x *= n.den_;
  out.den_ *= n.c_[0];
  out.normalize();
  return out;
}

CycloNum CycloNum::operator-() const {
  CycloNum z = *this;
  for (auto& x : z.c_) x = -x;
  return z;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (den_ == o.den_) {
    for (int j = 0; j < 4; ++j) c_[j] += o.c_[j];
  } else {
    for (int j = 0; j < 4; ++j) c_[j] = c_[j] * o.den_ + o.c_[j] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  std::array<BigInt, 7> p;
  for (auto& x : p) x = 0;
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c_[b] == 0) continue;
      p[a + b] += c_[a] * o.c_[b];
    }
  }
  // z^k = z^(k-2) - z^(k-4) for k >= 4
  for (int k = 6; k >= 4; --k) {
    if (p[k] == 0) continue;
    p[k - 2] += p[k];
    p[k - 4] -= p[k];
  }
  c_ = {p[0], p[1], p[2], p[3]};
  den_ *= o.den_;
  normalize();
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b) {
  for (int j = 0; j < 4; ++j) {
    int c = cmp(a.c_[j], b.c_[j]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.den_, b.den_);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::string body;
  int terms = 0;
  for (int j = 0; j < 4; ++j) {
    const BigInt& x = c_[j];
    if (x == 0) continue;
    BigInt mag = x < 0 ? BigInt(-x) : x;
    if (terms == 0) {
      if (x < 0) body += "-";
    } else {
      body += x < 0 ? " - " : " + ";
    }
    if (j == 0 || mag != 1) body += mag.str();
    if (j > 0) {
      if (mag != 1) body += "*";
      body += "z";
      if (j > 1) body += "^" + std::to_string(j);
    }
    ++terms;
  }
  if (den_ == 1) return body;
  if (terms > 1) body = "(" + body + ")";
  return body + "/" + den_.str();
}

std::size_t CycloNum::hash() const {
  std::size_t h = std::hash<std::string>{}(den_.str());
  for (const auto& x : c_) {
    h ^= std::hash<std::string>{}(x.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  CycloNum parse() {
    CycloNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse cyclotomic literal '" + std::string(s_) + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  CycloNum expr() {
    CycloNum acc;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('+')) {
      } else if (eat('-')) {
        neg = true;
      } else if (!first) {
        break;
      }
      CycloNum t = term();
      acc += neg ? -t : t;
      first = false;
    }
    return acc;
  }

  // term := factor { ('*' | '/' | juxtaposed unit) factor }
  CycloNum term() {
    CycloNum v = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        CycloNum d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (pos_ < s_.size() && (is_unit(s_[pos_]) || s_[pos_] == '(')) {
        v *= factor();
      } else {
        break;
      }
    }
    return v;
  }

  static bool is_unit(char c) { return c == 'w' || c == 'i' || c == 'z'; }

  CycloNum factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    CycloNum base;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("missing ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = CycloNum(BigInt(std::string(s_.substr(start, pos_ - start))));
    } else if (is_unit(c)) {
      ++pos_;
      base = c == 'w' ? CycloNum::omega() : c == 'i' ? CycloNum::imag() : CycloNum::zeta(1);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("missing exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      CycloNum r = 1;
      for (int k = 0; k < e; ++k) r *= base;
      base = neg ? r.inverse() : r;
    }
    return base;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloNum parse_cyclo(std::string_view text) { return Parser(text).parse(); }

}  // namespace ksf
