#include "ksforge/mub.hpp"

#include <algorithm>

#include "ksforge/errors.hpp"

namespace ksf {

namespace {

std::vector<CycloVector> parse_all(std::initializer_list<const char*> texts) {
  std::vector<CycloVector> out;
  for (const char* t : texts) out.push_back(parse_vector(t));
  return out;
}

}  // namespace

const std::vector<CycloVector>& MubFamily::basis(const std::string& label) const {
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] == label) return bases[j];
  }
  throw InvalidInput("unknown basis label " + label);
}

MubFamily mubs3() {
  MubFamily f;
  f.dimension = 3;
  f.labels = {"B0", "B1", "B2", "B3"};
  f.bases = {
      parse_all({"(1,0,0)", "(0,1,0)", "(0,0,1)"}),
      parse_all({"(1,1,1)", "(1,w,w^2)", "(1,w^2,w)"}),
      parse_all({"(1,1,w)", "(1,w,1)", "(1,w^2,w^2)"}),
      parse_all({"(1,1,w^2)", "(1,w,w)", "(1,w^2,1)"}),
  };
  f.seed_alias = {{"B1", "B1"}, {"B2", "B3"}, {"B3", "B2"}};
  return f;
}

MubFamily mubs4() {
  MubFamily f;
  f.dimension = 4;
  f.labels = {"B0", "B1", "B2", "B3", "B4"};
  f.bases = {
      parse_all({"(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,0,1)"}),
      parse_all({"(1,1,1,1)", "(1,1,-1,-1)", "(1,-1,1,-1)", "(1,-1,-1,1)"}),
      parse_all({"(1,1,i,i)", "(1,1,-i,-i)", "(1,-1,i,-i)", "(1,-1,-i,i)"}),
      parse_all({"(1,0,0,1)", "(0,1,1,0)", "(1,0,0,-1)", "(0,1,-1,0)"}),
      parse_all({"(1,1,1,1)", "(1,i,-1,-i)", "(1,-1,1,-1)", "(1,-i,-1,i)"}),
  };
  f.seed_alias = {{"B1", "B1"}, {"B2", "B2"}, {"B3", "B3"}, {"B4", "B4"}};
  return f;
}

bool MubVerification::all_pass() const {
  return failures.empty() && std::all_of(orthogonal.begin(), orthogonal.end(), [](bool b) { return b; });
}

MubVerification verify_family(const MubFamily& f) {
  const std::size_t n = f.bases.size();
  MubVerification r;
  r.unbiased.assign(n, std::vector<bool>(n, true));
  for (const auto& b : f.bases) {
    bool ok = true;
    for (std::size_t a = 0; a < b.size() && ok; ++a) {
      for (std::size_t c = a + 1; c < b.size() && ok; ++c) ok = orthogonal(b[a], b[c]);
    }
    r.orthogonal.push_back(ok);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      bool ok = true;
      for (const auto& v : f.bases[j]) {
        for (const auto& w : f.bases[k]) ok = ok && is_unbiased(v, w);
      }
      r.unbiased[j][k] = r.unbiased[k][j] = ok;
      if (!ok) r.failures.emplace_back(static_cast<int>(j), static_cast<int>(k));
    }
  }
  return r;
}

}  // namespace ksf
