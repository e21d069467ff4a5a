#include "ksforge/properties.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ksforge/contexts.hpp"
#include "ksforge/iso.hpp"
#include "ksforge/states.hpp"

namespace ksf {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

CycloNum random_cyclo(Rng& rng, int bound) {
  for (;;) {
    CycloNum::Coeffs c;
    for (auto& x : c) x = uniform(rng, -bound, bound);
    CycloNum z = CycloNum::from_coeffs(c, uniform(rng, 1, bound));
    if (!z.is_zero()) return z;
  }
}

CycloNum random_gaussian(Rng& rng, int bound) {
  for (;;) {
    const CycloNum z = CycloNum::rational(uniform(rng, -bound, bound), uniform(rng, 1, bound)) +
                       CycloNum::rational(uniform(rng, -bound, bound), uniform(rng, 1, bound)) * CycloNum::imag();
    if (!z.is_zero()) return z;
  }
}

CycloVector random_center(Rng& rng, int dim) {
  std::vector<CycloNum> v;
  for (int m = 0; m < dim; ++m) v.push_back(random_gaussian(rng));
  return CycloVector(std::move(v));
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ContextHypergraph random_hypergraph(Rng& rng, int vertices, int dimension, int max_edges) {
  std::set<Edge> edges;
  for (int k = 0; k < max_edges; ++k) {
    auto p = random_permutation(rng, vertices);
    Edge e(p.begin(), p.begin() + dimension);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  std::vector<int> vs(vertices);
  std::iota(vs.begin(), vs.end(), 0);
  return ContextHypergraph::make(dimension, vs, {edges.begin(), edges.end()});
}

ContextHypergraph relabeled(const ContextHypergraph& h, const std::vector<int>& perm) {
  std::map<int, int> to;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) to[h.vertices[i]] = perm[i];
  std::vector<int> vs;
  for (int v : h.vertices) vs.push_back(to[v]);
  std::vector<Edge> es;
  for (const auto& e : h.edges) {
    Edge m;
    for (int v : e) m.push_back(to[v]);
    es.push_back(std::move(m));
  }
  return ContextHypergraph::make(h.dimension, vs, es);
}

PropertyResult oracle_equivalence(std::uint64_t seed, int count) {
  Rng rng(seed);
  PropertyResult r;
  for (int t = 0; t < count; ++t) {
    const int d = uniform(rng, 0, 3) == 0 ? 4 : 3;
    const int n = uniform(rng, d, 20);
    const auto h = random_hypergraph(rng, n, d, uniform(rng, 1, 2 * n));
    const auto fast = enumerate_states(h);
    const auto slow = brute_states(h);
    ++r.cases;
    if (fast.states != slow.states || !states_sound(fast)) {
      r.pass = false;
      r.detail = "mismatch on case " + std::to_string(t) + " (" + std::to_string(n) + " vertices, " +
                 std::to_string(h.edges.size()) + " edges)";
      return r;
    }
  }
  r.detail = std::to_string(r.cases) + " random hypergraphs agree with the oracle";
  return r;
}

PropertyResult scaling_permutation_invariance(std::uint64_t seed, const std::vector<CycloVector>& vectors,
                                              int dimension, int trials) {
  Rng rng(seed);
  PropertyResult r;
  const auto base = enumerate_contexts(std::span<const CycloVector>(vectors), dimension);
  const auto base_states = enumerate_states(base).count();
  for (int t = 0; t < trials; ++t) {
    const auto perm = random_permutation(rng, static_cast<int>(vectors.size()));
    std::vector<CycloVector> moved(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) moved[perm[i]] = vectors[i].scaled(random_cyclo(rng));
    const auto h = enumerate_contexts(std::span<const CycloVector>(moved), dimension);
    ++r.cases;
    // Vertex i of base is vertex perm[i] of h, so relabeling base must give h exactly.
    if (h.edges.size() != base.edges.size() || enumerate_states(h).count() != base_states ||
        relabeled(base, perm).edges != h.edges) {
      r.pass = false;
      r.detail = "counts changed under trial " + std::to_string(t);
      return r;
    }
  }
  r.detail = std::to_string(r.cases) + " rescaled/permuted copies keep " + std::to_string(base.edges.size()) +
             " contexts and " + std::to_string(base_states) + " states";
  return r;
}

PropertyResult partition_checks(const ContextHypergraph& h) {
  PropertyResult r;
  const auto s = enumerate_states(h);
  const auto images = partition_logic(s);
  const std::size_t n = s.count();
  for (const auto& e : h.edges) {
    ++r.cases;
    std::vector<int> all;
    for (int v : e) all.insert(all.end(), images.at(v).begin(), images.at(v).end());
    std::sort(all.begin(), all.end());
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    if (all != expect) {
      r.pass = false;
      r.detail = "an edge's images do not partition the state set";
      return r;
    }
  }
  std::set<std::vector<int>> distinct;
  for (const auto& [v, img] : images) distinct.insert(img);
  const bool injective = distinct.size() == images.size();
  if (injective != verdicts(s).separating) {
    r.pass = false;
    r.detail = "separating verdict disagrees with injectivity";
    return r;
  }
  r.detail = std::to_string(r.cases) + " edges partition " + std::to_string(n) + " states; injective=" +
             (injective ? "true" : "false");
  return r;
}

}  // namespace ksf
