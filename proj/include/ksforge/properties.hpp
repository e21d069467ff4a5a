#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ksforge/cyclo.hpp"
#include "ksforge/hypergraph.hpp"
#include "ksforge/vector.hpp"

namespace ksf {

/// Hand-rolled generators for the property suites. Deterministic given the engine.
using Rng = std::mt19937_64;

/// Nonzero element of Q(zeta12) with small coefficients and denominators.
CycloNum random_cyclo(Rng& rng, int bound = 3);
/// Nonzero Gaussian rational a + b i.
CycloNum random_gaussian(Rng& rng, int bound = 5);
CycloVector random_center(Rng& rng, int dim);

/// D-uniform hypergraph on `vertices` vertices (ids 0..n-1) with up to
/// `max_edges` distinct random edges.
ContextHypergraph random_hypergraph(Rng& rng, int vertices, int dimension, int max_edges);

/// Random relabeling of the vertex ids.
ContextHypergraph relabeled(const ContextHypergraph& h, const std::vector<int>& perm);
std::vector<int> random_permutation(Rng& rng, int n);

struct PropertyResult {
  bool pass = true;
  int cases = 0;
  std::string detail;
};

/// enumerate_states == brute_states on `count` random hypergraphs (<= 20 vertices).
PropertyResult oracle_equivalence(std::uint64_t seed, int count);
/// Context and state counts are unchanged by rescaling and reordering the vectors.
PropertyResult scaling_permutation_invariance(std::uint64_t seed, const std::vector<CycloVector>& vectors, int dimension,
                                              int trials);
/// Partition property and separating <=> injective partition logic.
PropertyResult partition_checks(const ContextHypergraph& h);

}  // namespace ksf
