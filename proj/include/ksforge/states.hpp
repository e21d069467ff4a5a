#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ksforge/hypergraph.hpp"

namespace ksf {

/// Sorted ids of the vertices assigned 1; every other vertex is 0.
using TwoValuedState = std::vector<int>;

struct StateOptions {
  /// Enumerate vertices lying in no edge as free bits (2^k blow-up).
  bool include_free = false;
  /// Worker cap; 0 reads KS_FORGE_THREADS, falling back to the hardware count.
  int threads = 0;
};

struct StateSet {
  /// Vertices the states range over, sorted.
  std::vector<int> vertices;
  /// Vertices in no edge that were left out of the enumeration.
  std::vector<int> free_vertices;
  /// Host edges, kept for TIFS and partition checks.
  std::vector<Edge> edges;
  /// Lexicographically sorted, pairwise distinct.
  std::vector<TwoValuedState> states;

  std::size_t count() const { return states.size(); }
};

struct StateReport {
  std::size_t count = 0;
  bool separating = false;
  bool unital = false;
  bool ks = true;
  std::vector<std::pair<int, int>> tifs;
  std::vector<int> free_vertices;
};

/// Backtracking over edges with unit propagation. The first choice point may
/// be split across threads; the result does not depend on the schedule.
StateSet enumerate_states(const ContextHypergraph& h, const StateOptions& options = {});

/// Exhaustive 2^n oracle; n above 25 throws CapacityExceeded.
StateSet brute_states(const ContextHypergraph& h, bool include_free = false);

StateReport verdicts(const StateSet& s);

/// Vertex -> indices of the states making it true. Throws NoEmbedding when
/// there are no states.
std::map<int, std::vector<int>> partition_logic(const StateSet& s);

/// True iff the bijection carries s1's states exactly onto s2's.
bool same_state_set(const StateSet& s1, const StateSet& s2, const std::map<int, int>& bijection);

/// Every state has exactly one true vertex per edge.
bool states_sound(const StateSet& s);

/// Abstract block fixtures on vertices 1..20.
ContextHypergraph fixture_b10();
ContextHypergraph fixture_b13();

int configured_threads();

}  // namespace ksf
