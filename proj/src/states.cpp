#include "ksforge/states.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "ksforge/errors.hpp"

namespace ksf {

namespace {

constexpr int kMaxFreeBits = 20;
constexpr int kMaxBruteBits = 25;

// Dense-index view of the constrained part of a hypergraph.
struct Problem {
  std::vector<int> ids;                    // dense -> vertex id
  std::vector<std::vector<int>> edges;     // dense members
  std::vector<std::vector<int>> incident;  // dense vertex -> edge indices
};

Problem build_problem(const ContextHypergraph& h, const std::vector<int>& ids) {
  Problem p;
  p.ids = ids;
  std::map<int, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  p.incident.resize(ids.size());
  for (const auto& e : h.edges) {
    std::vector<int> dense;
    for (int v : e) dense.push_back(index.at(v));
    for (int v : dense) p.incident[v].push_back(static_cast<int>(p.edges.size()));
    p.edges.push_back(std::move(dense));
  }
  return p;
}

std::vector<int> constrained_vertices(const ContextHypergraph& h) {
  std::set<int> used;
  for (const auto& e : h.edges) used.insert(e.begin(), e.end());
  return {used.begin(), used.end()};
}

class Solver {
 public:
  explicit Solver(const Problem& p) : p_(p) {}

  // Values: -1 unknown, 0, 1. Returns false on contradiction.
  bool assign(std::vector<signed char>& val, int v, signed char x) const {
    std::vector<std::pair<int, signed char>> queue{{v, x}};
    while (!queue.empty()) {
      auto [u, b] = queue.back();
      queue.pop_back();
      if (val[u] == b) continue;
      if (val[u] != -1) return false;
      val[u] = b;
      for (int e : p_.incident[u]) {
        int ones = 0, unknown = 0, last = -1;
        for (int w : p_.edges[e]) {
          if (val[w] == 1) ++ones;
          else if (val[w] == -1) ++unknown, last = w;
        }
        if (ones > 1) return false;
        if (ones == 1) {
          for (int w : p_.edges[e]) {
            if (val[w] == -1) queue.emplace_back(w, 0);
          }
        } else if (unknown == 0) {
          return false;
        } else if (unknown == 1) {
          queue.emplace_back(last, 1);
        }
      }
    }
    return true;
  }

  // Undecided edge with the fewest unknowns, or -1 when all edges are settled.
  int choose(const std::vector<signed char>& val) const {
    int best = -1, best_unknown = 0;
    for (std::size_t e = 0; e < p_.edges.size(); ++e) {
      int unknown = 0;
      bool settled = false;
      for (int w : p_.edges[e]) {
        if (val[w] == 1) settled = true;
        else if (val[w] == -1) ++unknown;
      }
      if (settled) continue;
      if (best < 0 || unknown < best_unknown) best = static_cast<int>(e), best_unknown = unknown;
    }
    return best;
  }

  void search(std::vector<signed char> val, std::vector<TwoValuedState>& out) const {
    const int e = choose(val);
    if (e < 0) {
      // Every edge holds a 1; remaining unknowns are forced 0 by exactly-one.
      TwoValuedState s;
      for (std::size_t i = 0; i < val.size(); ++i) {
        if (val[i] == 1) s.push_back(p_.ids[i]);
      }
      out.push_back(std::move(s));
      return;
    }
    for (int w : p_.edges[e]) {
      if (val[w] != -1) continue;
      auto child = val;
      if (assign(child, w, 1)) search(std::move(child), out);
    }
  }

  std::vector<std::vector<signed char>> first_branches(const std::vector<signed char>& root) const {
    std::vector<std::vector<signed char>> out;
    const int e = choose(root);
    if (e < 0) {
      out.push_back(root);
      return out;
    }
    for (int w : p_.edges[e]) {
      if (root[w] != -1) continue;
      auto child = root;
      if (assign(child, w, 1)) out.push_back(std::move(child));
    }
    return out;
  }

 private:
  const Problem& p_;
};

void sort_states(std::vector<TwoValuedState>& states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
}

// Multiplies each state by every assignment of the free vertices.
void expand_free(std::vector<TwoValuedState>& states, const std::vector<int>& free) {
  if (free.empty()) return;
  if (static_cast<int>(free.size()) > kMaxFreeBits) {
    throw CapacityExceeded(std::to_string(free.size()) + " free vertices exceed the enumeration cap");
  }
  std::vector<TwoValuedState> out;
  for (const auto& s : states) {
    for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
      TwoValuedState t = s;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (mask >> i & 1u) t.push_back(free[i]);
      }
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
    }
  }
  states = std::move(out);
}

StateSet skeleton(const ContextHypergraph& h, bool include_free) {
  StateSet s;
  s.edges = h.edges;
  s.free_vertices = h.isolated();
  s.vertices = include_free ? h.vertices : constrained_vertices(h);
  return s;
}

}  // namespace

int configured_threads() {
  if (const char* env = std::getenv("KS_FORGE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

StateSet enumerate_states(const ContextHypergraph& h, const StateOptions& options) {
  h.validate();
  StateSet result = skeleton(h, options.include_free);
  const Problem p = build_problem(h, constrained_vertices(h));
  const Solver solver(p);

  std::vector<signed char> root(p.ids.size(), -1);
  // Edges are never empty (validated), so an empty root propagates nothing;
  // seed the search directly from the first choice point.
  const auto branches = solver.first_branches(root);
  const int threads = std::max(1, std::min<int>(options.threads > 0 ? options.threads : configured_threads(),
                                                static_cast<int>(branches.size())));
  std::vector<std::vector<TwoValuedState>> parts(branches.size());
  if (threads == 1) {
    for (std::size_t b = 0; b < branches.size(); ++b) solver.search(branches[b], parts[b]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t b; (b = next++) < branches.size();) solver.search(branches[b], parts[b]);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& part : parts) {
    result.states.insert(result.states.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
  }
  if (options.include_free) {
    expand_free(result.states, result.free_vertices);
    result.free_vertices.clear();
  }
  sort_states(result.states);
  return result;
}

StateSet brute_states(const ContextHypergraph& h, bool include_free) {
  h.validate();
  StateSet result = skeleton(h, include_free);
  const auto& ids = result.vertices;
  if (static_cast<int>(ids.size()) > kMaxBruteBits) {
    throw CapacityExceeded("brute-force oracle is limited to " + std::to_string(kMaxBruteBits) +
                           " vertices, got " + std::to_string(ids.size()));
  }
  std::map<int, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> masks;
  for (const auto& e : h.edges) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << index.at(v);
    masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << ids.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto bits = static_cast<std::uint32_t>(a);
    bool ok = true;
    for (auto m : masks) {
      if (std::popcount(bits & m) != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    TwoValuedState s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (bits >> i & 1u) s.push_back(ids[i]);
    }
    result.states.push_back(std::move(s));
  }
  if (include_free) result.free_vertices.clear();
  sort_states(result.states);
  return result;
}

std::map<int, std::vector<int>> partition_logic(const StateSet& s) {
  if (s.states.empty()) throw NoEmbedding("no two-valued states: no partition-logic embedding exists");
  std::map<int, std::vector<int>> out;
  for (int v : s.vertices) out[v];
  for (std::size_t k = 0; k < s.states.size(); ++k) {
    for (int v : s.states[k]) out[v].push_back(static_cast<int>(k));
  }
  return out;
}

StateReport verdicts(const StateSet& s) {
  StateReport r;
  r.count = s.states.size();
  r.ks = r.count == 0;
  r.free_vertices = s.free_vertices;
  if (r.ks) return r;

  const auto images = partition_logic(s);
  std::set<std::vector<int>> distinct;
  r.unital = true;
  for (const auto& [v, img] : images) {
    distinct.insert(img);
    if (img.empty() || img.size() == r.count) r.unital = false;
  }
  r.separating = distinct.size() == images.size();

  std::set<std::pair<int, int>> co_edge;
  for (const auto& e : s.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) co_edge.emplace(std::min(e[i], e[j]), std::max(e[i], e[j]));
    }
  }
  const std::size_t words = (r.count + 63) / 64;
  std::map<int, std::vector<std::uint64_t>> bits;
  for (const auto& [v, img] : images) {
    auto& b = bits[v];
    b.assign(words, 0);
    for (int k : img) b[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  for (auto a = bits.begin(); a != bits.end(); ++a) {
    for (auto b = std::next(a); b != bits.end(); ++b) {
      if (co_edge.count({a->first, b->first})) continue;
      bool together = false;
      for (std::size_t w = 0; w < words && !together; ++w) together = (a->second[w] & b->second[w]) != 0;
      if (!together) r.tifs.emplace_back(a->first, b->first);
    }
  }
  return r;
}

bool same_state_set(const StateSet& s1, const StateSet& s2, const std::map<int, int>& bijection) {
  if (s1.vertices.size() != s2.vertices.size() || s1.states.size() != s2.states.size()) return false;
  std::vector<TwoValuedState> mapped;
  for (const auto& st : s1.states) {
    TwoValuedState t;
    for (int v : st) {
      auto it = bijection.find(v);
      if (it == bijection.end()) return false;
      t.push_back(it->second);
    }
    std::sort(t.begin(), t.end());
    mapped.push_back(std::move(t));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == s2.states;
}

bool states_sound(const StateSet& s) {
  for (const auto& st : s.states) {
    for (const auto& e : s.edges) {
      int hits = 0;
      for (int v : e) hits += std::binary_search(st.begin(), st.end(), v) ? 1 : 0;
      if (hits != 1) return false;
    }
  }
  return true;
}

ContextHypergraph fixture_b10() {
  std::vector<int> vertices(20);
  for (int i = 0; i < 20; ++i) vertices[i] = i + 1;
  ContextHypergraph h = ContextHypergraph::make(
      4, vertices,
      {{1, 4, 20, 17}, {1, 2, 3, 4}, {4, 9, 16, 20}, {20, 19, 18, 17}, {17, 12, 5, 1},
       {1, 6, 14, 20}, {4, 7, 13, 17}, {7, 8, 11, 14}, {2, 11, 15, 19}, {12, 11, 10, 9}});
  h.meta["fixture"] = "B10";
  return h;
}

ContextHypergraph fixture_b13() {
  ContextHypergraph h = fixture_b10();
  h.edges.push_back({9, 16, 5, 12});
  h.edges.push_back({7, 13, 6, 14});
  h.edges.push_back({2, 3, 18, 19});
  h.normalize();
  h.validate();
  h.meta["fixture"] = "B13";
  return h;
}

}  // namespace ksf
