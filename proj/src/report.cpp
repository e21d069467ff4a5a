#include "ksforge/report.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "ksforge/atlas.hpp"
#include "ksforge/contexts.hpp"
#include "ksforge/gadget.hpp"
#include "ksforge/iso.hpp"
#include "ksforge/mub.hpp"
#include "ksforge/properties.hpp"
#include "ksforge/states.hpp"
#include "ksforge/tables.hpp"

namespace ksf {

namespace {

struct CriterionInfo {
  int id;
  const char* title;
  double budget;
};

const std::vector<CriterionInfo>& criteria_info() {
  static const std::vector<CriterionInfo> info = {
      {1, "generation table reproduction", 1},
      {2, "atlas counts and ray table", 1},
      {3, "context counts, context table and census", 5},
      {4, "cross-product non-closure", 1},
      {5, "YO two-valued states and oracle", 121},
      {6, "69-50 KS cores", 30},
      {7, "three-way isomorphism", 30},
      {8, "B10/B13 fixtures", 5},
      {9, "D=4 forcing gadget", 1},
      {10, "gadget versus B13", 5},
      {11, "Cabello/Peres sets and reconstructions", 5},
      {12, "D=5 forcing gadget", 5},
      {13, "MUB verification", 1},
      {14, "property suites", 120},
  };
  return info;
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string pairs_text(const std::vector<std::pair<int, int>>& ps) {
  std::ostringstream os;
  for (auto [a, b] : ps) os << "(" << a << "," << b << ")";
  return ps.empty() ? "none" : os.str();
}

std::string rational_rows(const std::vector<std::vector<Rational>>& rows) {
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << (r ? ", " : "") << "(";
    for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? "," : "") << rows[r][c];
    os << ")";
  }
  os << "}";
  return os.str();
}

bool all_ones_span(const std::vector<std::vector<Rational>>& rows, std::size_t dim) {
  return rows.size() == 1 && rows[0].size() == dim &&
         std::all_of(rows[0].begin(), rows[0].end(), [&](const Rational& q) { return q == rows[0][0] && q != 0; });
}

CycloVector ones(int dim) {
  std::vector<CycloNum> v(dim, CycloNum(1));
  return CycloVector(std::move(v));
}

// Lazily built shared inputs.
struct Cache {
  std::optional<RayAtlas> global_atlas;
  std::optional<ContextHypergraph> global_h;
  std::vector<std::pair<RayAtlas, ContextHypergraph>> subgroups;
  std::optional<RayAtlas> yo_atlas;
  std::optional<ContextHypergraph> yo_h;
  std::optional<StateSet> yo_states;
  std::optional<GadgetBlocks> gadget4;
  std::optional<StateSet> b10, b13;

  const RayAtlas& atlas() {
    if (!global_atlas) {
      std::vector<int> all = {1, 2, 3, 4, 5, 6, 7, 8, 9};
      global_atlas = generate_atlas(all);
    }
    return *global_atlas;
  }
  const ContextHypergraph& hyper() {
    if (!global_h) global_h = atlas_hypergraph(atlas());
    return *global_h;
  }
  const std::vector<std::pair<RayAtlas, ContextHypergraph>>& subs() {
    if (subgroups.empty()) {
      for (int g = 1; g <= 3; ++g) subgroups.push_back(restrict_subgroup(g));
    }
    return subgroups;
  }
  const ContextHypergraph& yo() {
    if (!yo_h) {
      const std::vector<int> seed = {1};
      yo_atlas = generate_atlas(seed);
      yo_h = atlas_hypergraph(*yo_atlas);
    }
    return *yo_h;
  }
  const GadgetBlocks& g4() {
    if (!gadget4) gadget4 = build_gadget4(ones(4));
    return *gadget4;
  }
  const StateSet& s10() {
    if (!b10) b10 = enumerate_states(fixture_b10());
    return *b10;
  }
  const StateSet& s13() {
    if (!b13) b13 = enumerate_states(fixture_b13());
    return *b13;
  }
};

struct Outcome {
  bool pass;
  std::string computed;
};

using Evaluator = std::function<Outcome(Cache&)>;

struct Spec {
  ManifestEntry entry;
  Evaluator eval;
};

std::set<std::vector<int>> table3_as_ids(const RayAtlas& atlas) {
  std::set<std::vector<int>> out;
  for (const auto& c : context_table()) {
    std::vector<int> e;
    for (const auto& l : c.labels) {
      const auto id = atlas.find_label(l);
      e.push_back(id ? *id : -1);
    }
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return out;
}

std::string census_text(const ContextCensus& c) {
  std::ostringstream os;
  os << "Red " << c.count(ContextColor::Red) << ", Green " << c.count(ContextColor::Green) << ", Blue "
     << c.count(ContextColor::Blue) << ", Mixed " << c.count(ContextColor::Mixed);
  return os.str();
}

const std::vector<Spec>& specs() {
  static const std::vector<Spec> list = {
      // 1
      {{"c1.cells", 1, "every generation-table cell matches its row function projectively", "225/225", "paper",
        false, true},
       [](Cache&) {
         const auto& t = generation_table();
         int ok = 0;
         for (const auto& cell : t.cells) {
           if (collinear(apply_row(cell.row, seed_vectors()[cell.seed - 1]), cell.v)) ++ok;
         }
         return Outcome{ok == 225 && t.cells.size() == 225,
                        std::to_string(ok) + "/" + std::to_string(t.cells.size())};
       }},
      {{"c1.counts", 1, "distinct rays per row function (1/3/9 pattern)", "25/25", "paper", false, true},
       [](Cache&) {
         const auto& t = generation_table();
         int ok = 0;
         for (RowLabel row : kAllRows) {
           std::vector<CycloVector> distinct;
           for (const auto& s : seed_vectors()) {
             const auto v = apply_row(row, s);
             if (std::none_of(distinct.begin(), distinct.end(), [&](const auto& d) { return collinear(d, v); })) {
               distinct.push_back(v);
             }
           }
           auto it = t.counts.find(row);
           if (it != t.counts.end() && it->second == static_cast<int>(distinct.size())) ++ok;
         }
         return Outcome{ok == 25, std::to_string(ok) + "/25"};
       }},
      // 2
      {{"c2.global_rays", 2, "rays generated from all nine seeds", "165", "paper", false, true},
       [](Cache& c) {
         const auto n = c.atlas().size();
         return Outcome{n == 165, std::to_string(n)};
       }},
      {{"c2.subgroup_rays", 2, "rays per subgroup", "69,69,69", "paper", false, true},
       [](Cache& c) {
         std::vector<std::size_t> n;
         for (const auto& [a, h] : c.subs()) n.push_back(a.size());
         const auto s = join(n);
         return Outcome{s == "69,69,69", s};
       }},
      {{"c2.single_seed_rays", 2, "rays per single seed", "25,25,25,25,25,25,25,25,25", "paper", false, true},
       [](Cache&) {
         std::vector<std::size_t> n;
         for (int s = 1; s <= 9; ++s) {
           const std::vector<int> one = {s};
           n.push_back(generate_atlas(one).size());
         }
         const auto s = join(n);
         return Outcome{s == "25,25,25,25,25,25,25,25,25", s};
       }},
      {{"c2.table2", 2, "every ray-table entry present with its label and first_claim color", "165/165", "paper",
        false, true},
       [](Cache& c) {
         const auto& atlas = c.atlas();
         const auto colors = color_all(atlas, ColorPolicy::FirstClaim);
         std::set<int> seen;
         int ok = 0;
         for (const auto& e : ray_table()) {
           const auto id = atlas.find(e.v);
           if (id && atlas.ray(*id).label == e.label && colors[*id] == e.color) {
             ++ok;
             seen.insert(*id);
           }
         }
         const bool pass = ok == 165 && seen.size() == atlas.size();
         return Outcome{pass, std::to_string(ok) + "/" + std::to_string(ray_table().size())};
       }},
      {{"c2.strict_policy", 2, "rays whose strict color differs from first_claim", "reported", "derived", true,
        false},
       [](Cache& c) {
         const auto a = color_all(c.atlas(), ColorPolicy::FirstClaim);
         const auto b = color_all(c.atlas(), ColorPolicy::Strict);
         int diff = 0;
         for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
         return Outcome{true, std::to_string(diff)};
       }},
      // 3
      {{"c3.global_contexts", 3, "contexts among the 165 rays", "130", "paper", false, true},
       [](Cache& c) {
         const auto n = c.hyper().edges.size();
         return Outcome{n == 130, std::to_string(n)};
       }},
      {{"c3.subgroup_contexts", 3, "contexts per subgroup", "50,50,50", "paper", false, true},
       [](Cache& c) {
         std::vector<std::size_t> n;
         for (const auto& [a, h] : c.subs()) n.push_back(h.edges.size());
         const auto s = join(n);
         return Outcome{s == "50,50,50", s};
       }},
      {{"c3.yo_contexts", 3, "contexts of the 25-ray YO set", "16", "paper", false, true},
       [](Cache& c) {
         const auto n = c.yo().edges.size();
         return Outcome{n == 16, std::to_string(n)};
       }},
      {{"c3.table3", 3, "enumerated contexts equal the context table as sets", "130/130", "paper", false, true},
       [](Cache& c) {
         const auto printed = table3_as_ids(c.atlas());
         const std::set<std::vector<int>> found(c.hyper().edges.begin(), c.hyper().edges.end());
         int common = 0;
         for (const auto& e : printed) common += found.count(e);
         return Outcome{printed == found && common == 130, std::to_string(common) + "/" + std::to_string(printed.size())};
       }},
      {{"c3.table3_colors", 3, "per-context colors equal the printed ones", "130/130", "paper", false, true},
       [](Cache& c) {
         const auto colors = color_map(c.atlas(), ColorPolicy::FirstClaim);
         int ok = 0;
         for (const auto& ctx : context_table()) {
           Edge e;
           for (const auto& l : ctx.labels) e.push_back(c.atlas().find_label(l).value_or(-1));
           if (std::find(e.begin(), e.end(), -1) == e.end() && context_color(e, colors) == ctx.color) ++ok;
         }
         return Outcome{ok == 130, std::to_string(ok) + "/" + std::to_string(context_table().size())};
       }},
      {{"c3.census", 3, "context census under first_claim", "Red 40, Green 4, Blue 4, Mixed 82", "paper", false,
        true},
       [](Cache& c) {
         const auto s = census_text(classify_contexts(c.hyper(), color_map(c.atlas(), ColorPolicy::FirstClaim)));
         return Outcome{s == "Red 40, Green 4, Blue 4, Mixed 82", s};
       }},
      {{"c3.mixed_intro_figure", 3, "mixed count against the introduction's figure", "72", "paper", true, false},
       [](Cache& c) {
         const auto n =
             classify_contexts(c.hyper(), color_map(c.atlas(), ColorPolicy::FirstClaim)).count(ContextColor::Mixed);
         return Outcome{n == 72, std::to_string(n) + " (130 - 48)"};
       }},
      {{"c3.census_strict", 3, "context census under the strict policy", "reported", "derived", true, false},
       [](Cache& c) {
         return Outcome{true, census_text(classify_contexts(c.hyper(), color_map(c.atlas(), ColorPolicy::Strict)))};
       }},
      {{"c3.cartesian_contexts", 3, "contexts containing a Cartesian ray match the table", "10", "paper", false,
        true},
       [](Cache& c) {
         std::set<int> cart;
         for (const char* l : {"a11", "a21", "a31"}) cart.insert(c.atlas().find_label(l).value_or(-1));
         auto touches = [&](const std::vector<int>& e) {
           return std::any_of(e.begin(), e.end(), [&](int v) { return cart.count(v) > 0; });
         };
         std::set<std::vector<int>> found, printed;
         for (const auto& e : c.hyper().edges) {
           if (touches(e)) found.insert(e);
         }
         for (const auto& e : table3_as_ids(c.atlas())) {
           if (touches(e)) printed.insert(e);
         }
         return Outcome{found == printed && found.size() == 10, std::to_string(found.size())};
       }},
      // 4
      {{"c4.non_closure", 4, "cross3(a11, d21) is not an atlas ray", "not in atlas", "paper", false, true},
       [](Cache& c) {
         const auto a = c.atlas().find_label("a11");
         const auto d = c.atlas().find_label("d21");
         if (!a || !d) return Outcome{false, "labels missing"};
         const bool closed = closure_probe(c.atlas(), *a, *d);
         const auto v = cross3(c.atlas().ray(*a).canon, c.atlas().ray(*d).canon);
         return Outcome{!closed, (closed ? "in atlas: " : "not in atlas: ") + canonicalize(v).pretty.to_string()};
       }},
      // 5
      {{"c5.yo_states", 5, "two-valued states of YO (solver under 1 s)", "24", "paper", false, true},
       [](Cache& c) {
         const auto t0 = std::chrono::steady_clock::now();
         c.yo_states = enumerate_states(c.yo());
         const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
         return Outcome{c.yo_states->count() == 24 && dt < 1.0, std::to_string(c.yo_states->count())};
       }},
      {{"c5.yo_verdicts", 5, "YO state set is separating and unital", "separating, unital", "paper", false, true},
       [](Cache& c) {
         if (!c.yo_states) c.yo_states = enumerate_states(c.yo());
         const auto r = verdicts(*c.yo_states);
         const std::string s = std::string(r.separating ? "separating" : "not separating") + ", " +
                               (r.unital ? "unital" : "not unital");
         return Outcome{r.separating && r.unital, s};
       }},
      {{"c5.yo_oracle", 5, "backtracking equals the 2^25 brute-force oracle", "identical", "derived", false, true},
       [](Cache& c) {
         if (!c.yo_states) c.yo_states = enumerate_states(c.yo());
         const auto brute = brute_states(c.yo());
         const bool same = brute.states == c.yo_states->states;
         return Outcome{same, same ? "identical" : "differs (" + std::to_string(brute.count()) + " oracle states)"};
       }},
      // 6
      {{"c6.core_states", 6, "states of the three 69-50 hypergraphs", "0,0,0", "paper", false, true},
       [](Cache& c) {
         std::vector<std::size_t> n;
         for (const auto& [a, h] : c.subs()) n.push_back(enumerate_states(h).count());
         const auto s = join(n);
         return Outcome{s == "0,0,0", s};
       }},
      // 7
      {{"c7.iso", 7, "pairwise isomorphism of the 69-50 hypergraphs", "3/3", "paper", false, true},
       [](Cache& c) {
         const auto& s = c.subs();
         int ok = 0;
         for (int a = 0; a < 3; ++a) {
           for (int b = a + 1; b < 3; ++b) {
             const auto m = find_isomorphism(s[a].second, s[b].second);
             if (m && is_isomorphism(s[a].second, s[b].second, *m)) ++ok;
           }
         }
         return Outcome{ok == 3, std::to_string(ok) + "/3"};
       }},
      // 8
      {{"c8.b10_states", 8, "B10 state count", "36", "paper", false, true},
       [](Cache& c) { return Outcome{c.s10().count() == 36, std::to_string(c.s10().count())}; }},
      {{"c8.b10_tifs", 8, "B10 TIFS pairs", "(2,18)(3,18)(3,19)(5,9)(5,16)(6,7)(6,13)(12,16)(13,14)", "paper",
        false, true},
       [](Cache& c) {
         const auto s = pairs_text(verdicts(c.s10()).tifs);
         return Outcome{s == "(2,18)(3,18)(3,19)(5,9)(5,16)(6,7)(6,13)(12,16)(13,14)", s};
       }},
      {{"c8.b13_states", 8, "B13 state count", "36", "paper", false, true},
       [](Cache& c) { return Outcome{c.s13().count() == 36, std::to_string(c.s13().count())}; }},
      {{"c8.same_set", 8, "B10 and B13 have the same states", "identical", "paper", false, true},
       [](Cache& c) {
         std::map<int, int> id;
         for (int v = 1; v <= 20; ++v) id[v] = v;
         const bool same = same_state_set(c.s10(), c.s13(), id);
         return Outcome{same, same ? "identical" : "different"};
       }},
      {{"c8.b13_tifs", 8, "B13 TIFS pairs", "none", "paper", false, true},
       [](Cache& c) {
         const auto s = pairs_text(verdicts(c.s13()).tifs);
         return Outcome{s == "none", s};
       }},
      // 9
      {{"c9.vectors", 9, "D=4 gadget vectors at u=(1,1,1,1)", "20", "paper", false, true},
       [](Cache& c) {
         const auto n = c.g4().vectors.items.size();
         return Outcome{n == 20, std::to_string(n)};
       }},
      {{"c9.blocks", 9, "constructed blocks, all orthogonal", "13 orthogonal", "paper", false, true},
       [](Cache& c) {
         int ok = 0;
         for (const auto& b : c.g4().blocks) ok += c.g4().block_orthogonal(b);
         return Outcome{ok == 13 && c.g4().blocks.size() == 13,
                        std::to_string(ok) + " of " + std::to_string(c.g4().blocks.size()) + " orthogonal"};
       }},
      {{"c9.forcing", 9, "forcing nullspace of the D=4 connector system", "span{(1,1,1,1)}", "paper", false, true},
       [](Cache&) {
         const auto ns = forcing_check(4, default_connectors(4));
         return Outcome{all_ones_span(ns, 4), rational_rows(ns)};
       }},
      {{"c9.emergent", 9, "emergent block {w14,w23,v1234,v1324} orthogonal", "orthogonal", "paper", false, true},
       [](Cache& c) {
         const bool ok = c.g4().block_orthogonal(emergent_block4());
         return Outcome{ok, ok ? "orthogonal" : "not orthogonal"};
       }},
      {{"c9.identity", 9, "symbolic <w14, v1234>", "m2 - m3", "paper", false, true},
       [](Cache&) {
         const auto p = sym_inner(sym_pair_complement(1, 4), sym_connectors4()[0]);
         return Outcome{p == moduli_poly({0, 1, -1, 0}), p.to_string()};
       }},
      {{"c9.all_tetrads", 9, "all tetrads among the 20 gadget vectors", "13", "paper", true, false},
       [](Cache& c) {
         const auto n = c.g4().all_cliques();
         return Outcome{n == 13, std::to_string(n)};
       }},
      // 10
      {{"c10.states", 10, "states of the constructed 13-block hypergraph", "36, separating", "derived", false, true},
       [](Cache& c) {
         const auto s = enumerate_states(c.g4().hypergraph());
         const auto r = verdicts(s);
         return Outcome{s.count() == 36 && r.separating,
                        std::to_string(s.count()) + (r.separating ? ", separating" : ", not separating")};
       }},
      {{"c10.vs_b13", 10, "gadget-13 against the B13 fixture", "isomorphic, same states", "derived", true, false},
       [](Cache& c) {
         const auto h = c.g4().hypergraph();
         const auto m = find_isomorphism(h, fixture_b13());
         if (!m) return Outcome{false, "not isomorphic"};
         const bool same = same_state_set(enumerate_states(h), c.s13(), *m);
         return Outcome{same, std::string("isomorphic, ") + (same ? "same states" : "different states")};
       }},
      // 11
      {{"c11.cabello", 11, "cabello18 contexts and states", "9 contexts, 0 states", "paper", false, true},
       [](Cache&) {
         const auto h = cabello18().contexts();
         const auto s = std::to_string(h.edges.size()) + " contexts, " +
                        std::to_string(enumerate_states(h).count()) + " states";
         return Outcome{s == "9 contexts, 0 states", s};
       }},
      {{"c11.peres", 11, "peres24 contexts and states", "24 contexts, 0 states", "paper", false, true},
       [](Cache&) {
         const auto h = peres24().contexts();
         const auto s = std::to_string(h.edges.size()) + " contexts, " +
                        std::to_string(enumerate_states(h).count()) + " states";
         return Outcome{s == "24 contexts, 0 states", s};
       }},
      {{"c11.subsets", 11, "cabello18 and gadget-20 lie inside peres24", "0 and 0 rays outside", "paper", false,
        true},
       [](Cache&) {
         const auto p = peres24();
         const auto a = missing_from(cabello18(), p).size(), b = missing_from(gadget20(), p).size();
         return Outcome{a == 0 && b == 0, std::to_string(a) + " and " + std::to_string(b) + " rays outside"};
       }},
      {{"c11.reconstructions", 11, "every printed reconstruction triple is unique and correct", "6/6", "paper",
        false, true},
       [](Cache&) {
         const auto cab = cabello18(), gad = gadget20();
         int ok = 0;
         std::string bad;
         for (const auto& row : table4_reconstructions()) {
           const auto r = reconstruct_row(row.source == "cabello18" ? cab : gad, row);
           if (r.ok()) {
             ++ok;
           } else {
             bad += " " + row.target + (r.unique() ? " (wrong ray " + r.computed->to_string() + ")"
                                                   : " (complement dimension " + std::to_string(r.complement_dim) + ")");
           }
         }
         return Outcome{ok == 6, std::to_string(ok) + "/6" + (bad.empty() ? "" : "; failing:" + bad)};
       }},
      {{"c11.alternative_triples", 11, "a valid triple exists for every failing reconstruction", "reported",
        "derived", true, false},
       [](Cache&) {
         const auto cab = cabello18(), gad = gadget20();
         std::string out;
         bool all = true;
         for (const auto& row : table4_reconstructions()) {
           const auto& src = row.source == "cabello18" ? cab : gad;
           if (reconstruct_row(src, row).ok()) continue;
           const auto t = constructing_triples(src, row.expected);
           all = all && !t.empty();
           out += (out.empty() ? "" : "; ") + row.target + ": " +
                  (t.empty() ? "none" : "{" + t[0][0] + "," + t[0][1] + "," + t[0][2] + "}");
         }
         return Outcome{all, out.empty() ? "none needed" : out};
       }},
      {{"c11.coverage", 11, "peres24 rays covered by gadget-20, cabello18 and the two constructed rays", "22",
        "paper", true, false},
       [](Cache&) {
         NamedRaySet u = gadget20();
         for (const auto& it : cabello18().items) u.items.push_back({"c:" + it.name, it.v});
         const auto p = peres24();
         const auto missing = missing_from(p, u);
         return Outcome{p.items.size() - missing.size() == 22,
                        std::to_string(p.items.size() - missing.size()) + " (missing " + join(missing) + ")"};
       }},
      // 12
      {{"c12.blocks", 12, "D=5 scaffold and connector blocks at u=(1,1,1,1,1)", "10 + 4 orthogonal", "paper", false,
        true},
       [](Cache&) {
         const auto g = build_gadget5(ones(5));
         int scaffold = 0, conn = 0;
         for (std::size_t b = 0; b < g.blocks.size(); ++b) {
           if (!g.block_orthogonal(g.blocks[b])) continue;
           (g.block_names[b][0] == 'B' ? scaffold : conn)++;
         }
         const auto s = std::to_string(scaffold) + " + " + std::to_string(conn) + " orthogonal";
         return Outcome{s == "10 + 4 orthogonal" && g.blocks.size() == 14, s};
       }},
      {{"c12.forcing", 12, "forcing nullspace of the D=5 connector system", "span{(1,1,1,1,1)}", "paper", false,
        true},
       [](Cache&) {
         const auto ns = forcing_check(5, default_connectors(5));
         return Outcome{all_ones_span(ns, 5), rational_rows(ns)};
       }},
      {{"c12.random_centers", 12, "<v_ijk, u> = 0 for 100 random exact centers", "100/100", "paper", false, true},
       [](Cache&) {
         Rng rng(20251016);
         int ok = 0;
         for (int t = 0; t < 100; ++t) {
           const auto u = random_center(rng, 5);
           bool all = true;
           for (int i = 1; i <= 5; ++i) {
             for (int j = i + 1; j <= 5; ++j) {
               for (int k = j + 1; k <= 5; ++k) all = all && inner(triple_minor5(u, i, j, k), u).is_zero();
             }
           }
           ok += all;
         }
         return Outcome{ok == 100, std::to_string(ok) + "/100"};
       }},
      {{"c12.all_cliques", 12, "5-cliques among the distinct D=5 gadget rays", "reported", "derived", true, false},
       [](Cache&) { return Outcome{true, std::to_string(build_gadget5(ones(5)).all_cliques())}; }},
      // 13
      {{"c13.d3", 13, "C^3 family: pairs unbiased, bases orthogonal", "6/6 pairs, 4/4 bases", "paper", false, true},
       [](Cache&) {
         const auto r = verify_family(mubs3());
         const int bases = static_cast<int>(std::count(r.orthogonal.begin(), r.orthogonal.end(), true));
         const auto s = std::to_string(6 - r.failures.size()) + "/6 pairs, " + std::to_string(bases) + "/4 bases";
         return Outcome{r.all_pass(), s};
       }},
      {{"c13.d3_seed_alias", 13, "seed triples equal the appendix bases under the alias map", "3/3", "paper", false,
        true},
       [](Cache&) {
         const auto f = mubs3();
         int ok = 0;
         for (int g = 1; g <= 3; ++g) {
           const auto& basis = f.basis(f.seed_alias.at("B" + std::to_string(g)));
           bool all = true;
           for (int s = 3 * g - 2; s <= 3 * g; ++s) {
             const auto& v = seed_vectors()[s - 1];
             all = all && std::any_of(basis.begin(), basis.end(), [&](const auto& b) { return collinear(b, v); });
           }
           ok += all;
         }
         return Outcome{ok == 3, std::to_string(ok) + "/3"};
       }},
      {{"c13.d4_orthogonal", 13, "C^4 bases are each orthogonal", "5/5", "paper", false, true},
       [](Cache&) {
         const auto r = verify_family(mubs4());
         const int n = static_cast<int>(std::count(r.orthogonal.begin(), r.orthogonal.end(), true));
         return Outcome{n == 5, std::to_string(n) + "/5"};
       }},
      {{"c13.d4_examples", 13, "(B0,B2) unbiased and (B1,B4) not", "(B0,B2) pass, (B1,B4) fail", "derived", false,
        true},
       [](Cache&) {
         const auto r = verify_family(mubs4());
         const auto s = std::string("(B0,B2) ") + (r.unbiased[0][2] ? "pass" : "fail") + ", (B1,B4) " +
                        (r.unbiased[1][4] ? "pass" : "fail");
         return Outcome{s == "(B0,B2) pass, (B1,B4) fail", s};
       }},
      {{"c13.d4_only_b1b4", 13, "C^4 matrix passes apart from B1 versus B4", "failures: (B1,B4)", "paper", true,
        true},
       [](Cache&) {
         const auto f = mubs4();
         const auto r = verify_family(f);
         std::string s = "failures:";
         for (auto [a, b] : r.failures) s += " (" + f.labels[a] + "," + f.labels[b] + ")";
         return Outcome{s == "failures: (B1,B4)", s};
       }},
      // 14
      {{"c14.oracle", 14, "enumerate_states equals brute_states on random hypergraphs", "200/200", "property",
        false, true},
       [](Cache&) {
         const auto r = oracle_equivalence(7, 200);
         return Outcome{r.pass && r.cases == 200, std::to_string(r.cases) + "/200: " + r.detail};
       }},
      {{"c14.invariance", 14, "counts invariant under rescaling and reordering", "YO, peres24, cabello18", "property",
        false, true},
       [](Cache& c) {
         c.yo();
         const auto a = scaling_permutation_invariance(11, c.yo_atlas->vectors(), 3, 5);
         const auto b = scaling_permutation_invariance(13, peres24().vectors(), 4, 5);
         const auto d = scaling_permutation_invariance(17, cabello18().vectors(), 4, 5);
         const bool pass = a.pass && b.pass && d.pass;
         return Outcome{pass, pass ? "YO, peres24, cabello18" : a.detail + "; " + b.detail + "; " + d.detail};
       }},
      {{"c14.partition", 14, "partition property and separating <=> injective on YO and B10", "YO, B10", "property",
        false, true},
       [](Cache& c) {
         const auto a = partition_checks(c.yo());
         const auto b = partition_checks(fixture_b10());
         return Outcome{a.pass && b.pass, a.pass && b.pass ? "YO, B10" : a.detail + "; " + b.detail};
       }},
  };
  return list;
}

}  // namespace

const std::vector<ManifestEntry>& report_manifest() {
  static const std::vector<ManifestEntry> m = [] {
    std::vector<ManifestEntry> out;
    for (const auto& s : specs()) out.push_back(s.entry);
    return out;
  }();
  return m;
}

bool ReportCard::overall() const {
  for (const auto& c : checks) {
    if (!c.entry.informational && !c.pass) return false;
  }
  for (const auto& c : criteria) {
    if (c.seconds > c.budget_seconds) return false;
  }
  return true;
}

nlohmann::json ReportCard::to_json(bool with_timings) const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"id", c.entry.id},
                        {"criterion", c.entry.criterion},
                        {"description", c.entry.description},
                        {"expected", c.entry.expected},
                        {"computed", c.computed},
                        {"provenance", c.entry.provenance},
                        {"informational", c.entry.informational},
                        {"pass", c.pass}};
    if (with_timings) j["seconds"] = c.seconds;
    cs.push_back(j);
  }
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& c : criteria) {
    nlohmann::json j = {{"criterion", c.criterion}, {"title", c.title}, {"pass", c.pass}};
    if (with_timings) {
      j["seconds"] = c.seconds;
      j["budget_seconds"] = c.budget_seconds;
    }
    crit.push_back(j);
  }
  return {{"manifest", manifest_version}, {"checks", cs}, {"criteria", crit}, {"overall", overall()}};
}

ReportCard run_report() {
  ReportCard card;
  Cache cache;
  for (const auto& s : specs()) {
    Check c;
    c.entry = s.entry;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto o = s.eval(cache);
      c.pass = o.pass;
      c.computed = o.computed;
    } catch (const std::exception& e) {
      c.pass = false;
      c.computed = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    card.checks.push_back(std::move(c));
  }
  for (const auto& info : criteria_info()) {
    CriterionSummary s{info.id, info.title, info.budget, 0, true};
    for (const auto& c : card.checks) {
      if (c.entry.criterion != info.id) continue;
      s.seconds += c.seconds;
      if (c.entry.acceptance && !c.pass) s.pass = false;
    }
    if (s.seconds > s.budget_seconds) s.pass = false;
    card.criteria.push_back(s);
  }
  return card;
}

}  // namespace ksf
