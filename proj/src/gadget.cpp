#include "ksforge/gadget.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ksforge/contexts.hpp"
#include "ksforge/errors.hpp"
#include "ksforge/linalg.hpp"

namespace ksf {

namespace {

std::string digits(std::initializer_list<int> idx) {
  std::string s;
  for (int i : idx) s += std::to_string(i);
  return s;
}

void check_center(const CycloVector& u, int dim) {
  if (static_cast<int>(u.dim()) != dim) {
    throw InvalidInput("center must have dimension " + std::to_string(dim));
  }
  for (const auto& x : u) {
    if (x.is_zero()) throw InvalidInput("center entries must be nonzero");
  }
}

void check_pair(int i, int j) {
  if (!(1 <= i && i < j && j <= 4)) throw InvalidInput("pair indices must satisfy 1 <= i < j <= 4");
}

void check_triple(int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= 5)) throw InvalidInput("triple indices must satisfy 1 <= i < j < k <= 5");
}

std::vector<int> complement(int dim, std::initializer_list<int> taken) {
  std::vector<int> out;
  for (int p = 1; p <= dim; ++p) {
    if (std::find(taken.begin(), taken.end(), p) == taken.end()) out.push_back(p);
  }
  return out;
}

CycloVector real_vector(std::initializer_list<long long> xs) {
  std::vector<CycloNum> v;
  for (long long x : xs) v.emplace_back(x);
  return CycloVector(std::move(v));
}

}  // namespace

const CycloVector& NamedRaySet::at(const std::string& name) const {
  for (const auto& it : items) {
    if (it.name == name) return it.v;
  }
  throw InvalidInput("unknown vector name " + name);
}

bool NamedRaySet::has(const std::string& name) const {
  return std::any_of(items.begin(), items.end(), [&](const auto& it) { return it.name == name; });
}

std::vector<CycloVector> NamedRaySet::vectors() const {
  std::vector<CycloVector> out;
  for (const auto& it : items) out.push_back(it.v);
  return out;
}

std::optional<std::string> NamedRaySet::find_ray(const CycloVector& v) const {
  for (const auto& it : items) {
    if (collinear(it.v, v)) return it.name;
  }
  return std::nullopt;
}

ContextHypergraph NamedRaySet::contexts() const {
  const auto vs = vectors();
  ContextHypergraph h = enumerate_contexts(std::span<const CycloVector>(vs), dimension);
  for (std::size_t i = 0; i < items.size(); ++i) h.labels[static_cast<int>(i)] = items[i].name;
  return h;
}

SymVector sym_pair_minor(int i, int j) {
  check_pair(i, j);
  SymVector v = SymVector::zero(4);
  for (int m = 1; m <= 4; ++m) {
    for (int l = 1; l <= 4; ++l) {
      const int s = levi_civita({m, i, j, l});
      if (s) v.add(m - 1, s, l - 1, true);
    }
  }
  return v;
}

SymVector sym_pair_complement(int i, int j) {
  check_pair(i, j);
  SymVector v = SymVector::zero(4);
  for (int p : complement(4, {i, j})) v.add(p - 1, 1, p - 1, false);
  return v;
}

std::array<SymVector, 3> sym_connectors4() {
  const std::array<std::array<int, 4>, 3> signs = {{{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  std::array<SymVector, 3> out;
  for (int c = 0; c < 3; ++c) {
    out[c] = SymVector::zero(4);
    for (int m = 0; m < 4; ++m) out[c].add(m, signs[c][m], m, false);
  }
  return out;
}

SymVector sym_triple_minor5(int i, int j, int k) {
  check_triple(i, j, k);
  SymVector v = SymVector::zero(5);
  for (int m = 1; m <= 5; ++m) {
    for (int l = 1; l <= 5; ++l) {
      const int s = levi_civita({m, i, j, k, l});
      if (s) v.add(m - 1, s, l - 1, true);
    }
  }
  return v;
}

SymVector sym_triple_complement5(int i, int j, int k) {
  check_triple(i, j, k);
  SymVector v = SymVector::zero(5);
  for (int p : complement(5, {i, j, k})) v.add(p - 1, 1, p - 1, false);
  return v;
}

SymVector sym_connector5(int i) {
  if (i < 1 || i > 4) throw InvalidInput("connector index must be in 1..4");
  SymVector v = SymVector::zero(5);
  v.add(i - 1, 1, i - 1, false);
  v.add(4, -1, 4, false);
  return v;
}

CycloVector pair_minor(const CycloVector& u, int i, int j) {
  check_center(u, 4);
  return sym_pair_minor(i, j).evaluate(u);
}

CycloVector pair_complement(const CycloVector& u, int i, int j) {
  check_center(u, 4);
  return sym_pair_complement(i, j).evaluate(u);
}

std::array<CycloVector, 3> connectors4(const CycloVector& u) {
  if (u.dim() != 4) throw InvalidInput("connectors4 needs a 4-dimensional center");
  const auto sym = sym_connectors4();
  return {sym[0].evaluate(u), sym[1].evaluate(u), sym[2].evaluate(u)};
}

CycloVector triple_minor5(const CycloVector& u, int i, int j, int k) {
  check_center(u, 5);
  return sym_triple_minor5(i, j, k).evaluate(u);
}

CycloVector triple_complement5(const CycloVector& u, int i, int j, int k) {
  check_center(u, 5);
  return sym_triple_complement5(i, j, k).evaluate(u);
}

CycloVector connector5(const CycloVector& u, int i) {
  check_center(u, 5);
  return sym_connector5(i).evaluate(u);
}

bool equal_moduli(const CycloVector& u) {
  if (u.dim() == 0) return true;
  const CycloNum m0 = u[0] * u[0].conj();
  return std::all_of(u.begin(), u.end(), [&](const CycloNum& x) { return x * x.conj() == m0; });
}

ContextHypergraph GadgetBlocks::hypergraph() const {
  std::map<std::string, int> index;
  ContextHypergraph h;
  h.dimension = dimension;
  for (std::size_t i = 0; i < vectors.items.size(); ++i) {
    const int id = static_cast<int>(i);
    index[vectors.items[i].name] = id;
    h.vertices.push_back(id);
    h.vectors.emplace(id, vectors.items[i].v);
    h.labels[id] = vectors.items[i].name;
  }
  for (const auto& b : blocks) {
    Edge e;
    for (const auto& name : b) e.push_back(index.at(name));
    h.edges.push_back(std::move(e));
  }
  h.normalize();
  h.validate();
  h.meta["source"] = "gadget" + std::to_string(dimension);
  return h;
}

bool GadgetBlocks::block_orthogonal(const std::vector<std::string>& block) const {
  for (std::size_t a = 0; a < block.size(); ++a) {
    for (std::size_t b = a + 1; b < block.size(); ++b) {
      if (!orthogonal(vectors.at(block[a]), vectors.at(block[b]))) return false;
    }
  }
  return true;
}

bool GadgetBlocks::all_blocks_orthogonal() const {
  return std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) { return block_orthogonal(b); });
}

std::size_t GadgetBlocks::all_cliques() const {
  std::vector<CycloVector> distinct;
  for (const auto& it : vectors.items) {
    bool dup = std::any_of(distinct.begin(), distinct.end(), [&](const auto& d) { return collinear(d, it.v); });
    if (!dup) distinct.push_back(it.v);
  }
  return enumerate_contexts(std::span<const CycloVector>(distinct), dimension).edges.size();
}

GadgetBlocks build_gadget4(const CycloVector& u) {
  check_center(u, 4);
  if (!equal_moduli(u)) {
    throw ForcingPreconditionFailed("connector blocks need |x1|^2 = |x2|^2 = |x3|^2 = |x4|^2");
  }
  GadgetBlocks g;
  g.dimension = 4;
  g.center = u;
  g.vectors.dimension = 4;
  auto& items = g.vectors.items;
  items.push_back({"u", u});
  for (int i = 1; i <= 4; ++i) items.push_back({"e" + std::to_string(i), CycloVector::unit(4, i)});
  const std::array<std::pair<int, int>, 6> pairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  for (auto [i, j] : pairs) items.push_back({"v" + digits({i, j}), pair_minor(u, i, j)});
  for (auto [i, j] : pairs) items.push_back({"w" + digits({i, j}), pair_complement(u, i, j)});
  const auto conn = connectors4(u);
  items.push_back({"v1234", conn[0]});
  items.push_back({"v1324", conn[1]});
  items.push_back({"v1423", conn[2]});

  g.block_names.push_back("computational");
  g.blocks.push_back({"e1", "e2", "e3", "e4"});
  for (auto [i, j] : pairs) {
    const std::string ij = digits({i, j});
    g.block_names.push_back("pair" + ij);
    g.blocks.push_back({"e" + std::to_string(i), "e" + std::to_string(j), "v" + ij, "w" + ij});
  }
  g.block_names.insert(g.block_names.end(), {"C_a", "C_b", "C_c"});
  g.blocks.push_back({"u", "v1234", "v34", "v12"});
  g.blocks.push_back({"u", "v1324", "v24", "v13"});
  g.blocks.push_back({"u", "v1423", "v23", "v14"});
  g.block_names.insert(g.block_names.end(), {"hidden1234", "hidden1324", "hidden1423"});
  g.blocks.push_back({"v12", "w12", "v34", "w34"});
  g.blocks.push_back({"v13", "w13", "v24", "w24"});
  g.blocks.push_back({"v14", "w14", "v23", "w23"});
  if (!g.all_blocks_orthogonal()) throw InternalError("D=4 gadget block failed orthogonality");
  return g;
}

GadgetBlocks build_gadget5(const CycloVector& u) {
  check_center(u, 5);
  if (!equal_moduli(u)) throw ForcingPreconditionFailed("connector blocks need |x1|^2 = ... = |x5|^2");
  GadgetBlocks g;
  g.dimension = 5;
  g.center = u;
  g.vectors.dimension = 5;
  auto& items = g.vectors.items;
  items.push_back({"u", u});
  for (int i = 1; i <= 5; ++i) items.push_back({"e" + std::to_string(i), CycloVector::unit(5, i)});
  std::vector<std::array<int, 3>> triples;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      for (int k = j + 1; k <= 5; ++k) triples.push_back({i, j, k});
    }
  }
  for (auto [i, j, k] : triples) items.push_back({"v" + digits({i, j, k}), triple_minor5(u, i, j, k)});
  for (auto [i, j, k] : triples) items.push_back({"w" + digits({i, j, k}), triple_complement5(u, i, j, k)});
  for (auto [i, j, k] : triples) {
    const std::string ijk = digits({i, j, k});
    g.block_names.push_back("B" + ijk);
    g.blocks.push_back({"e" + std::to_string(i), "e" + std::to_string(j), "e" + std::to_string(k), "v" + ijk,
                        "w" + ijk});
  }
  for (int i = 1; i <= 4; ++i) {
    const CycloVector gi = connector5(u, i);
    const std::string gname = "g" + std::to_string(i);
    items.push_back({gname, gi});
    // Orthogonal complement of span{u, g_i}, then exact Gram-Schmidt.
    linalg::Matrix<CycloNum> rows = {u.conj().entries(), gi.conj().entries()};
    auto basis = linalg::nullspace(std::move(rows), 5);
    if (basis.size() != 3) throw InternalError("connector complement is not 3-dimensional");
    std::vector<CycloVector> hs;
    for (auto& b : basis) {
      CycloVector h(std::move(b));
      for (const auto& prev : hs) {
        const CycloNum f = inner(prev, h) / norm_sq(prev);
        for (std::size_t m = 0; m < 5; ++m) h[m] -= f * prev[m];
      }
      hs.push_back(canonicalize(h).pretty);
    }
    std::vector<std::string> block = {"u", gname};
    for (int a = 0; a < 3; ++a) {
      const std::string hname = "h" + std::to_string(i) + static_cast<char>('a' + a);
      items.push_back({hname, hs[a]});
      block.push_back(hname);
    }
    g.block_names.push_back("C" + std::to_string(i));
    g.blocks.push_back(std::move(block));
  }
  if (!g.all_blocks_orthogonal()) throw InternalError("D=5 gadget block failed orthogonality");
  return g;
}

std::vector<std::string> emergent_block4() { return {"w14", "w23", "v1234", "v1324"}; }

std::vector<std::vector<Rational>> ModuliSystem::nullspace() const {
  return linalg::nullspace(equations, static_cast<std::size_t>(dimension));
}

std::vector<std::pair<std::string, SymVector>> default_connectors(int dimension) {
  std::vector<std::pair<std::string, SymVector>> out;
  if (dimension == 4) {
    const auto c = sym_connectors4();
    out = {{"v1234", c[0]}, {"v1324", c[1]}, {"v1423", c[2]}};
  } else if (dimension == 5) {
    for (int i = 1; i <= 4; ++i) out.emplace_back("g" + std::to_string(i), sym_connector5(i));
  } else {
    throw InvalidInput("forcing gadgets exist for D = 4 and D = 5 only");
  }
  return out;
}

ModuliSystem moduli_system(int dimension, std::span<const std::pair<std::string, SymVector>> connectors) {
  ModuliSystem sys;
  sys.dimension = dimension;
  const SymVector u = SymVector::center(dimension);
  for (const auto& [name, c] : connectors) {
    if (c.dim() != dimension) throw InvalidInput("connector " + name + " has the wrong dimension");
    sys.sources.push_back(name);
    sys.equations.push_back(sym_inner(u, c).moduli_coeffs(dimension));
  }
  return sys;
}

std::vector<std::vector<Rational>> forcing_check(int dimension,
                                                 std::span<const std::pair<std::string, SymVector>> connectors) {
  return moduli_system(dimension, connectors).nullspace();
}

NamedRaySet peres24() {
  NamedRaySet s;
  s.dimension = 4;
  for (int i = 1; i <= 4; ++i) s.items.push_back({"e" + std::to_string(i), CycloVector::unit(4, i)});
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      for (int sign : {1, -1}) {
        std::vector<CycloNum> v(4);
        v[i - 1] = 1;
        v[j - 1] = sign;
        s.items.push_back({"p" + digits({i, j}) + (sign > 0 ? "+" : "-"), CycloVector(std::move(v))});
      }
    }
  }
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<CycloNum> v = {1, 1, 1, 1};
    std::string name = "q";
    for (int b = 0; b < 3; ++b) {
      const bool neg = mask >> (2 - b) & 1;
      v[b + 1] = neg ? -1 : 1;
      name += neg ? '-' : '+';
    }
    s.items.push_back({name, CycloVector(std::move(v))});
  }
  return s;
}

NamedRaySet cabello18() {
  NamedRaySet s;
  s.dimension = 4;
  s.items = {
      {"v56", real_vector({1, 1, 1, 1})},   {"v12", real_vector({1, 0, 0, 0})},
      {"v18", real_vector({0, 1, 0, 0})},   {"v28", real_vector({0, 0, 0, 1})},
      {"v16", real_vector({0, 0, 1, -1})},  {"v45", real_vector({0, 1, 0, -1})},
      {"v23", real_vector({0, 1, -1, 0})},  {"v58", real_vector({1, 0, -1, 0})},
      {"v67", real_vector({1, -1, 0, 0})},  {"v17", real_vector({0, 0, 1, 1})},
      {"v29", real_vector({0, 1, 1, 0})},   {"v39", real_vector({1, 0, 0, 1})},
      {"v48", real_vector({1, 0, 1, 0})},   {"v69", real_vector({1, 1, -1, -1})},
      {"v59", real_vector({1, -1, 1, -1})}, {"v47", real_vector({1, 1, -1, 1})},
      {"v34", real_vector({-1, 1, 1, 1})},  {"v37", real_vector({1, 1, 1, -1})},
  };
  return s;
}

NamedRaySet gadget20() { return build_gadget4(real_vector({1, 1, 1, 1})).vectors; }

std::vector<Reconstruction> table4_reconstructions() {
  return {
      {"e3", "cabello18", {"v12", "v18", "v28"}, real_vector({0, 0, 1, 0})},
      {"v23", "cabello18", {"v18", "v23", "v29"}, real_vector({1, 0, 0, -1})},
      {"w13", "cabello18", {"v12", "v23", "v58"}, real_vector({0, 1, 0, 1})},
      {"w34", "cabello18", {"v16", "v17", "v28"}, real_vector({1, 1, 0, 0})},
      {"v34", "gadget20", {"v12", "v13", "w34"}, real_vector({-1, 1, 1, 1})},
      {"v37", "gadget20", {"v14", "v24", "w23"}, real_vector({1, 1, 1, -1})},
  };
}

ReconstructionOutcome reconstruct_row(const NamedRaySet& source, const Reconstruction& row) {
  ReconstructionOutcome out;
  out.row = row;
  linalg::Matrix<CycloNum> rows;
  for (const auto& name : row.triple) rows.push_back(source.at(name).conj().entries());
  auto basis = linalg::nullspace(std::move(rows), static_cast<std::size_t>(source.dimension));
  out.complement_dim = static_cast<int>(basis.size());
  if (out.complement_dim == 1) {
    out.computed = canonicalize(CycloVector(std::move(basis.front()))).pretty;
    out.correct = collinear(*out.computed, row.expected);
  }
  return out;
}

std::vector<CycloVector> reconstruct_missing(const NamedRaySet& source, std::span<const Reconstruction> rows) {
  std::vector<CycloVector> out;
  for (const auto& row : rows) {
    const auto r = reconstruct_row(source, row);
    const std::string triple = "{" + row.triple[0] + ", " + row.triple[1] + ", " + row.triple[2] + "}";
    if (!r.unique()) {
      throw ReconstructionFailure(triple + " is linearly dependent; its complement has dimension " +
                                  std::to_string(r.complement_dim));
    }
    if (!r.correct) {
      throw ReconstructionFailure(triple + " yields " + r.computed->to_string() + ", not " + row.target + " = " +
                                  row.expected.to_string());
    }
    out.push_back(*r.computed);
  }
  return out;
}

std::vector<std::array<std::string, 3>> constructing_triples(const NamedRaySet& source, const CycloVector& target) {
  std::vector<std::array<std::string, 3>> out;
  const auto& it = source.items;
  for (std::size_t a = 0; a < it.size(); ++a) {
    if (!orthogonal(it[a].v, target)) continue;
    for (std::size_t b = a + 1; b < it.size(); ++b) {
      if (!orthogonal(it[b].v, target)) continue;
      for (std::size_t c = b + 1; c < it.size(); ++c) {
        if (!orthogonal(it[c].v, target)) continue;
        Reconstruction row{"", "", {it[a].name, it[b].name, it[c].name}, target};
        if (reconstruct_row(source, row).ok()) out.push_back(row.triple);
      }
    }
  }
  return out;
}

std::vector<std::string> missing_from(const NamedRaySet& sub, const NamedRaySet& super) {
  std::vector<std::string> out;
  for (const auto& it : sub.items) {
    if (!super.find_ray(it.v)) out.push_back(it.name);
  }
  return out;
}

}  // namespace ksf
