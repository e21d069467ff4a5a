#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ksforge/cyclo.hpp"
#include "ksforge/hypergraph.hpp"
#include "ksforge/symbolic.hpp"
#include "ksforge/vector.hpp"

namespace ksf {

struct NamedVector {
  std::string name;
  CycloVector v;
};

/// Labelled vectors in C^D; names are unique.
struct NamedRaySet {
  int dimension = 0;
  std::vector<NamedVector> items;

  const CycloVector& at(const std::string& name) const;
  bool has(const std::string& name) const;
  std::vector<CycloVector> vectors() const;
  /// Name of the first member collinear with v.
  std::optional<std::string> find_ray(const CycloVector& v) const;
  /// All D-cliques of the orthogonality graph, vertex i = items[i].
  ContextHypergraph contexts() const;
};

// Symbolic building blocks, indices 1-based.
SymVector sym_pair_minor(int i, int j);
SymVector sym_pair_complement(int i, int j);
/// v1234, v1324, v1423.
std::array<SymVector, 3> sym_connectors4();
SymVector sym_triple_minor5(int i, int j, int k);
SymVector sym_triple_complement5(int i, int j, int k);
/// g_i = x_i e_i - x_5 e_5.
SymVector sym_connector5(int i);

CycloVector pair_minor(const CycloVector& u, int i, int j);
CycloVector pair_complement(const CycloVector& u, int i, int j);
std::array<CycloVector, 3> connectors4(const CycloVector& u);
CycloVector triple_minor5(const CycloVector& u, int i, int j, int k);
CycloVector triple_complement5(const CycloVector& u, int i, int j, int k);
CycloVector connector5(const CycloVector& u, int i);

bool equal_moduli(const CycloVector& u);

struct GadgetBlocks {
  int dimension = 0;
  CycloVector center;
  NamedRaySet vectors;
  std::vector<std::string> block_names;
  std::vector<std::vector<std::string>> blocks;

  /// Constructed blocks as edges; vertex i = vectors.items[i].
  ContextHypergraph hypergraph() const;
  bool block_orthogonal(const std::vector<std::string>& block) const;
  bool all_blocks_orthogonal() const;
  /// Number of D-cliques among the distinct rays of the vector list.
  std::size_t all_cliques() const;
};

/// 20 vectors, 13 blocks. Throws InvalidInput for zero entries and
/// ForcingPreconditionFailed for unequal moduli.
GadgetBlocks build_gadget4(const CycloVector& u);
/// 10 scaffold blocks {e_i,e_j,e_k,v_ijk,w_ijk} and 4 connector blocks {u,g_i,h,h,h}.
GadgetBlocks build_gadget5(const CycloVector& u);

/// The extra tetrad shown alongside the D=4 gadget.
std::vector<std::string> emergent_block4();

/// Homogeneous linear relations among the squared moduli m_1..m_D.
struct ModuliSystem {
  int dimension = 0;
  std::vector<std::string> sources;
  std::vector<std::vector<Rational>> equations;

  std::vector<std::vector<Rational>> nullspace() const;
};

std::vector<std::pair<std::string, SymVector>> default_connectors(int dimension);
/// One equation <u, c> = 0 per connector c.
ModuliSystem moduli_system(int dimension, std::span<const std::pair<std::string, SymVector>> connectors);
std::vector<std::vector<Rational>> forcing_check(int dimension,
                                                 std::span<const std::pair<std::string, SymVector>> connectors);

NamedRaySet peres24();
NamedRaySet cabello18();
/// The vector list of build_gadget4((1,1,1,1)).
NamedRaySet gadget20();

struct Reconstruction {
  std::string target;
  std::string source;  ///< "cabello18" or "gadget20"
  std::array<std::string, 3> triple;
  CycloVector expected;
};

/// The six "constructed" rows of the gadget/Cabello correspondence table, as printed.
std::vector<Reconstruction> table4_reconstructions();

struct ReconstructionOutcome {
  Reconstruction row;
  int complement_dim = 0;
  std::optional<CycloVector> computed;
  bool unique() const { return complement_dim == 1; }
  bool correct = false;
  bool ok() const { return unique() && correct; }
};

ReconstructionOutcome reconstruct_row(const NamedRaySet& source, const Reconstruction& row);
/// Throws ReconstructionFailure on a dependent triple or a wrong target.
std::vector<CycloVector> reconstruct_missing(const NamedRaySet& source, std::span<const Reconstruction> rows);
/// Triples of the source whose complement is exactly the target ray.
std::vector<std::array<std::string, 3>> constructing_triples(const NamedRaySet& source, const CycloVector& target);

/// Names in `sub` with no collinear member in `super`.
std::vector<std::string> missing_from(const NamedRaySet& sub, const NamedRaySet& super);

}  // namespace ksf
