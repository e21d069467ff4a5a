#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ksforge/vector.hpp"

namespace ksf {

/// Printed (unnormalized) mutually unbiased bases B0..BD.
struct MubFamily {
  int dimension = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<CycloVector>> bases;
  /// Seed-section basis label -> appendix label. The seed section numbers the
  /// two non-Fourier bases of C^3 the other way round.
  std::map<std::string, std::string> seed_alias;

  const std::vector<CycloVector>& basis(const std::string& label) const;
};

MubFamily mubs3();
MubFamily mubs4();

struct MubVerification {
  /// unbiased[j][k] for j != k; the diagonal is true.
  std::vector<std::vector<bool>> unbiased;
  std::vector<bool> orthogonal;
  /// Unordered failing pairs (j < k).
  std::vector<std::pair<int, int>> failures;

  bool all_pass() const;
};

MubVerification verify_family(const MubFamily& f);

}  // namespace ksf
