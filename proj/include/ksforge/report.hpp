#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ksf {

inline constexpr const char* kManifestVersion = "ksforge-report/1";

/// One frozen entry of the check manifest.
struct ManifestEntry {
  const char* id;
  int criterion;
  const char* description;
  const char* expected;
  const char* provenance;  ///< "paper", "derived", "property" or "trivial"
  /// Does not affect the report card's overall status.
  bool informational;
  /// Counts towards its acceptance criterion.
  bool acceptance;
};

const std::vector<ManifestEntry>& report_manifest();

struct Check {
  ManifestEntry entry;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct CriterionSummary {
  int criterion = 0;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  bool pass = false;
};

struct ReportCard {
  std::string manifest_version = kManifestVersion;
  std::vector<Check> checks;
  std::vector<CriterionSummary> criteria;

  /// Every non-informational check passed within its criterion's time budget.
  bool overall() const;
  nlohmann::json to_json(bool with_timings = false) const;
};

ReportCard run_report();

}  // namespace ksf
