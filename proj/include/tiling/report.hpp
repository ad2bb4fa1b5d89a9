#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "tiling/catalog.hpp"
#include "tiling/criteria.hpp"

namespace tiling {

// One run's worth of CLI-level settings on top of AnalysisConfig.
struct RunConfig {
  AnalysisConfig analysis;
  std::string format = "json";  // json | csv | md
  bool timings = false;
  int samples = 50;      // families scan: general members
  int f1_samples = 20;   // families scan: first-family members
  unsigned long seed = 7;
};

struct RunResult {
  nlohmann::ordered_json report;
  // 0 ok; 1 expected-verdict mismatch; parse/geometry/precision failures
  // surface as exceptions and are mapped by the CLI.
  int exit_code = 0;
};

// Single tuple given as six "p/q" strings; the report carries one entry.
RunResult run_analyze_angles(const std::array<std::string, kNumEdges>& fracs,
                             const RunConfig& config);
// Analyze every entry of a catalog file (no expectations attached).
RunResult run_analyze_file(const std::string& path, const RunConfig& config);

RunResult run_catalog_tag(SourceTag tag, const RunConfig& config);
RunResult run_catalog_file(const std::string& path, const RunConfig& config);

RunResult run_families_gen(const RunConfig& config);
RunResult run_families_spe(const RunConfig& config);
// Seeded random general members (expected DoesNotTile) plus first-family
// members (expected Inconclusive), analyzed like a catalog.
RunResult run_families_scan(const RunConfig& config);

// Renders a report in the requested format: "json" is the report itself,
// "csv" one row per entry with evidence elided, "md" a human summary.
std::string render_report(const nlohmann::ordered_json& report,
                          const std::string& format);

// Full per-tetrahedron record as embedded in reports (exposed for tests).
nlohmann::ordered_json entry_record(const std::string& id, const Analysis& a,
                                    const std::optional<Aggregate>& expected);

}  // namespace tiling
