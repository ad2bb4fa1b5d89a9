#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tiling/report.hpp"

namespace {

using tiling::RunConfig;
using tiling::RunResult;

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitPrecision = 4;

std::array<std::string, 6> split_angles(const std::string& csv) {
  std::array<std::string, 6> out;
  size_t start = 0;
  int n = 0;
  while (true) {
    size_t comma = csv.find(',', start);
    std::string piece = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (n == 6)
      throw tiling::ParseError("expected six comma-separated angles: " + csv);
    out[n++] = piece;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (n != 6)
    throw tiling::ParseError("expected six comma-separated angles: " + csv);
  return out;
}

int emit(const RunResult& result, const RunConfig& config,
         const std::string& output_path) {
  std::string text = tiling::render_report(result.report, config.format);
  if (output_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw tiling::ParseError("cannot write " + output_path);
    out << text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-out analysis for tetrahedra with rational dihedral "
               "angles: which cannot tile space"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  long precision = 64;
  long max_precision = 1024;
  std::string crtn_mode = "generalized";
  std::string normalization = "max-edge";
  std::string output_path;

  app.add_option("--precision", precision, "Working interval precision, bits")
      ->check(CLI::Range(16L, 1L << 20));
  app.add_option("--max-precision", max_precision,
                 "Precision escalation cap, bits")
      ->check(CLI::Range(16L, 1L << 20));
  app.add_option("--lp-round-denominator", config.analysis.lp_round_denominator,
                 "Denominator for rounding certificate entries")
      ->check(CLI::Range(1L, 1000000000L));
  app.add_option("--crtn-mode", crtn_mode,
                 "Support test for the non-face-to-face criterion")
      ->check(CLI::IsMember({"strict", "generalized"}));
  app.add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--normalization", normalization, "Edge-length scale")
      ->check(CLI::IsMember({"max-edge", "unit-volume"}));
  app.add_flag("--strict-numerics", config.analysis.strict_numerics,
               "Turn precision exhaustion into a hard error");
  app.add_flag("--timings", config.timings, "Include wall-clock timings");
  app.add_option("--output", output_path, "Write the report here");

  auto* cmd_analyze = app.add_subcommand(
      "analyze", "Analyze one tuple or every entry of a catalog file");
  std::string angles_csv;
  std::string analyze_file;
  cmd_analyze->add_option("--angles", angles_csv,
                          "Six dihedral angles p/q (times pi), slot order "
                          "12,34,13,24,14,23");
  cmd_analyze->add_option("--file", analyze_file, "Catalog JSON file");

  auto* cmd_catalog = app.add_subcommand(
      "catalog", "Analyze a built-in dataset (A40, EXTRA2, SPECIFIC23) "
                 "or a catalog file");
  std::string catalog_source;
  cmd_catalog->add_option("source", catalog_source, "Dataset tag or path")
      ->required();

  auto* cmd_families = app.add_subcommand("families", "Family enumerations");
  cmd_families->require_subcommand(1);
  auto* fam_gen = cmd_families->add_subcommand(
      "gen", "Combinations valid across the whole family");
  auto* fam_spe = cmd_families->add_subcommand(
      "spe", "The 23 specific members");
  auto* fam_scan = cmd_families->add_subcommand(
      "scan", "Analyze sampled family members against known verdicts");
  fam_scan->add_option("--samples", config.samples,
                       "Random general members to analyze")
      ->check(CLI::Range(0, 10000));
  fam_scan->add_option("--f1-samples", config.f1_samples,
                       "First-family members to analyze")
      ->check(CLI::Range(0, 10000));
  fam_scan->add_option("--seed", config.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  config.analysis.numerics.precision = precision;
  config.analysis.numerics.max_precision = std::max(max_precision, precision);
  config.analysis.mode = crtn_mode == "strict" ? tiling::CrtnMode::Strict
                                               : tiling::CrtnMode::Generalized;
  config.analysis.normalization = normalization == "unit-volume"
                                      ? tiling::Normalization::UnitVolume
                                      : tiling::Normalization::MaxEdge;

  try {
    RunResult result;
    if (*cmd_analyze) {
      if (angles_csv.empty() == analyze_file.empty())
        throw tiling::ParseError(
            "analyze needs exactly one of --angles or --file");
      result = angles_csv.empty()
                   ? tiling::run_analyze_file(analyze_file, config)
                   : tiling::run_analyze_angles(split_angles(angles_csv),
                                                config);
    } else if (*cmd_catalog) {
      if (catalog_source == "A40" || catalog_source == "EXTRA2" ||
          catalog_source == "SPECIFIC23") {
        result = tiling::run_catalog_tag(
            tiling::parse_source_tag(catalog_source), config);
      } else {
        result = tiling::run_catalog_file(catalog_source, config);
      }
    } else if (*fam_gen) {
      result = tiling::run_families_gen(config);
    } else if (*fam_spe) {
      result = tiling::run_families_spe(config);
    } else if (*fam_scan) {
      result = tiling::run_families_scan(config);
    } else {
      return kExitParse;
    }
    return emit(result, config, output_path);
  } catch (const tiling::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const tiling::OutOfRangeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const tiling::InvalidGeometryError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitGeometry;
  } catch (const tiling::PrecisionExhaustedError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitPrecision;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 70;
  }
  return 0;
}
