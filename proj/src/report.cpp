#include "tiling/report.hpp"

#include <atomic>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "tiling/families.hpp"

namespace tiling {

namespace {

using nlohmann::ordered_json;

constexpr std::array<const char*, kNumEdges> kSlotNames = {"12", "34", "13",
                                                           "24", "14", "23"};

ordered_json interval_json(const Interval& v) {
  return {{"lo", v.lo_str(24)}, {"hi", v.hi_str(24)}};
}

ordered_json combination_list(const std::vector<Combination>& list) {
  ordered_json out = ordered_json::array();
  for (const auto& c : list) {
    ordered_json row = ordered_json::array();
    for (long k : c.coeffs) row.push_back(k);
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json nff_json(const NonFaceToFaceResult& r) {
  ordered_json out;
  out["status"] = criterion_status_name(r.status);
  out["condition"] = r.condition;
  if (r.pair)
    out["opposite_pair"] = *r.pair;
  else
    out["opposite_pair"] = nullptr;
  return out;
}

ordered_json certificate_json(const FarkasCertificate& c) {
  ordered_json y = ordered_json::array();
  for (const auto& v : c.y) y.push_back(v.get_str());
  return {{"y", std::move(y)},
          {"objective", c.objective.get_str()},
          {"margin", c.margin.get_str()},
          {"precision", static_cast<long>(c.precision)}};
}

long long now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Deterministic worklist runner: entry i's analysis lands in slot i no
// matter which thread computes it.
std::vector<Analysis> analyze_all(const std::vector<CatalogEntry>& entries,
                                  const AnalysisConfig& cfg,
                                  std::vector<long long>* entry_ms) {
  const size_t n = entries.size();
  std::vector<std::optional<Analysis>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  if (entry_ms) entry_ms->assign(n, 0);
  std::atomic<size_t> next{0};
  auto work = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      long long t0 = now_ms();
      try {
        slots[i].emplace(analyze(entries[i].tetrahedron(), cfg));
      } catch (...) {
        errors[i] = std::current_exception();
      }
      if (entry_ms) (*entry_ms)[i] = now_ms() - t0;
    }
  };
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (n < workers) workers = static_cast<unsigned>(n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (size_t i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  std::vector<Analysis> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

ordered_json base_report(const std::string& command, ordered_json input,
                         const RunConfig& cfg) {
  ordered_json r;
  r["schema"] = "tetratile-report/1";
  r["command"] = command;
  ordered_json c;
  c["precision"] = static_cast<long>(cfg.analysis.numerics.precision);
  c["max_precision"] = static_cast<long>(cfg.analysis.numerics.max_precision);
  c["lp_round_denominator"] = cfg.analysis.lp_round_denominator;
  c["crtn_mode"] = crtn_mode_name(cfg.analysis.mode);
  c["normalization"] = normalization_name(cfg.analysis.normalization);
  c["strict_numerics"] = cfg.analysis.strict_numerics;
  c["input"] = std::move(input);
  r["config"] = std::move(c);
  return r;
}

struct Tally {
  int does_not_tile = 0;
  int inconclusive = 0;
  int by_angle_criteria = 0;
  int by_lp_only = 0;
  int mismatches = 0;
};

void tally_entry(Tally& t, const Analysis& a,
                 const std::optional<Aggregate>& expected) {
  if (a.aggregate == Aggregate::DoesNotTile)
    ++t.does_not_tile;
  else
    ++t.inconclusive;
  bool angle = a.non_face_to_face().status == CriterionStatus::RulesOut &&
               a.face_to_face.status == CriterionStatus::RulesOut;
  bool lp = a.linear_program.status == CriterionStatus::RulesOut;
  if (angle) ++t.by_angle_criteria;
  if (lp && !angle) ++t.by_lp_only;
  if (expected && a.aggregate != *expected) ++t.mismatches;
}

ordered_json summary_json(const Tally& t, size_t total) {
  ordered_json s;
  s["total"] = total;
  s["does_not_tile"] = t.does_not_tile;
  s["inconclusive"] = t.inconclusive;
  s["ruled_out_by_angle_criteria"] = t.by_angle_criteria;
  s["ruled_out_by_lp_only"] = t.by_lp_only;
  s["expected_mismatches"] = t.mismatches;
  return s;
}

std::string aggregate_key(Aggregate a) { return aggregate_name(a); }

// Shared driver for every command that analyzes a list of entries.
RunResult run_entries(const std::string& command, ordered_json input,
                      const std::vector<CatalogEntry>& entries,
                      const RunConfig& cfg, const LoadedCatalog* loaded) {
  long long t0 = now_ms();
  std::vector<long long> entry_ms;
  std::vector<Analysis> analyses =
      analyze_all(entries, cfg.analysis, cfg.timings ? &entry_ms : nullptr);

  ordered_json report = base_report(command, std::move(input), cfg);
  Tally tally;
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < entries.size(); ++i) {
    tally_entry(tally, analyses[i], entries[i].expected_verdict);
    rows.push_back(
        entry_record(entries[i].id, analyses[i], entries[i].expected_verdict));
  }
  report["entries"] = std::move(rows);
  report["summary"] = summary_json(tally, entries.size());
  if (loaded) {
    ordered_json skipped = ordered_json::array();
    for (const auto& s : loaded->skipped)
      skipped.push_back({{"id", s.id}, {"reason", s.reason}});
    report["skipped"] = std::move(skipped);
    ordered_json dups = ordered_json::array();
    for (const auto& g : loaded->duplicate_groups) dups.push_back(g);
    report["duplicate_groups"] = std::move(dups);
    report["summary"]["skipped"] = loaded->skipped.size();
    report["summary"]["duplicate_groups"] = loaded->duplicate_groups.size();
  }
  if (cfg.timings) {
    report["timings"] = {{"total_ms", now_ms() - t0},
                         {"entry_ms", entry_ms}};
  }
  return {std::move(report), tally.mismatches > 0 ? 1 : 0};
}

// Uniform random reduced fraction in the open interval (1/6, top), top
// being 1/3 or 1/2; denominators up to 200 as in the divisibility sweep.
Rational sample_parameter(std::mt19937_64& rng, int top_den) {
  std::uniform_int_distribution<long> den_dist(7, 200);
  while (true) {
    long q = den_dist(rng);
    long lo = q / 6 + 1;
    long hi = (q % top_den == 0) ? q / top_den - 1 : q / top_den;
    if (lo > hi) continue;
    std::uniform_int_distribution<long> num_dist(lo, hi);
    Rational x(num_dist(rng), q);
    x.canonicalize();
    if (x <= Rational(1, 6) || x >= Rational(1, top_den)) continue;
    return x;
  }
}

std::string term(long coeff, const std::string& body) {
  if (coeff == 0) return "";
  std::string c = coeff == 1 ? "" : std::to_string(coeff);
  return c + body;
}

std::string identity_text(const GeneralCombination& g) {
  std::vector<std::string> parts;
  const std::array<std::string, 4> bodies = {"(5/6 - x)", "(1/6 + x)",
                                             "(2/3 - x)", "x"};
  for (int i = 0; i < 4; ++i) {
    std::string t = term(g.coeffs[i], bodies[i]);
    if (!t.empty()) parts.push_back(t);
  }
  std::string lhs;
  for (size_t i = 0; i < parts.size(); ++i)
    lhs += (i ? " + " : "") + parts[i];
  return lhs + " = " + std::to_string(g.target);
}

}  // namespace

nlohmann::ordered_json entry_record(const std::string& id, const Analysis& a,
                                    const std::optional<Aggregate>& expected) {
  ordered_json e;
  e["id"] = id;
  ordered_json angles = ordered_json::array();
  for (const auto& ang : a.t.angles()) angles.push_back(ang.str());
  e["angles"] = std::move(angles);
  e["existence"] = {{"valid", a.existence.valid},
                    {"precision", static_cast<long>(a.existence.precision)}};
  if (a.lengths) {
    ordered_json iv = ordered_json::array();
    for (int s = 0; s < kNumEdges; ++s)
      iv.push_back(interval_json(a.lengths->lengths[s]));
    e["edge_lengths"] = {
        {"normalization", normalization_name(a.lengths->normalization)},
        {"precision", static_cast<long>(a.lengths->precision)},
        {"intervals", std::move(iv)}};
  } else {
    e["edge_lengths"] = nullptr;
  }
  e["equality_classes"] = a.equality_classes;
  e["pattern"] = pattern_name(a.pattern.classification);
  e["equal_pairs"] = a.pattern.equal_pairs;
  e["pi_combination_count"] = a.pi_combinations.size();
  e["two_pi_combination_count"] = a.two_pi_combinations.size();
  e["pi_combinations"] = combination_list(a.pi_combinations);
  e["two_pi_combinations"] = combination_list(a.two_pi_combinations);

  ordered_json nff = nff_json(a.non_face_to_face());
  nff["mode"] = crtn_mode_name(a.mode);
  nff["modes"] = {{"strict", nff_json(a.nff_strict)},
                  {"generalized", nff_json(a.nff_generalized)}};
  ordered_json ff;
  ff["status"] = criterion_status_name(a.face_to_face.status);
  ff["pattern"] = pattern_name(a.face_to_face.pattern);
  if (a.face_to_face.witness_slot) {
    int s = *a.face_to_face.witness_slot;
    ff["witness_slot"] = kSlotNames[s];
    ff["witness_angle"] = a.t.angle(s).str();
  } else {
    ff["witness_slot"] = nullptr;
    ff["witness_angle"] = nullptr;
  }
  ordered_json lp;
  lp["status"] = criterion_status_name(a.linear_program.status);
  lp["relaxed_optimum"] = a.linear_program.relaxed_optimum;
  lp["precision_limited"] = a.linear_program.precision_limited;
  if (a.linear_program.certificate)
    lp["certificate"] = certificate_json(*a.linear_program.certificate);
  else
    lp["certificate"] = nullptr;
  e["criteria"] = {{"non_face_to_face", std::move(nff)},
                   {"face_to_face", std::move(ff)},
                   {"linear_program", std::move(lp)}};

  e["aggregate"] = aggregate_key(a.aggregate);
  e["reasons"] = a.reasons;
  e["precision_limited"] = a.precision_limited;
  if (expected) {
    e["expected"] = aggregate_key(*expected);
    e["matches_expected"] = a.aggregate == *expected;
  }
  return e;
}

RunResult run_analyze_angles(const std::array<std::string, kNumEdges>& fracs,
                             const RunConfig& config) {
  std::array<Rational, kNumEdges> values;
  for (int i = 0; i < kNumEdges; ++i)
    values[i] = RationalAngle::parse_dihedral(fracs[i]).value();
  std::string joined;
  for (int i = 0; i < kNumEdges; ++i)
    joined += (i ? "," : "") + fracs[i];
  CatalogEntry entry{"inline", make_angle_tuple(values), SourceTag::User,
                     std::nullopt};
  return run_entries("analyze", {{"angles", joined}}, {entry}, config,
                     nullptr);
}

RunResult run_analyze_file(const std::string& path, const RunConfig& config) {
  LoadedCatalog loaded = load_catalog(path);
  return run_entries("analyze", {{"file", path}}, loaded.entries, config,
                     &loaded);
}

RunResult run_catalog_tag(SourceTag tag, const RunConfig& config) {
  return run_entries("catalog", {{"dataset", source_tag_name(tag)}},
                     builtin_catalog(tag), config, nullptr);
}

RunResult run_catalog_file(const std::string& path, const RunConfig& config) {
  LoadedCatalog loaded = load_catalog(path);
  return run_entries("catalog", {{"file", path}}, loaded.entries, config,
                     &loaded);
}

RunResult run_families_gen(const RunConfig& config) {
  ordered_json report =
      base_report("families", {{"subcommand", "gen"}}, config);
  ordered_json rows = ordered_json::array();
  for (const auto& g : general_combinations()) {
    ordered_json coeffs = ordered_json::array();
    for (long c : g.coeffs) coeffs.push_back(c);
    rows.push_back({{"coeffs", std::move(coeffs)},
                    {"target", g.target},
                    {"identity", identity_text(g)}});
  }
  report["general_combinations"] = std::move(rows);
  report["summary"] = {{"total", report["general_combinations"].size()}};
  return {std::move(report), 0};
}

RunResult run_families_spe(const RunConfig& config) {
  ordered_json report =
      base_report("families", {{"subcommand", "spe"}}, config);
  ordered_json rows = ordered_json::array();
  int n = 0;
  for (const auto& m : enumerate_specific()) {
    ordered_json angles = ordered_json::array();
    for (const auto& ang : m.t.angles()) angles.push_back(ang.str());
    char id[16];
    std::snprintf(id, sizeof id, "SPE-%02d", ++n);
    rows.push_back(
        {{"id", id}, {"x", m.x.get_str()}, {"angles", std::move(angles)}});
  }
  report["specific_members"] = std::move(rows);
  report["summary"] = {{"total", report["specific_members"].size()}};
  return {std::move(report), 0};
}

RunResult run_families_scan(const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<CatalogEntry> entries;
  for (int i = 0; i < config.samples; ++i) {
    Rational x = sample_parameter(rng, 3);
    while (!is_general(x)) x = sample_parameter(rng, 3);
    entries.push_back({"F2@" + x.get_str(), f2_member(x).angles(),
                       SourceTag::User, Aggregate::DoesNotTile});
  }
  for (int i = 0; i < config.f1_samples; ++i) {
    Rational x = sample_parameter(rng, 2);
    entries.push_back({"F1@" + x.get_str(), f1_member(x).angles(),
                       SourceTag::User, Aggregate::Inconclusive});
  }
  ordered_json input = {{"subcommand", "scan"},
                        {"samples", config.samples},
                        {"f1_samples", config.f1_samples},
                        {"seed", config.seed}};
  return run_entries("families", std::move(input), entries, config, nullptr);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const ordered_json& report) {
  std::ostringstream out;
  if (report.contains("entries")) {
    out << "id,a12,a34,a13,a24,a14,a23,pattern,pi_count,twopi_count,"
           "non_face_to_face,face_to_face,linear_program,verdict,expected,"
           "match\n";
    for (const auto& e : report["entries"]) {
      out << csv_escape(e["id"].get<std::string>());
      for (const auto& a : e["angles"]) out << ',' << a.get<std::string>();
      out << ',' << e["pattern"].get<std::string>() << ','
          << e["pi_combination_count"] << ',' << e["two_pi_combination_count"]
          << ',' << e["criteria"]["non_face_to_face"]["status"].get<std::string>()
          << ',' << e["criteria"]["face_to_face"]["status"].get<std::string>()
          << ',' << e["criteria"]["linear_program"]["status"].get<std::string>()
          << ',' << e["aggregate"].get<std::string>() << ',';
      if (e.contains("expected")) out << e["expected"].get<std::string>();
      out << ',';
      if (e.contains("matches_expected"))
        out << (e["matches_expected"].get<bool>() ? "yes" : "no");
      out << '\n';
    }
  } else if (report.contains("general_combinations")) {
    out << "a,b,c,d,target,identity\n";
    for (const auto& g : report["general_combinations"]) {
      for (const auto& c : g["coeffs"]) out << c << ',';
      out << g["target"] << ',' << csv_escape(g["identity"].get<std::string>())
          << '\n';
    }
  } else if (report.contains("specific_members")) {
    out << "id,x,a12,a34,a13,a24,a14,a23\n";
    for (const auto& m : report["specific_members"]) {
      out << m["id"].get<std::string>() << ',' << m["x"].get<std::string>();
      for (const auto& a : m["angles"]) out << ',' << a.get<std::string>();
      out << '\n';
    }
  }
  return out.str();
}

std::string render_md(const ordered_json& report) {
  std::ostringstream out;
  out << "# Tetrahedron tiling analysis\n\n";
  const auto& c = report["config"];
  out << "- command: " << report["command"].get<std::string>() << "\n";
  out << "- precision: " << c["precision"] << " (cap " << c["max_precision"]
      << ")\n";
  out << "- normalization: " << c["normalization"].get<std::string>()
      << ", support mode: " << c["crtn_mode"].get<std::string>() << "\n\n";
  if (report.contains("entries")) {
    out << "| id | angles | pattern | verdict | via |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& e : report["entries"]) {
      out << "| " << e["id"].get<std::string>() << " | ";
      bool first = true;
      for (const auto& a : e["angles"]) {
        out << (first ? "" : " ") << a.get<std::string>();
        first = false;
      }
      out << " | " << e["pattern"].get<std::string>() << " | "
          << e["aggregate"].get<std::string>() << " | ";
      bool f2 = true;
      for (const auto& r : e["reasons"]) {
        out << (f2 ? "" : " + ") << r.get<std::string>();
        f2 = false;
      }
      out << " |\n";
    }
    out << "\n";
    const auto& s = report["summary"];
    out << "Summary: " << s["total"] << " entries, " << s["does_not_tile"]
        << " does-not-tile (" << s["ruled_out_by_angle_criteria"]
        << " by the joint angle criteria, " << s["ruled_out_by_lp_only"]
        << " by the linear program alone), " << s["inconclusive"]
        << " inconclusive";
    if (s["expected_mismatches"].get<int>() > 0)
      out << ", " << s["expected_mismatches"] << " MISMATCHED expectations";
    out << ".\n";
  } else if (report.contains("general_combinations")) {
    out << "| a | b | c | d | target | identity |\n|---|---|---|---|---|---|\n";
    for (const auto& g : report["general_combinations"]) {
      out << "| ";
      for (const auto& k : g["coeffs"]) out << k << " | ";
      out << g["target"] << " | " << g["identity"].get<std::string>()
          << " |\n";
    }
  } else if (report.contains("specific_members")) {
    out << "| id | x | angles |\n|---|---|---|\n";
    for (const auto& m : report["specific_members"]) {
      out << "| " << m["id"].get<std::string>() << " | "
          << m["x"].get<std::string>() << " | ";
      bool first = true;
      for (const auto& a : m["angles"]) {
        out << (first ? "" : " ") << a.get<std::string>();
        first = false;
      }
      out << " |\n";
    }
  }
  return out.str();
}

}  // namespace

std::string render_report(const nlohmann::ordered_json& report,
                          const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") return render_csv(report);
  if (format == "md") return render_md(report);
  throw ParseError("unknown output format: " + format);
}

}  // namespace tiling
