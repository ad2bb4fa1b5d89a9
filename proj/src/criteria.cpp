#include "tiling/criteria.hpp"

#include <algorithm>

namespace tiling {

std::string criterion_status_name(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::RulesOut:
      return "rules-out";
    case CriterionStatus::Inapplicable:
      return "inapplicable";
    case CriterionStatus::Undecided:
      return "undecided";
  }
  return "unknown";
}

std::string crtn_mode_name(CrtnMode m) {
  return m == CrtnMode::Strict ? "strict" : "generalized";
}

std::string aggregate_name(Aggregate a) {
  return a == Aggregate::DoesNotTile ? "does-not-tile" : "inconclusive";
}

namespace {

// Index of the opposite pair containing every positive coefficient, or
// nullopt. A nonempty support fits at most one pair.
std::optional<int> support_pair(const Combination& c) {
  for (int p = 0; p < 3; ++p) {
    bool inside = true;
    for (int s = 0; s < kNumEdges; ++s) {
      if (c.coeffs[s] != 0 && s != 2 * p && s != 2 * p + 1) {
        inside = false;
        break;
      }
    }
    if (inside) return p;
  }
  return std::nullopt;
}

}  // namespace

NonFaceToFaceResult rule_out_non_face_to_face(
    const std::vector<Combination>& pi_combos, CrtnMode mode) {
  NonFaceToFaceResult out;
  if (pi_combos.empty()) {
    out.status = CriterionStatus::RulesOut;
    out.condition = 1;
    return out;
  }
  std::optional<int> common = support_pair(pi_combos.front());
  for (size_t i = 1; common && i < pi_combos.size(); ++i) {
    if (support_pair(pi_combos[i]) != common) common = std::nullopt;
  }
  bool fires = common && (mode == CrtnMode::Generalized || pi_combos.size() == 1);
  if (fires) {
    out.status = CriterionStatus::RulesOut;
    out.condition = 2;
    out.pair = common;
  }
  return out;
}

FaceToFaceResult rule_out_face_to_face(const Tetrahedron& t,
                                       const EdgePattern& pattern) {
  FaceToFaceResult out;
  out.pattern = pattern.classification;
  std::optional<int> witness;
  for (int s = 0; s < kNumEdges; ++s) {
    if (!divides_two_pi(t.angle(s))) {
      witness = s;
      break;
    }
  }
  if (!witness) return out;  // every angle divides 2*pi: nothing to violate
  switch (pattern.classification) {
    case PatternKind::ParallelogramLike:
    case PatternKind::AllDistinct:
      out.status = CriterionStatus::RulesOut;
      out.witness_slot = witness;
      break;
    case PatternKind::Undecided:
      out.status = CriterionStatus::Undecided;
      out.witness_slot = witness;
      break;
    case PatternKind::Other:
      break;
  }
  return out;
}

LinearProgramResult rule_out_linear_program(
    const Tetrahedron& t, const std::vector<Combination>& combos,
    const AnalysisConfig& config) {
  LinearProgramResult out;
  DMatrix d(t, combos, config.normalization, config.numerics);
  CertificateSearch search = find_certificate(d, config.lp_round_denominator);
  out.precision_limited = search.precision_limited;
  out.relaxed_optimum = search.relaxed_optimum;
  if (search.certificate) {
    out.status = CriterionStatus::RulesOut;
    out.certificate = search.certificate;
  }
  return out;
}

Analysis analyze(const Tetrahedron& t, const AnalysisConfig& config) {
  Analysis out(t);
  out.mode = config.mode;
  out.existence = check_existence(t, config.numerics);
  if (!out.existence.valid) {
    if (out.existence.reason == "numerically-undecided")
      throw PrecisionExhaustedError(
          "tetrahedron existence undecided at the precision cap");
    throw InvalidGeometryError("angles admit no tetrahedron (" +
                               out.existence.reason + ")");
  }

  out.equality_classes = edge_equality_classes(t);
  out.pattern = classify_pattern(t, config.numerics);
  if (out.pattern.classification == PatternKind::Undecided)
    out.precision_limited = true;

  try {
    out.lengths = edge_lengths(t, config.normalization, config.numerics);
  } catch (const PrecisionExhaustedError&) {
    out.precision_limited = true;
  }

  std::vector<Combination> combos = enumerate_combinations(t);
  for (const auto& c : combos) {
    (c.target == 1 ? out.pi_combinations : out.two_pi_combinations)
        .push_back(c);
  }

  out.nff_strict =
      rule_out_non_face_to_face(out.pi_combinations, CrtnMode::Strict);
  out.nff_generalized =
      rule_out_non_face_to_face(out.pi_combinations, CrtnMode::Generalized);
  out.face_to_face = rule_out_face_to_face(t, out.pattern);
  out.linear_program = rule_out_linear_program(t, combos, config);
  out.precision_limited =
      out.precision_limited || out.linear_program.precision_limited;

  if (config.strict_numerics && out.precision_limited)
    throw PrecisionExhaustedError(
        "analysis limited by the precision cap under strict numerics");

  const bool nff = out.non_face_to_face().status == CriterionStatus::RulesOut;
  const bool ff = out.face_to_face.status == CriterionStatus::RulesOut;
  const bool lp = out.linear_program.status == CriterionStatus::RulesOut;
  if (nff && ff) {
    out.reasons.push_back("non-face-to-face");
    out.reasons.push_back("face-to-face");
  }
  if (lp) out.reasons.push_back("linear-program");
  out.aggregate = ((nff && ff) || lp) ? Aggregate::DoesNotTile
                                      : Aggregate::Inconclusive;
  return out;
}

}  // namespace tiling
