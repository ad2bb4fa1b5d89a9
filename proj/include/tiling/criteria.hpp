#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiling/combinations.hpp"
#include "tiling/lp.hpp"
#include "tiling/rational_angle.hpp"
#include "tiling/tetrahedron.hpp"

namespace tiling {

enum class CriterionStatus { RulesOut, Inapplicable, Undecided };

std::string criterion_status_name(CriterionStatus s);

// Support mode for the non-face-to-face criterion (CLI flag --crtn-mode).
// Strict demands a single pi-combination vector; generalized accepts any
// number as long as one opposite edge pair carries every support.
enum class CrtnMode { Strict, Generalized };

std::string crtn_mode_name(CrtnMode m);

// Rules out non-face-to-face tilings. Condition 1: no combination of the
// six dihedral angles sums to pi, yet any non-face-to-face contact creates
// an edge interior point whose surrounding angles must fill pi or 2*pi
// using interior edge points of other tiles. Condition 2: every
// pi-combination is supported on one opposite edge pair; a non-face-to-face
// tiling would force a pi-combination through one of two edges that meet
// at a vertex, and opposite edges never do.
struct NonFaceToFaceResult {
  CriterionStatus status = CriterionStatus::Inapplicable;
  int condition = 0;        // 1 or 2 when status == RulesOut
  std::optional<int> pair;  // index into kOppositePairs (condition 2)
};

NonFaceToFaceResult rule_out_non_face_to_face(
    const std::vector<Combination>& pi_combos, CrtnMode mode);

// Rules out face-to-face tilings: a parallelogram-like or all-distinct
// edge-length pattern pins how congruent copies can share an edge, and an
// angle that does not divide 2*pi then cannot tile around that edge.
struct FaceToFaceResult {
  CriterionStatus status = CriterionStatus::Inapplicable;
  PatternKind pattern = PatternKind::Undecided;
  std::optional<int> witness_slot;  // angle here does not divide 2*pi
};

FaceToFaceResult rule_out_face_to_face(const Tetrahedron& t,
                                       const EdgePattern& pattern);

// Farkas-style rule-out. Any tiling yields x >= 0 with D x = 1 where
// column i of D holds combination i's coefficients divided by edge length;
// a verified y with 1^T y < 0 and D^T y >= 0 proves no such x exists.
struct LinearProgramResult {
  CriterionStatus status = CriterionStatus::Inapplicable;
  std::optional<FarkasCertificate> certificate;
  bool precision_limited = false;
  double relaxed_optimum = 0.0;
};

struct AnalysisConfig {
  NumericOptions numerics;
  CrtnMode mode = CrtnMode::Generalized;
  Normalization normalization = Normalization::MaxEdge;
  long lp_round_denominator = 1000000;
  bool strict_numerics = false;
};

LinearProgramResult rule_out_linear_program(
    const Tetrahedron& t, const std::vector<Combination>& combos,
    const AnalysisConfig& config);

enum class Aggregate { DoesNotTile, Inconclusive };

std::string aggregate_name(Aggregate a);

struct Analysis {
  explicit Analysis(Tetrahedron tet) : t(std::move(tet)) {}

  Tetrahedron t;
  Existence existence;
  std::optional<EdgeLengths> lengths;
  std::vector<std::vector<int>> equality_classes;
  EdgePattern pattern;
  std::vector<Combination> pi_combinations;
  std::vector<Combination> two_pi_combinations;
  CrtnMode mode = CrtnMode::Generalized;
  NonFaceToFaceResult nff_strict;
  NonFaceToFaceResult nff_generalized;
  FaceToFaceResult face_to_face;
  LinearProgramResult linear_program;
  Aggregate aggregate = Aggregate::Inconclusive;
  std::vector<std::string> reasons;
  bool precision_limited = false;

  const NonFaceToFaceResult& non_face_to_face() const {
    return mode == CrtnMode::Strict ? nff_strict : nff_generalized;
  }
};

// Full pipeline: existence gate, equality classes, pattern classification,
// combination enumeration, the three criteria, and the aggregate verdict:
// DoesNotTile iff (non-face-to-face AND face-to-face) OR linear program.
// Both non-face-to-face modes are computed; `mode` selects the one that
// feeds the aggregate. Throws InvalidGeometryError when the angles admit no
// tetrahedron and PrecisionExhaustedError when existence cannot be settled
// at the cap; downstream precision exhaustion becomes Undecided pattern or
// a missing certificate with precision_limited set, unless strict_numerics
// turns it into PrecisionExhaustedError.
Analysis analyze(const Tetrahedron& t, const AnalysisConfig& config = {});

}  // namespace tiling
