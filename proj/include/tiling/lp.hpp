#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiling/combinations.hpp"
#include "tiling/interval.hpp"
#include "tiling/tetrahedron.hpp"

namespace tiling {

// The 6 x s matrix with entry (e, i) = C_i(e) / len(e) over all combinations
// C_i reaching pi or 2pi. Entries are reconstructed at any requested
// precision; an entry is exactly zero iff the coefficient is zero. A rational
// scale factor supports uniform-rescaling tests without recomputation.
class DMatrix {
 public:
  DMatrix(const Tetrahedron& t, std::vector<Combination> combos,
          Normalization norm, const NumericOptions& opts);

  int columns() const { return static_cast<int>(combos_.size()); }
  const std::vector<Combination>& column_meta() const { return combos_; }
  const Tetrahedron& tetrahedron() const { return oracle_.tetrahedron(); }
  const Rational& scale() const { return scale_; }
  const NumericOptions& options() const { return opts_; }

  DMatrix scaled(const Rational& factor) const;

  // Dense interval snapshot at one precision (entry[e][i]).
  std::vector<std::array<Interval, kNumEdges>> entries_at(mpfr_prec_t p);

  // Interval value of column i of D^T y at one precision. Coefficients are
  // summed exactly within each length-equality class before the single
  // division, so symmetric cancellations stay exact.
  Interval column_value_at(int i, const std::array<Rational, kNumEdges>& y,
                           mpfr_prec_t p);
  // True iff every per-class exact coefficient sum vanishes, making the
  // column value exactly zero for any lengths.
  bool column_exactly_zero(int i,
                           const std::array<Rational, kNumEdges>& y) const;

  // Midpoint doubles for the float phase.
  std::vector<std::array<double, kNumEdges>> midpoints();

 private:
  LengthOracle oracle_;
  std::vector<Combination> combos_;
  NumericOptions opts_;
  Rational scale_ = 1;
  std::array<int, kNumEdges> slot_class_{};
  std::vector<std::vector<int>> classes_;
};

DMatrix build_d_matrix(const Tetrahedron& t,
                       const std::vector<Combination>& combos,
                       Normalization norm, const NumericOptions& opts);

struct FarkasCertificate {
  std::array<Rational, kNumEdges> y;
  Rational objective;  // 1^T y, exact, negative
  Rational margin;     // verified lower bound of min over columns of (D^T y)_i
  mpfr_prec_t precision = 0;
};

struct VerifyResult {
  bool verified = false;
  int rejected_column = -2;  // -1: objective not negative; >= 0: column index
  std::string reason;
  Rational margin = 0;
  bool precision_limited = false;
  int exact_zero_columns = 0;
};

// Rigorous check that 1^T y < 0 exactly and every column of D^T y is
// nonnegative (interval lower bound >= 0, escalating precision; exact-zero
// columns accepted via the rational path).
VerifyResult verify_certificate(DMatrix& d,
                                const std::array<Rational, kNumEdges>& y);

struct CertificateSearch {
  std::optional<FarkasCertificate> certificate;
  bool precision_limited = false;
  double relaxed_optimum = 0.0;  // float phase optimum of 1^T y (diagnostic)
};

// Float phase: minimize 1^T y over D^T y >= 0, -1 <= y <= 1 on interval
// midpoints; when the optimum clears -1e-6, round y to rationals (schedule
// of denominators and uniform shifts, 5 attempts) and keep the first
// rounding that verifies rigorously. Only verified certificates are
// returned; the float solution is never trusted.
CertificateSearch find_certificate(DMatrix& d,
                                   long round_denominator = 1000000);

// Float feasibility of D x = 1, x >= 0 (diagnostic; certificate existence
// and primal feasibility exclude each other).
bool primal_feasible(DMatrix& d);

}  // namespace tiling
