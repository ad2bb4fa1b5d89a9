#include "tiling/lp.hpp"

#include <cmath>
#include <utility>

#include "tiling/simplex.hpp"

namespace tiling {

DMatrix::DMatrix(const Tetrahedron& t, std::vector<Combination> combos,
                 Normalization norm, const NumericOptions& opts)
    : oracle_(t, norm), combos_(std::move(combos)), opts_(opts) {
  classes_ = edge_equality_classes(t);
  for (size_t k = 0; k < classes_.size(); ++k)
    for (int s : classes_[k]) slot_class_[s] = static_cast<int>(k);
}

DMatrix build_d_matrix(const Tetrahedron& t,
                       const std::vector<Combination>& combos,
                       Normalization norm, const NumericOptions& opts) {
  return DMatrix(t, combos, norm, opts);
}

DMatrix DMatrix::scaled(const Rational& factor) const {
  DMatrix copy = *this;
  copy.scale_ *= factor;
  return copy;
}

std::vector<std::array<Interval, kNumEdges>> DMatrix::entries_at(
    mpfr_prec_t p) {
  auto lengths = oracle_.normalized_at(p);
  std::vector<std::array<Interval, kNumEdges>> out;
  out.reserve(combos_.size());
  for (const auto& c : combos_) {
    std::array<Interval, kNumEdges> col{Interval(p), Interval(p), Interval(p),
                                        Interval(p), Interval(p),
                                        Interval(p)};
    for (int e = 0; e < kNumEdges; ++e) {
      if (c.coeffs[e] != 0)
        col[e] = Interval(scale_ * c.coeffs[e], p) / lengths[e];
    }
    out.push_back(std::move(col));
  }
  return out;
}

Interval DMatrix::column_value_at(int i,
                                  const std::array<Rational, kNumEdges>& y,
                                  mpfr_prec_t p) {
  auto lengths = oracle_.normalized_at(p);
  const auto& c = combos_[i].coeffs;
  Interval val(0L, p);
  for (const auto& members : classes_) {
    Rational sum = 0;
    for (int s : members) sum += c[s] * y[s];
    if (sum != 0)
      val = val + Interval(sum * scale_, p) / lengths[members.front()];
  }
  return val;
}

bool DMatrix::column_exactly_zero(
    int i, const std::array<Rational, kNumEdges>& y) const {
  const auto& c = combos_[i].coeffs;
  for (const auto& members : classes_) {
    Rational sum = 0;
    for (int s : members) sum += c[s] * y[s];
    if (sum != 0) return false;
  }
  return true;
}

std::vector<std::array<double, kNumEdges>> DMatrix::midpoints() {
  mpfr_prec_t p = opts_.precision;
  while (true) {
    try {
      auto cols = entries_at(p);
      std::vector<std::array<double, kNumEdges>> out(cols.size());
      for (size_t i = 0; i < cols.size(); ++i)
        for (int e = 0; e < kNumEdges; ++e) out[i][e] = cols[i][e].mid_d();
      return out;
    } catch (const PrecisionError&) {
      if (p >= opts_.max_precision)
        throw PrecisionExhaustedError(
            "edge lengths undecided at the precision cap");
      p = std::min(p * 2, opts_.max_precision);
    }
  }
}

VerifyResult verify_certificate(DMatrix& d,
                                const std::array<Rational, kNumEdges>& y) {
  VerifyResult out;
  Rational objective = 0;
  for (const auto& v : y) objective += v;
  if (objective >= 0) {
    out.rejected_column = -1;
    out.reason = "objective is not negative";
    return out;
  }

  const NumericOptions& opts = d.options();
  std::optional<Rational> margin;
  auto note_margin = [&margin](const Rational& lo) {
    if (!margin || lo < *margin) margin = lo;
  };
  for (int i = 0; i < d.columns(); ++i) {
    if (d.column_exactly_zero(i, y)) {
      ++out.exact_zero_columns;
      note_margin(0);
      continue;
    }
    mpfr_prec_t p = opts.precision;
    bool settled = false;
    while (!settled) {
      try {
        Interval val = d.column_value_at(i, y, p);
        if (mpfr_sgn(val.lo()) >= 0) {
          note_margin(val.lo_q());
          settled = true;
          continue;
        }
        if (val.is_negative()) {
          out.rejected_column = i;
          out.reason = "column value provably negative";
          return out;
        }
      } catch (const PrecisionError&) {
      }
      if (p >= opts.max_precision) {
        out.rejected_column = i;
        out.reason = "column sign undecided at the precision cap";
        out.precision_limited = true;
        return out;
      }
      p = std::min(p * 2, opts.max_precision);
    }
  }
  out.verified = true;
  out.margin = margin.value_or(0);
  return out;
}

namespace {

Rational round_to_denominator(double v, long den) {
  double scaled = v * static_cast<double>(den);
  if (!std::isfinite(scaled)) scaled = 0.0;
  long near = static_cast<long>(std::llround(scaled));
  Rational r{mpz_class(near), mpz_class(den)};
  r.canonicalize();
  return r;
}

}  // namespace

CertificateSearch find_certificate(DMatrix& d, long round_denominator) {
  CertificateSearch out;
  const int s = d.columns();
  if (s == 0) {
    std::array<Rational, kNumEdges> y;
    y.fill(Rational(-1));
    VerifyResult check = verify_certificate(d, y);
    if (check.verified) {
      out.certificate = FarkasCertificate{y, Rational(-6), check.margin,
                                          d.options().precision};
    }
    return out;
  }

  // Variables: z = y + 1 in [0, 2] (6), column surpluses (s), box slacks (6).
  // Constraints: for each column i, sum_e D[e][i] z_e - u_i = sum_e D[e][i];
  // for each edge, z_e + w_e = 2. Objective: min sum z = 6 + 1^T y.
  std::vector<std::array<double, kNumEdges>> mids;
  try {
    mids = d.midpoints();
  } catch (const PrecisionExhaustedError&) {
    out.precision_limited = true;
    return out;
  }
  const int nvars = 6 + s + 6;
  std::vector<std::vector<double>> a(s + 6, std::vector<double>(nvars, 0.0));
  std::vector<double> b(s + 6, 0.0);
  std::vector<double> c(nvars, 0.0);
  for (int e = 0; e < kNumEdges; ++e) c[e] = 1.0;
  for (int i = 0; i < s; ++i) {
    double rhs = 0.0;
    for (int e = 0; e < kNumEdges; ++e) {
      a[i][e] = mids[i][e];
      rhs += mids[i][e];
    }
    a[i][6 + i] = -1.0;
    b[i] = rhs;
  }
  for (int e = 0; e < kNumEdges; ++e) {
    a[s + e][e] = 1.0;
    a[s + e][6 + s + e] = 1.0;
    b[s + e] = 2.0;
  }

  SimplexResult sol = solve_simplex(std::move(a), std::move(b), std::move(c));
  if (sol.status != SimplexResult::Status::Optimal) return out;
  out.relaxed_optimum = sol.objective - 6.0;
  if (out.relaxed_optimum >= -1e-6) return out;

  std::array<double, kNumEdges> yf{};
  for (int e = 0; e < kNumEdges; ++e) yf[e] = sol.x[e] - 1.0;

  // Under the unit normalization every column's coordinate sum exceeds 1,
  // so the uniform shift y + eps*1 lifts near-zero columns at an objective
  // cost of 6*eps; paired with coarser denominators this recovers exact
  // cancellations the float solution only approximates.
  const double mag = -out.relaxed_optimum;
  const long d0 = std::max(round_denominator, 1L);
  const std::array<std::pair<long, double>, 5> schedule{{
      {d0, 0.0},
      {d0, mag / 24.0},
      {d0, mag / 12.0},
      {std::max(d0 / 10, 1L), mag / 24.0},
      {std::max(d0 / 100, 1L), mag / 12.0},
  }};
  for (const auto& [den, eps] : schedule) {
    std::array<Rational, kNumEdges> y;
    for (int e = 0; e < kNumEdges; ++e)
      y[e] = round_to_denominator(yf[e] + eps, den);
    VerifyResult vr = verify_certificate(d, y);
    out.precision_limited = out.precision_limited || vr.precision_limited;
    if (!vr.verified) continue;
    Rational objective = 0;
    for (const auto& v : y) objective += v;
    out.certificate =
        FarkasCertificate{y, objective, vr.margin, d.options().precision};
    return out;
  }
  return out;
}

bool primal_feasible(DMatrix& d) {
  const int s = d.columns();
  if (s == 0) return false;
  auto mids = d.midpoints();
  std::vector<std::vector<double>> a(kNumEdges, std::vector<double>(s, 0.0));
  std::vector<double> b(kNumEdges, 1.0);
  std::vector<double> c(s, 0.0);
  for (int e = 0; e < kNumEdges; ++e)
    for (int i = 0; i < s; ++i) a[e][i] = mids[i][e];
  SimplexResult sol = solve_simplex(std::move(a), std::move(b), std::move(c));
  return sol.status == SimplexResult::Status::Optimal;
}

}  // namespace tiling
