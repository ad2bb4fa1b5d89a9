#pragma once

#include <mpfr.h>

#include <functional>
#include <stdexcept>
#include <string>

#include "tiling/rational_angle.hpp"

namespace tiling {

class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Closed interval [lo, hi] over MPFR floats with outward (directed) rounding.
// Binary operations compute at the wider of the two operand precisions.
class Interval {
 public:
  Interval() : Interval(64) {}
  explicit Interval(mpfr_prec_t prec);
  Interval(const Rational& v, mpfr_prec_t prec);
  Interval(long v, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval pi(mpfr_prec_t prec);
  static Interval from_bounds(const Rational& lo, const Rational& hi,
                              mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const;
  Rational lo_q() const;
  Rational hi_q() const;
  Rational width_q() const { return hi_q() - lo_q(); }

  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }
  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }
  bool width_below_2exp(long e) const;  // width <= 2^e

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval square() const;
  Interval sqrt() const;  // requires hi >= 0; clamps lo at 0
  Interval cbrt() const;

  // Decimal bound strings, rounded outward, with `digits` significant digits.
  std::string lo_str(int digits) const;
  std::string hi_str(int digits) const;

 private:
  friend Interval cos_pi(const Rational& t, mpfr_prec_t prec);
  friend Interval sin_pi(const Rational& t, mpfr_prec_t prec);
  mpfr_t lo_, hi_;
};

// True iff a.hi < b.lo (every point of a below every point of b).
bool certainly_less(const Interval& a, const Interval& b);

// cos(t*pi), sin(t*pi) for exact rational t. Argument reduction is exact
// (mod 2 plus folding); rational points with exact cosine/sine are returned
// exactly; otherwise the enclosure is evaluated at precision prec + 32 and
// rounded outward, giving width at most 2^(2 - prec).
Interval cos_pi(const Rational& t, mpfr_prec_t prec);
Interval sin_pi(const Rational& t, mpfr_prec_t prec);

enum class Cmp { Less, Greater, Undecided };

// Adaptive interval comparison of two quantities: evaluates both at
// doubling precisions from start_prec until separation or max_prec.
// Never decides equality. PrecisionError from an evaluator escalates.
Cmp compare_adaptive(const std::function<Interval(mpfr_prec_t)>& f,
                     const std::function<Interval(mpfr_prec_t)>& g,
                     mpfr_prec_t start_prec, mpfr_prec_t max_prec);

}  // namespace tiling
