#include "tiling/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace tiling {

namespace {

Rational to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw PrecisionError("non-finite interval bound");
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  if (e >= 0) {
    mpz_class num;
    mpz_mul_2exp(num.get_mpz_t(), m.get_mpz_t(),
                 static_cast<unsigned long>(e));
    return Rational(num);
  }
  mpz_class den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(-e));
  Rational q(m, den);
  q.canonicalize();
  return q;
}

// t mod 2 in [0, 2), exact.
Rational mod_two(const Rational& t) {
  Rational half = t / 2;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(),
             half.get_den().get_mpz_t());
  return t - 2 * Rational(fl);
}

std::string bound_str(const mpfr_t x, int digits, mpfr_rnd_t rnd) {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dR%ce", digits - 1,
                rnd == MPFR_RNDD ? 'D' : 'U');
  char buf[128];
  mpfr_snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& v, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(long v, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision());
    mpfr_set_prec(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(const Rational& lo, const Rational& hi,
                               mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

double Interval::mid_d() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

Rational Interval::lo_q() const { return to_rational(lo_); }
Rational Interval::hi_q() const { return to_rational(hi_); }

bool Interval::width_below_2exp(long e) const {
  mpfr_t w, b;
  mpfr_init2(w, precision());
  mpfr_init2(b, 8);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_set_ui_2exp(b, 1, e, MPFR_RNDN);
  bool ok = mpfr_cmp(w, b) <= 0;
  mpfr_clear(w);
  mpfr_clear(b);
  return ok;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw PrecisionError("division by an interval containing zero");
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::square() const {
  Interval r(precision());
  if (contains_zero()) {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, precision());
    mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
    mpfr_sqr(t, hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  } else if (is_positive()) {
    mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
  } else {
    mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_) < 0)
    throw PrecisionError("sqrt of a negative interval");
  Interval r(precision());
  if (mpfr_sgn(lo_) <= 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cbrt() const {
  Interval r(precision());
  mpfr_cbrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_cbrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

std::string Interval::lo_str(int digits) const {
  return bound_str(lo_, digits, MPFR_RNDD);
}

std::string Interval::hi_str(int digits) const {
  return bound_str(hi_, digits, MPFR_RNDU);
}

bool certainly_less(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi(), b.lo()) < 0;
}

Interval cos_pi(const Rational& t, mpfr_prec_t prec) {
  Rational r = mod_two(t);
  if (r == 0) return Interval(1, prec);
  if (r == 1) return Interval(-1, prec);
  if (r > 1) r = 2 - r;
  if (r == Rational(1, 2)) return Interval(0L, prec);
  if (r == Rational(1, 3)) return Interval(Rational(1, 2), prec);
  if (r == Rational(2, 3)) return Interval(Rational(-1, 2), prec);

  mpfr_prec_t w = prec + 32;
  mpfr_t pil, xlo, xhi, clo, chi, t1;
  mpfr_init2(pil, w);
  mpfr_init2(xlo, w);
  mpfr_init2(xhi, w);
  mpfr_init2(clo, w);
  mpfr_init2(chi, w);
  mpfr_init2(t1, w);

  mpfr_const_pi(pil, MPFR_RNDD);
  mpfr_mul_q(xlo, pil, r.get_mpq_t(), MPFR_RNDD);
  mpfr_const_pi(t1, MPFR_RNDU);
  mpfr_mul_q(xhi, t1, r.get_mpq_t(), MPFR_RNDU);

  mpfr_cos(clo, xhi, MPFR_RNDD);
  mpfr_cos(t1, xlo, MPFR_RNDD);
  mpfr_min(clo, clo, t1, MPFR_RNDD);
  mpfr_cos(chi, xlo, MPFR_RNDU);
  mpfr_cos(t1, xhi, MPFR_RNDU);
  mpfr_max(chi, chi, t1, MPFR_RNDU);

  // The true argument lies in (0, pi); fatten across either critical point
  // whenever the working enclosure may touch it.
  if (mpfr_cmp(xhi, pil) >= 0) mpfr_set_si(clo, -1, MPFR_RNDD);
  if (mpfr_sgn(xlo) <= 0) mpfr_set_si(chi, 1, MPFR_RNDU);

  Interval out(prec);
  mpfr_set(out.lo_, clo, MPFR_RNDD);
  mpfr_set(out.hi_, chi, MPFR_RNDU);
  mpfr_clears(pil, xlo, xhi, clo, chi, t1, static_cast<mpfr_ptr>(nullptr));
  return out;
}

Interval sin_pi(const Rational& t, mpfr_prec_t prec) {
  Rational r = mod_two(t);
  int sign = 1;
  if (r >= 1) {
    r -= 1;
    sign = -1;
  }
  auto signed_exact = [&](const Rational& v) {
    return Interval(sign > 0 ? v : Rational(-v), prec);
  };
  if (r == 0) return Interval(0L, prec);
  if (r == Rational(1, 2)) return signed_exact(Rational(1));
  if (r == Rational(1, 6) || r == Rational(5, 6))
    return signed_exact(Rational(1, 2));

  mpfr_prec_t w = prec + 32;
  mpfr_t pil, xlo, xhi, slo, shi, t1, half;
  mpfr_init2(pil, w);
  mpfr_init2(xlo, w);
  mpfr_init2(xhi, w);
  mpfr_init2(slo, w);
  mpfr_init2(shi, w);
  mpfr_init2(t1, w);
  mpfr_init2(half, w);

  mpfr_const_pi(pil, MPFR_RNDD);
  mpfr_mul_q(xlo, pil, r.get_mpq_t(), MPFR_RNDD);
  mpfr_const_pi(t1, MPFR_RNDU);
  mpfr_mul_q(xhi, t1, r.get_mpq_t(), MPFR_RNDU);

  mpfr_sin(slo, xlo, MPFR_RNDD);
  mpfr_sin(t1, xhi, MPFR_RNDD);
  mpfr_min(slo, slo, t1, MPFR_RNDD);
  mpfr_sin(shi, xlo, MPFR_RNDU);
  mpfr_sin(t1, xhi, MPFR_RNDU);
  mpfr_max(shi, shi, t1, MPFR_RNDU);

  // The only critical point reachable from (0, pi) is pi/2.
  mpfr_div_2ui(half, pil, 1, MPFR_RNDD);
  bool above = mpfr_cmp(xhi, half) >= 0;
  mpfr_const_pi(half, MPFR_RNDU);
  mpfr_div_2ui(half, half, 1, MPFR_RNDU);
  bool below = mpfr_cmp(xlo, half) <= 0;
  if (above && below) mpfr_set_si(shi, 1, MPFR_RNDU);

  Interval out(prec);
  if (sign > 0) {
    mpfr_set(out.lo_, slo, MPFR_RNDD);
    mpfr_set(out.hi_, shi, MPFR_RNDU);
  } else {
    mpfr_neg(out.lo_, shi, MPFR_RNDD);
    mpfr_neg(out.hi_, slo, MPFR_RNDU);
  }
  mpfr_clears(pil, xlo, xhi, slo, shi, t1, half,
              static_cast<mpfr_ptr>(nullptr));
  return out;
}

Cmp compare_adaptive(const std::function<Interval(mpfr_prec_t)>& f,
                     const std::function<Interval(mpfr_prec_t)>& g,
                     mpfr_prec_t start_prec, mpfr_prec_t max_prec) {
  mpfr_prec_t p = start_prec;
  while (true) {
    try {
      Interval a = f(p);
      Interval b = g(p);
      if (certainly_less(a, b)) return Cmp::Less;
      if (certainly_less(b, a)) return Cmp::Greater;
    } catch (const PrecisionError&) {
    }
    if (p >= max_prec) return Cmp::Undecided;
    p = std::min(p * 2, max_prec);
  }
}

}  // namespace tiling
