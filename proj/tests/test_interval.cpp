#include <doctest.h>

#include <cmath>
#include <string>

#include "tiling/interval.hpp"

using namespace tiling;

TEST_SUITE("interval") {

TEST_CASE("rational endpoints are exact when representable") {
  Interval a(Rational(3, 4), 64);
  CHECK(a.lo_q() == Rational(3, 4));
  CHECK(a.hi_q() == Rational(3, 4));
  CHECK(a.width_q() == 0);

  Interval b(Rational(1, 3), 64);
  CHECK(b.lo_q() < Rational(1, 3));
  CHECK(b.hi_q() > Rational(1, 3));
  CHECK(b.contains(Rational(1, 3)));
  CHECK(b.width_below_2exp(-62));
}

TEST_CASE("arithmetic encloses the exact result") {
  Interval third(Rational(1, 3), 64);
  Interval seventh(Rational(1, 7), 64);
  CHECK((third + seventh).contains(Rational(10, 21)));
  CHECK((third - seventh).contains(Rational(4, 21)));
  CHECK((third * seventh).contains(Rational(1, 21)));
  CHECK((third / seventh).contains(Rational(7, 3)));
  CHECK((-third).contains(Rational(-1, 3)));
  CHECK(third.square().contains(Rational(1, 9)));
}

TEST_CASE("division by a zero-containing interval fails loudly") {
  Interval num(Rational(1), 64);
  Interval den = Interval::from_bounds(Rational(-1, 8), Rational(1, 8), 64);
  CHECK_THROWS_AS(num / den, PrecisionError);
}

TEST_CASE("square roots and cube roots") {
  Interval two(Rational(2), 64);
  Interval r = two.sqrt();
  CHECK(r.is_positive());
  CHECK(r.square().contains(Rational(2)));

  Interval eight(Rational(8), 64);
  CHECK(eight.cbrt().contains(Rational(2)));

  Interval neg(Rational(-1), 64);
  CHECK_THROWS_AS(neg.sqrt(), PrecisionError);

  // An interval straddling zero clamps its lower root at zero.
  Interval straddle = Interval::from_bounds(Rational(-1, 16), Rational(4), 64);
  Interval s = straddle.sqrt();
  CHECK(s.contains(Rational(0)));
  CHECK(s.contains(Rational(2)));
}

TEST_CASE("pi encloses known digits") {
  Interval p = Interval::pi(128);
  Rational approx(mpz_class("3141592653589793238"),
                  mpz_class("1000000000000000000"));
  approx.canonicalize();
  Rational step(mpz_class(1), mpz_class("1000000000000000000"));
  CHECK_FALSE(p.contains(approx));  // 19 digits of pi, already too coarse
  CHECK(p.lo_q() < approx + step);
  CHECK(p.hi_q() > approx);
  Rational coarse(3141592, 1000000);
  coarse.canonicalize();
  CHECK_FALSE(p.contains(coarse));
  CHECK(p.width_below_2exp(-120));
}

TEST_CASE("cos_pi hits exact rational points exactly") {
  CHECK(cos_pi(Rational(0), 64).width_q() == 0);
  CHECK(cos_pi(Rational(0), 64).contains(Rational(1)));
  CHECK(cos_pi(Rational(1, 2), 64).contains(Rational(0)));
  CHECK(cos_pi(Rational(1, 2), 64).width_q() == 0);
  CHECK(cos_pi(Rational(1), 64).contains(Rational(-1)));
  CHECK(cos_pi(Rational(1, 3), 64).contains(Rational(1, 2)));
  CHECK(cos_pi(Rational(1, 3), 64).width_q() == 0);
  CHECK(cos_pi(Rational(2, 3), 64).contains(Rational(-1, 2)));
  CHECK(sin_pi(Rational(1, 6), 64).contains(Rational(1, 2)));
  CHECK(sin_pi(Rational(1), 64).contains(Rational(0)));
  CHECK(sin_pi(Rational(1), 64).width_q() == 0);
}

TEST_CASE("cos_pi matches an independent double evaluation") {
  const long nums[] = {1, 2, 3, 5, 7, 11, 19, 59};
  const long dens[] = {5, 7, 9, 11, 12, 13, 60, 60};
  for (int i = 0; i < 8; ++i) {
    Rational t(nums[i], dens[i]);
    t.canonicalize();
    Interval c = cos_pi(t, 64);
    Interval s = sin_pi(t, 64);
    double ct = std::cos(M_PI * nums[i] / dens[i]);
    double st = std::sin(M_PI * nums[i] / dens[i]);
    CHECK(c.lo_d() <= ct + 1e-13);
    CHECK(c.hi_d() >= ct - 1e-13);
    CHECK(s.lo_d() <= st + 1e-13);
    CHECK(s.hi_d() >= st - 1e-13);
    CHECK(c.width_below_2exp(2 - 64));
    CHECK(s.width_below_2exp(2 - 64));
  }
}

TEST_CASE("cos_pi golden value at one fifth") {
  // cos(pi/5) = (1 + sqrt 5)/4 = 0.80901699437494742410229341718...
  Rational truth(mpz_class("8090169943749474241"),
                 mpz_class("10000000000000000000"));
  truth.canonicalize();
  Interval c = cos_pi(Rational(1, 5), 128);
  Rational step(mpz_class(1), mpz_class("10000000000000000000"));
  CHECK(c.lo_q() > truth);  // truth truncates, so the real value is above it
  CHECK(c.hi_q() < truth + step);
  CHECK(c.lo_d() == doctest::Approx(0.8090169943749475).epsilon(1e-15));
  CHECK(cos_pi(Rational(1, 5), 64).width_below_2exp(-62));
}

TEST_CASE("argument reduction is exact for large arguments") {
  // cos((2k + t) pi) = cos(t pi) for any integer k, even huge ones.
  mpz_class even_k = mpz_class("123456789012345678901234567890") * 2;
  Rational big = Rational(1, 3) + Rational(even_k);
  Interval c = cos_pi(big, 64);
  CHECK(c.contains(Rational(1, 2)));
  CHECK(c.width_q() == 0);

  Rational wrapped = Rational(-1, 6) + 2;
  Interval s = sin_pi(wrapped, 64);
  CHECK(s.contains(Rational(-1, 2)));
}

TEST_CASE("near-critical-point enclosures still contain the truth") {
  // cos close to 0 where the slope of cos is tiny: t close to 0 and to 1.
  Interval near_one = cos_pi(Rational(1, 1000000007), 64);
  CHECK(near_one.hi_d() <= 1.0);
  CHECK(near_one.lo_d() > 0.9999999);
  Interval near_neg = cos_pi(Rational(1000000006, 1000000007), 64);
  CHECK(near_neg.lo_d() >= -1.0);
  CHECK(near_neg.hi_d() < -0.9999999);
}

TEST_CASE("outward decimal bound strings") {
  Interval b(Rational(1, 3), 64);
  std::string lo = b.lo_str(20);
  std::string hi = b.hi_str(20);
  CHECK(lo.substr(0, 6) == "3.3333");
  CHECK(hi.substr(0, 6) == "3.3333");
  CHECK(lo <= hi);
}

TEST_CASE("certainly_less demands strict separation") {
  Interval a = Interval::from_bounds(Rational(0), Rational(1, 2), 64);
  Interval b = Interval::from_bounds(Rational(3, 4), Rational(1), 64);
  CHECK(certainly_less(a, b));
  CHECK_FALSE(certainly_less(b, a));
  Interval c = Interval::from_bounds(Rational(1, 2), Rational(7, 8), 64);
  CHECK_FALSE(certainly_less(a, c));
}

TEST_CASE("adaptive comparison separates close but distinct values") {
  // 1/3 vs 1/3 + 2^-100 separate only beyond 100 bits.
  Rational tiny = Rational(1) / (Rational(mpz_class(1) << 100));
  auto f = [](mpfr_prec_t p) { return Interval(Rational(1, 3), p); };
  auto g = [tiny](mpfr_prec_t p) {
    return Interval(Rational(1, 3) + tiny, p);
  };
  CHECK(compare_adaptive(f, g, 64, 1024) == Cmp::Less);
  CHECK(compare_adaptive(g, f, 64, 1024) == Cmp::Greater);
  CHECK(compare_adaptive(f, g, 64, 96) == Cmp::Undecided);
  CHECK(compare_adaptive(f, f, 64, 256) == Cmp::Undecided);
}

TEST_CASE("binary operations widen to the larger operand precision") {
  Interval lowp(Rational(1, 3), 64);
  Interval highp(Rational(1, 7), 256);
  CHECK((lowp + highp).precision() == 256);
  CHECK((highp * lowp).precision() == 256);
}

}
