#include <doctest.h>

#include <algorithm>

#include "tiling/lp.hpp"
#include "tiling/simplex.hpp"

using namespace tiling;

namespace {

Tetrahedron tet(std::initializer_list<Rational> vals) {
  std::array<Rational, kNumEdges> a;
  std::copy(vals.begin(), vals.end(), a.begin());
  return Tetrahedron(make_angle_tuple(a));
}

Tetrahedron family_member(const Rational& x) {
  return tet({Rational(5, 6) - x, Rational(1, 6) + x, Rational(2, 3) - x,
              Rational(2, 3) - x, x, x});
}

DMatrix matrix_for(const Tetrahedron& t) {
  return build_d_matrix(t, enumerate_combinations(t), Normalization::MaxEdge,
                        NumericOptions{});
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("simplex solves a basic program") {
  // min -x1 - x2 st x1 + x2 + s = 1.
  auto r = solve_simplex({{1, 1, 1}}, {1}, {-1, -1, 0});
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(-1.0));
  CHECK(r.x[0] + r.x[1] == doctest::Approx(1.0));
  CHECK(r.x[2] == doctest::Approx(0.0));
}

TEST_CASE("simplex detects infeasibility and unboundedness") {
  // x1 + x2 = -1 has no nonnegative solution.
  auto inf = solve_simplex({{1, 1}}, {-1}, {1, 1});
  CHECK(inf.status == SimplexResult::Status::Infeasible);

  // min -x1 st x1 - x2 = 0 runs off along the diagonal.
  auto unb = solve_simplex({{1, -1}}, {0}, {-1, 0});
  CHECK(unb.status == SimplexResult::Status::Unbounded);
}

TEST_CASE("simplex finishes on a classic cycling-prone program") {
  // Degenerate program known to cycle under naive pivoting; the lowest-index
  // rule must terminate at objective -1/20.
  std::vector<std::vector<double>> a{
      {0.25, -60.0, -0.04, 9.0, 1.0, 0.0, 0.0},
      {0.5, -90.0, -0.02, 3.0, 0.0, 1.0, 0.0},
      {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0}};
  std::vector<double> b{0.0, 0.0, 1.0};
  std::vector<double> c{-0.75, 150.0, -0.02, 6.0, 0.0, 0.0, 0.0};
  auto r = solve_simplex(a, b, c);
  REQUIRE(r.status == SimplexResult::Status::Optimal);
  CHECK(r.objective == doctest::Approx(-0.05).epsilon(1e-9));
}

TEST_CASE("simplex is deterministic") {
  std::vector<std::vector<double>> a{{2, 1, 1, 1, 0}, {1, 3, 2, 0, 1}};
  std::vector<double> b{10, 15};
  std::vector<double> c{-2, -3, -4, 0, 0};
  auto r1 = solve_simplex(a, b, c);
  auto r2 = solve_simplex(a, b, c);
  REQUIRE(r1.status == SimplexResult::Status::Optimal);
  CHECK(r1.objective == r2.objective);
  CHECK(r1.x == r2.x);
}

TEST_CASE("exact column values respect symmetry cancellation") {
  // Slots 0,1 share one length class, slots 2..5 another; antisymmetric
  // weights cancel exactly without any interval evaluation.
  Tetrahedron t = family_member(Rational(1, 3));
  std::vector<Combination> combos{{{1, 1, 0, 0, 0, 0}, 1},
                                  {{0, 0, 1, 1, 1, 1}, 1},
                                  {{1, 0, 0, 0, 0, 0}, 1}};
  DMatrix d = build_d_matrix(t, combos, Normalization::MaxEdge,
                             NumericOptions{});
  std::array<Rational, kNumEdges> y{Rational(1),  Rational(-1), Rational(2),
                                    Rational(-2), Rational(3),  Rational(-3)};
  CHECK(d.column_exactly_zero(0, y));
  CHECK(d.column_exactly_zero(1, y));
  CHECK_FALSE(d.column_exactly_zero(2, y));
  CHECK(d.column_value_at(2, y, 64).is_positive());

  std::array<Rational, kNumEdges> negs;
  negs.fill(Rational(-1));
  CHECK(d.column_value_at(0, negs, 64).is_negative());
}

TEST_CASE("certificate verification rejects bad candidates") {
  Tetrahedron t = family_member(Rational(19, 60));
  DMatrix d = matrix_for(t);

  std::array<Rational, kNumEdges> zero{};
  VerifyResult vz = verify_certificate(d, zero);
  CHECK_FALSE(vz.verified);
  CHECK(vz.rejected_column == -1);

  std::array<Rational, kNumEdges> negs;
  negs.fill(Rational(-1));
  VerifyResult vn = verify_certificate(d, negs);
  CHECK_FALSE(vn.verified);
  CHECK(vn.rejected_column >= 0);
}

TEST_CASE("certificate search succeeds on the x = 19/60 member") {
  Tetrahedron t = family_member(Rational(19, 60));
  DMatrix d = matrix_for(t);
  CertificateSearch s = find_certificate(d);
  REQUIRE(s.certificate.has_value());
  CHECK(s.certificate->objective < 0);
  CHECK(s.certificate->margin >= 0);
  CHECK(s.relaxed_optimum < -1e-6);

  Rational total(0);
  for (const auto& yi : s.certificate->y) total += yi;
  CHECK(total == s.certificate->objective);

  VerifyResult v = verify_certificate(d, s.certificate->y);
  CHECK(v.verified);
  CHECK_FALSE(primal_feasible(d));

  // Same inputs, same certificate.
  CertificateSearch again = find_certificate(d);
  REQUIRE(again.certificate.has_value());
  CHECK(again.certificate->y == s.certificate->y);
}

TEST_CASE("a frozen certificate for x = 1/4 re-verifies") {
  Tetrahedron t = family_member(Rational(1, 4));
  DMatrix d = matrix_for(t);
  std::array<Rational, kNumEdges> y{
      Rational(311529, 500000),  Rational(-965733, 1000000),
      Rational(-36653, 50000),   Rational(-36653, 50000),
      Rational(59599, 100000),   Rational(59599, 100000)};
  VerifyResult v = verify_certificate(d, y);
  CHECK(v.verified);
  CHECK(v.margin > 0);
  CHECK(v.margin < 1);

  CertificateSearch s = find_certificate(d);
  REQUIRE(s.certificate.has_value());
  CHECK(verify_certificate(d, s.certificate->y).verified);
}

TEST_CASE("verification is invariant under uniform rescaling") {
  Tetrahedron t = family_member(Rational(19, 60));
  DMatrix d = matrix_for(t);
  CertificateSearch s = find_certificate(d);
  REQUIRE(s.certificate.has_value());

  DMatrix doubled = d.scaled(Rational(2));
  DMatrix shrunk = d.scaled(Rational(1, 3));
  CHECK(verify_certificate(doubled, s.certificate->y).verified);
  CHECK(verify_certificate(shrunk, s.certificate->y).verified);
}

TEST_CASE("no certificate exists for members that tile") {
  Tetrahedron t = family_member(Rational(1, 3));
  DMatrix d = matrix_for(t);
  CertificateSearch s = find_certificate(d);
  CHECK_FALSE(s.certificate.has_value());
  CHECK_FALSE(s.precision_limited);
  CHECK(s.relaxed_optimum > -1e-6);
  CHECK(primal_feasible(d));
}

TEST_CASE("a primal-feasible specific member yields no certificate") {
  Tetrahedron t = family_member(Rational(5, 24));
  DMatrix d = matrix_for(t);
  CertificateSearch s = find_certificate(d);
  CHECK_FALSE(s.certificate.has_value());
  CHECK(primal_feasible(d));
}

TEST_CASE("an empty matrix yields the trivial certificate") {
  Tetrahedron t = family_member(Rational(1, 3));
  DMatrix d = build_d_matrix(t, {}, Normalization::MaxEdge, NumericOptions{});
  CHECK(d.columns() == 0);
  CertificateSearch s = find_certificate(d);
  REQUIRE(s.certificate.has_value());
  CHECK(s.certificate->objective == Rational(-6));
  for (const auto& yi : s.certificate->y) CHECK(yi == Rational(-1));
  CHECK(verify_certificate(d, s.certificate->y).verified);
}

TEST_CASE("rounded certificate entries have bounded denominators") {
  Tetrahedron t = family_member(Rational(19, 60));
  DMatrix d = matrix_for(t);
  CertificateSearch s = find_certificate(d, 1000);
  if (s.certificate) {
    for (const auto& yi : s.certificate->y) {
      CHECK(yi.get_den() <= 1000);
    }
  }
  // The default denominator must still succeed on this member.
  CHECK(find_certificate(d).certificate.has_value());
}

}
