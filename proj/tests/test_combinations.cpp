#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "tiling/combinations.hpp"

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

// Independent enumeration: clear all denominators, then scan the integer box.
std::vector<std::array<long, kNumEdges>> brute_force(const Tetrahedron& t,
                                                     int target) {
  mpz_class common(1);
  for (int s = 0; s < kNumEdges; ++s)
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
            t.angle(s).denominator().get_mpz_t());
  long weights[kNumEdges];
  long goal = mpz_class(common * target).get_si();
  for (int s = 0; s < kNumEdges; ++s)
    weights[s] = mpz_class(t.angle(s).numerator() * common /
                           t.angle(s).denominator())
                     .get_si();
  std::vector<std::array<long, kNumEdges>> out;
  std::array<long, kNumEdges> c{};
  for (c[0] = 0; c[0] * weights[0] <= goal; ++c[0])
    for (c[1] = 0; c[1] * weights[1] <= goal; ++c[1])
      for (c[2] = 0; c[2] * weights[2] <= goal; ++c[2])
        for (c[3] = 0; c[3] * weights[3] <= goal; ++c[3])
          for (c[4] = 0; c[4] * weights[4] <= goal; ++c[4])
            for (c[5] = 0; c[5] * weights[5] <= goal; ++c[5]) {
              long sum = 0;
              for (int s = 0; s < kNumEdges; ++s) sum += c[s] * weights[s];
              if (sum == goal) out.push_back(c);
            }
  return out;
}

}  // namespace

TEST_SUITE("combinations") {

TEST_CASE("unique half-turn combination at x = 19/60") {
  Tetrahedron t = family_member(Rational(19, 60));
  auto pi_only = enumerate_combinations(t, {1});
  REQUIRE(pi_only.size() == 1);
  CHECK(pi_only[0].coeffs == std::array<long, kNumEdges>{1, 1, 0, 0, 0, 0});
  CHECK(pi_only[0].target == 1);

  auto two_pi = enumerate_combinations(t, {2});
  CHECK(two_pi.size() == 17);
  for (const auto& c : two_pi) CHECK(c.target == 2);
  // The doubled half-turn combination is among them.
  Combination doubled{{2, 2, 0, 0, 0, 0}, 2};
  CHECK(std::count(two_pi.begin(), two_pi.end(), doubled) == 1);
}

TEST_CASE("default targets produce both groups in order") {
  Tetrahedron t = family_member(Rational(19, 60));
  auto all = enumerate_combinations(t);
  CHECK(all.size() == 18);
  CHECK(all[0].target == 1);
  for (size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i].target == 2);
    if (i >= 2) CHECK(all[i - 1].coeffs < all[i].coeffs);
  }
}

TEST_CASE("counts at x = 1/3") {
  Tetrahedron t = family_member(Rational(1, 3));
  CHECK(enumerate_combinations(t, {1}).size() == 23);
  CHECK(enumerate_combinations(t, {2}).size() == 149);
}

TEST_CASE("counts at x = 1/4") {
  Tetrahedron t = family_member(Rational(1, 4));
  CHECK(enumerate_combinations(t, {1}).size() == 8);
  CHECK(enumerate_combinations(t, {2}).size() == 72);
}

TEST_CASE("a tuple with no half-turn combinations") {
  Tetrahedron t = tet({Rational(4, 7), Rational(2, 7), Rational(2, 5),
                       Rational(4, 5), Rational(2, 5), Rational(3, 11)});
  CHECK(enumerate_combinations(t, {1}).empty());
}

TEST_CASE("agreement with an independent brute-force enumeration") {
  const Tetrahedron cases[] = {
      family_member(Rational(19, 60)),
      family_member(Rational(1, 4)),
      tet({Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(1, 3),
           Rational(1, 4), Rational(1, 4)}),
      tet({Rational(2, 3), Rational(1, 5), Rational(1, 2), Rational(1, 3),
           Rational(2, 5), Rational(1, 6)}),
  };
  for (const auto& t : cases) {
    for (int target : {1, 2}) {
      auto got = enumerate_combinations(t, {target});
      auto want = brute_force(t, target);
      std::sort(want.begin(), want.end());
      REQUIRE(got.size() == want.size());
      for (size_t i = 0; i < got.size(); ++i)
        CHECK(got[i].coeffs == want[i]);
    }
  }
}

TEST_CASE("value classes collapse equal angle values") {
  Tetrahedron t = family_member(Rational(1, 3));
  auto pi_classes = value_classes(enumerate_combinations(t, {1}), t);
  REQUIRE(pi_classes.size() == 2);
  // Three copies of 1/3, distributed over four slots, in 20 ways.
  CHECK(pi_classes[0].terms ==
        std::vector<std::pair<Rational, long>>{{Rational(1, 3), 3}});
  CHECK(pi_classes[0].multiplicity == 20);
  // Two copies of 1/2, over two slots, in 3 ways.
  CHECK(pi_classes[1].terms ==
        std::vector<std::pair<Rational, long>>{{Rational(1, 2), 2}});
  CHECK(pi_classes[1].multiplicity == 3);

  auto two_pi_classes = value_classes(enumerate_combinations(t, {2}), t);
  CHECK(two_pi_classes.size() == 3);
  long total = 0;
  for (const auto& vc : two_pi_classes) total += vc.multiplicity;
  CHECK(total == 149);
}

TEST_CASE("every enumerated combination satisfies its identity exactly") {
  Tetrahedron t = family_member(Rational(5, 24));
  for (const auto& c : enumerate_combinations(t)) {
    CHECK(angle_sum(c.coeffs, t.angles()).value() == Rational(c.target));
  }
}

}
