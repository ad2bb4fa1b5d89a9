#include "tiling/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace tiling {

namespace {

Tetrahedron checked(const AngleTuple& angles) {
  Tetrahedron t(angles);
  Existence ex = check_existence(t);
  if (!ex.valid) {
    if (ex.reason == "numerically-undecided")
      throw PrecisionExhaustedError(
          "family member existence undecided at the precision cap");
    throw InvalidGeometryError("family member admits no tetrahedron (" +
                               ex.reason + ")");
  }
  return t;
}

// The four distinct angle values of T_x as linear forms c0 + c1*x.
struct LinearForm {
  Rational c0, c1;
  Rational at(const Rational& x) const { return c0 + c1 * x; }
};

const std::array<LinearForm, 4> kForms = {{
    {Rational(5, 6), Rational(-1)},  // a-coefficient value
    {Rational(1, 6), Rational(1)},   // b
    {Rational(2, 3), Rational(-1)},  // c (doubled edge)
    {Rational(0), Rational(1)},      // d (doubled edge)
}};

// Largest coefficient usable in a combination reaching at most 2 half-turns:
// every angle value exceeds the interval's smallest form value, attained at
// an endpoint since the forms are linear.
long coefficient_cap() {
  const Rational lo(1, 6), hi(1, 3);
  Rational least = kForms[0].at(lo);
  for (const auto& f : kForms) {
    least = std::min(least, f.at(lo));
    least = std::min(least, f.at(hi));
  }
  Rational cap = Rational(2) / least;
  if (cap.get_den() != 1 || cap.get_num().fits_slong_p() == 0)
    throw std::logic_error("coefficient cap must be a small integer");
  return cap.get_num().get_si();
}

}  // namespace

Tetrahedron f1_member(const Rational& x) {
  if (!(x > Rational(1, 6) && x < Rational(1, 2)))
    throw OutOfRangeError("family parameter " + x.get_str() +
                          " outside (1/6, 1/2)");
  return checked(make_angle_tuple(
      {Rational(1, 2), Rational(1, 2), Rational(1) - 2 * x, Rational(1, 3), x,
       x}));
}

Tetrahedron f2_member(const Rational& x) {
  if (!(x > Rational(1, 6) && x <= Rational(1, 3)))
    throw OutOfRangeError("family parameter " + x.get_str() +
                          " outside (1/6, 1/3]");
  return checked(make_angle_tuple(
      {Rational(5, 6) - x, Rational(1, 6) + x, Rational(2, 3) - x,
       Rational(2, 3) - x, x, x}));
}

std::vector<GeneralCombination> general_combinations() {
  const long cap = coefficient_cap();
  std::vector<GeneralCombination> out;
  for (long a = 0; a <= cap; ++a)
    for (long b = 0; b <= cap; ++b)
      for (long c = 0; c <= cap; ++c)
        for (long d = 0; d <= cap; ++d) {
          if (b + d - a - c != 0) continue;
          Rational constant(5 * a + b + 4 * c, 6);
          constant.canonicalize();
          if (constant == 1)
            out.push_back({{a, b, c, d}, 1});
          else if (constant == 2)
            out.push_back({{a, b, c, d}, 2});
        }
  return out;
}

std::vector<SpecificMember> enumerate_specific() {
  const long cap = coefficient_cap();
  std::map<Rational, bool> seen;
  for (long a = 0; a <= cap; ++a)
    for (long b = 0; b <= cap; ++b)
      for (long c = 0; c <= cap; ++c)
        for (long d = 0; d <= cap; ++d) {
          long k = b + d - a - c;
          if (k == 0) continue;
          Rational constant(5 * a + b + 4 * c, 6);
          constant.canonicalize();
          for (long target = 1; target <= 2; ++target) {
            Rational x = (Rational(target) - constant) / k;
            if (x > Rational(1, 6) && x <= Rational(1, 3)) seen[x] = true;
          }
        }
  std::vector<SpecificMember> out;
  out.reserve(seen.size());
  for (const auto& [x, unused] : seen) out.push_back({x, f2_member(x)});
  if (out.size() != 23)
    throw std::logic_error("specific-member scan must yield 23 values");
  return out;
}

bool is_general(const Rational& x) {
  if (!(x > Rational(1, 6) && x <= Rational(1, 3)))
    throw OutOfRangeError("family parameter " + x.get_str() +
                          " outside (1/6, 1/3]");
  static const std::vector<SpecificMember> specifics = enumerate_specific();
  return std::none_of(specifics.begin(), specifics.end(),
                      [&x](const SpecificMember& m) { return m.x == x; });
}

}  // namespace tiling
