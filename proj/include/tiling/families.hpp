#pragma once

#include <array>
#include <vector>

#include "tiling/rational_angle.hpp"
#include "tiling/tetrahedron.hpp"

namespace tiling {

// (1/2, 1/2, 1 - 2x, 1/3, x, x) * pi for x in (1/6, 1/2) exclusive.
// Existence-checked; throws OutOfRangeError outside the interval.
Tetrahedron f1_member(const Rational& x);

// T_x = (5/6 - x, 1/6 + x, 2/3 - x, 2/3 - x, x, x) * pi for x in
// (1/6, 1/3], right-closed. Existence-checked; throws OutOfRangeError
// outside the interval.
Tetrahedron f2_member(const Rational& x);

// Value-level combination over the four distinct angle values of T_x:
// a*(5/6-x) + b*(1/6+x) + c*(2/3-x) + d*x = target, as an identity in x.
struct GeneralCombination {
  std::array<long, 4> coeffs{};  // (a, b, c, d)
  long target = 1;               // half-turns: 1 = pi, 2 = 2*pi

  friend bool operator==(const GeneralCombination& l,
                         const GeneralCombination& r) {
    return l.coeffs == r.coeffs && l.target == r.target;
  }
};

// Solves, over nonnegative integers, for the combinations that hold for
// every x: the x-coefficient b + d - a - c vanishes and the constant term
// (5a + b + 4c)/6 equals the target. Exactly three solutions:
// (1,1,0,0) -> pi, (2,2,0,0) -> 2*pi, (0,0,3,3) -> 2*pi.
std::vector<GeneralCombination> general_combinations();

struct SpecificMember {
  Rational x;
  Tetrahedron t;
};

// Scans all (a,b,c,d) in [0,12]^4 and both targets for identities with an
// x-dependent solution: k = b + d - a - c != 0 gives
// x = (target - (5a + b + 4c)/6) / k; keeps x in (1/6, 1/3], deduplicates
// by x, sorts ascending. These are the 23 members with combinations beyond
// the general three. The coefficient cap 12 is re-derived internally from
// the smallest angle value over the interval.
std::vector<SpecificMember> enumerate_specific();

// True iff x is none of the 23 specific values, so every pi/2pi
// combination of T_x holds identically in x. Throws OutOfRangeError for x
// outside (1/6, 1/3].
bool is_general(const Rational& x);

}  // namespace tiling
