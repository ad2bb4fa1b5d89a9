#pragma once

#include <vector>

#include "tiling/rational_angle.hpp"
#include "tiling/tetrahedron.hpp"

namespace tiling {

// Nonnegative integer coefficients per edge slot with
// sum coeffs[e] * angle[e] = target * pi (exact rational identity).
struct Combination {
  std::array<long, kNumEdges> coeffs{};
  int target = 1;  // multiple of pi: 1 or 2

  friend bool operator==(const Combination& a, const Combination& b) {
    return a.target == b.target && a.coeffs == b.coeffs;
  }
};

// All coefficient vectors reaching each requested target, exactly.
// Depth-first over slots with exact rational residuals and per-slot caps
// floor(target/angle); output ordered by target then lexicographically
// ascending in the coefficient vector. Vectors with identical angle-value
// multisets are distinct entries.
std::vector<Combination> enumerate_combinations(
    const Tetrahedron& t, const std::vector<int>& targets = {1, 2});

// Grouping of per-edge vectors by the multiset of (angle value, total
// coefficient): the value-level view.
struct ValueClass {
  int target = 1;
  std::vector<std::pair<Rational, long>> terms;  // sorted by angle value
  long multiplicity = 0;  // per-edge vectors collapsing to this class

  friend bool operator==(const ValueClass& a, const ValueClass& b) {
    return a.target == b.target && a.terms == b.terms;
  }
};

std::vector<ValueClass> value_classes(const std::vector<Combination>& combos,
                                      const Tetrahedron& t);

}  // namespace tiling
