#include "tiling/combinations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tiling {

namespace {

long floor_div(const Rational& target, const Rational& angle) {
  Rational q = target / angle;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(),
             q.get_den().get_mpz_t());
  return fl.get_si();
}

void search(const AngleTuple& angles, const std::array<long, kNumEdges>& caps,
            int slot, Rational residual, std::array<long, kNumEdges>& coeffs,
            int target, std::vector<Combination>& out) {
  if (slot == kNumEdges) {
    if (residual == 0) out.push_back({coeffs, target});
    return;
  }
  const Rational& a = angles[slot].value();
  long limit = std::min(caps[slot], floor_div(residual, a));
  Rational r = residual;
  for (long c = 0; c <= limit; ++c) {
    coeffs[slot] = c;
    search(angles, caps, slot + 1, r, coeffs, target, out);
    r -= a;
  }
  coeffs[slot] = 0;
}

}  // namespace

std::vector<Combination> enumerate_combinations(
    const Tetrahedron& t, const std::vector<int>& targets) {
  std::vector<Combination> out;
  for (int target : targets) {
    Rational goal(target);
    std::array<long, kNumEdges> caps{};
    for (int s = 0; s < kNumEdges; ++s)
      caps[s] = floor_div(goal, t.angle(s).value());
    std::array<long, kNumEdges> coeffs{};
    search(t.angles(), caps, 0, goal, coeffs, target, out);
  }
  for (const auto& c : out)
    if (angle_sum(c.coeffs, t.angles()).value() != Rational(c.target))
      throw std::logic_error("enumerated combination fails its exact identity");
  return out;
}

std::vector<ValueClass> value_classes(const std::vector<Combination>& combos,
                                      const Tetrahedron& t) {
  std::map<std::pair<int, std::vector<std::pair<Rational, long>>>, long>
      groups;
  for (const auto& c : combos) {
    std::map<Rational, long> totals;
    for (int s = 0; s < kNumEdges; ++s)
      if (c.coeffs[s] != 0) totals[t.angle(s).value()] += c.coeffs[s];
    std::vector<std::pair<Rational, long>> key(totals.begin(), totals.end());
    ++groups[{c.target, std::move(key)}];
  }
  std::vector<ValueClass> out;
  out.reserve(groups.size());
  for (const auto& [key, count] : groups)
    out.push_back({key.first, key.second, count});
  return out;
}

}  // namespace tiling
