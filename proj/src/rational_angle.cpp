#include "tiling/rational_angle.hpp"

#include <algorithm>

namespace tiling {

int slot_of_vertices(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int s = 0; s < kNumEdges; ++s) {
    if (kSlotVertices[s].first == a && kSlotVertices[s].second == b) return s;
  }
  throw OutOfRangeError("no edge slot for vertex pair");
}

RationalAngle RationalAngle::make_dihedral(const Rational& v) {
  RationalAngle a(v);
  if (!a.is_dihedral())
    throw OutOfRangeError("dihedral angle must lie strictly between 0 and pi: " +
                          a.str());
  return a;
}

RationalAngle RationalAngle::parse_dihedral(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw ParseError("angle must be written as p/q: " + text);
  mpz_class num, den;
  if (num.set_str(text.substr(0, slash), 10) != 0)
    throw ParseError("bad angle numerator: " + text);
  if (den.set_str(text.substr(slash + 1), 10) != 0)
    throw ParseError("bad angle denominator: " + text);
  if (den == 0) throw ParseError("angle denominator is zero: " + text);
  return make_dihedral(Rational(num, den));
}

std::string RationalAngle::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

AngleTuple make_angle_tuple(const std::array<Rational, kNumEdges>& values) {
  AngleTuple out;
  for (int i = 0; i < kNumEdges; ++i)
    out[i] = RationalAngle::make_dihedral(values[i]);
  return out;
}

RationalAngle angle_sum(const std::array<long, kNumEdges>& coeffs,
                        const AngleTuple& angles) {
  Rational total(0);
  for (int i = 0; i < kNumEdges; ++i) total += coeffs[i] * angles[i].value();
  return RationalAngle(total);
}

bool divides_two_pi(const RationalAngle& angle) {
  if (angle.value() <= 0) return false;
  mpz_class two_q = 2 * angle.denominator();
  return mpz_divisible_p(two_q.get_mpz_t(), angle.numerator().get_mpz_t()) != 0;
}

std::array<int, kNumEdges> induced_edge_map(const VertexPermutation& sigma) {
  std::array<int, kNumEdges> map{};
  for (int s = 0; s < kNumEdges; ++s) {
    auto [a, b] = kSlotVertices[s];
    map[slot_of_vertices(sigma[a], sigma[b])] = s;
  }
  return map;
}

AngleTuple permute_tuple(const AngleTuple& angles,
                         const VertexPermutation& sigma) {
  auto map = induced_edge_map(sigma);
  AngleTuple out;
  for (int s = 0; s < kNumEdges; ++s) out[s] = angles[map[s]];
  return out;
}

const std::vector<VertexPermutation>& all_vertex_permutations() {
  static const std::vector<VertexPermutation> perms = [] {
    std::vector<VertexPermutation> out;
    VertexPermutation p{0, 1, 2, 3};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

}  // namespace tiling
