#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

using Rational = mpq_class;

// Edge slots are indexed 0..5 in the fixed order (12, 34, 13, 24, 14, 23);
// vertices are 0-based here, so slot s joins the vertex pair kSlotVertices[s].
inline constexpr int kNumEdges = 6;
inline constexpr std::array<std::pair<int, int>, kNumEdges> kSlotVertices{
    {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}};

// Opposite edge pairs: slots (0,1), (2,3), (4,5).
inline constexpr std::array<std::pair<int, int>, 3> kOppositePairs{
    {{0, 1}, {2, 3}, {4, 5}}};

int slot_of_vertices(int a, int b);
inline int opposite_slot(int slot) { return slot ^ 1; }

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class OutOfRangeError : public std::runtime_error {
 public:
  explicit OutOfRangeError(const std::string& msg) : std::runtime_error(msg) {}
};

// An angle (p/q)*pi held as the exact reduced rational p/q. Values outside
// (0, 1) are representable (combination sums reach 2); make_dihedral enforces
// the open-interval constraint required of tetrahedron angles.
class RationalAngle {
 public:
  RationalAngle() : value_(0) {}
  explicit RationalAngle(Rational multiplier_of_pi)
      : value_(std::move(multiplier_of_pi)) {
    value_.canonicalize();
  }
  RationalAngle(long num, long den) : value_(num, den) {
    if (den == 0) throw ParseError("angle denominator is zero");
    value_.canonicalize();
  }

  static RationalAngle make_dihedral(const Rational& v);
  static RationalAngle parse_dihedral(const std::string& text);  // "p/q"

  const Rational& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_dihedral() const { return value_ > 0 && value_ < 1; }
  std::string str() const;  // "p/q"

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const RationalAngle& a, const RationalAngle& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const RationalAngle& a, const RationalAngle& b) {
    return a.value_ < b.value_;
  }

 private:
  Rational value_;
};

using AngleTuple = std::array<RationalAngle, kNumEdges>;
using VertexPermutation = std::array<int, 4>;

AngleTuple make_angle_tuple(const std::array<Rational, kNumEdges>& values);

// Sum of coeffs[e] * angles[e], exact.
RationalAngle angle_sum(const std::array<long, kNumEdges>& coeffs,
                        const AngleTuple& angles);

// True iff 2*pi is an integer multiple of the angle, i.e. p | 2q.
bool divides_two_pi(const RationalAngle& angle);

// Slot permutation induced by relabeling vertices; result[new slot] = old slot
// angle, i.e. out[slot(sigma(a), sigma(b))] = in[slot(a, b)].
std::array<int, kNumEdges> induced_edge_map(const VertexPermutation& sigma);
AngleTuple permute_tuple(const AngleTuple& angles,
                         const VertexPermutation& sigma);

const std::vector<VertexPermutation>& all_vertex_permutations();

}  // namespace tiling
