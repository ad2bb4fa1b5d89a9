#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiling/interval.hpp"
#include "tiling/rational_angle.hpp"

namespace tiling {

class InvalidGeometryError : public std::runtime_error {
 public:
  explicit InvalidGeometryError(const std::string& msg)
      : std::runtime_error(msg) {}
};

class PrecisionExhaustedError : public std::runtime_error {
 public:
  explicit PrecisionExhaustedError(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct NumericOptions {
  mpfr_prec_t precision = 64;
  mpfr_prec_t max_precision = 1024;
};

enum class Normalization { MaxEdge, UnitVolume };

std::string normalization_name(Normalization n);

// Six dihedral angles in slot order (12, 34, 13, 24, 14, 23). Construction
// validates only the per-angle range; realizability is check_existence.
class Tetrahedron {
 public:
  explicit Tetrahedron(AngleTuple angles);
  static Tetrahedron from_strings(const std::array<std::string, 6>& fracs);

  const AngleTuple& angles() const { return angles_; }
  const RationalAngle& angle(int slot) const { return angles_[slot]; }
  Tetrahedron relabeled(const VertexPermutation& sigma) const {
    return Tetrahedron(permute_tuple(angles_, sigma));
  }

  friend bool operator==(const Tetrahedron& a, const Tetrahedron& b) {
    return a.angles_ == b.angles_;
  }

 private:
  AngleTuple angles_;
};

using Matrix4 = std::array<std::array<Interval, 4>, 4>;

// Gram matrix of the four unit outward face normals: unit diagonal,
// G[i][j] = -cos(angle at the edge joining the two faces), which is the
// angle at the slot opposite to the vertex pair {i, j}.
Matrix4 gram_matrix(const Tetrahedron& t, mpfr_prec_t precision);

struct Existence {
  bool valid = false;
  // On failure: "determinant-nonzero" (Gram matrix has full rank),
  // "spectrum-not-positive" (fewer than three positive eigenvalues),
  // "kernel-sign" (kernel vector has mixed signs, so no positive face-area
  // weights exist), or "numerically-undecided" (precision cap reached).
  std::string reason;
  // Kernel vector of the Gram matrix normalized to sum 1: the relative
  // face areas (Minkowski weights). Entries provably positive when valid.
  std::array<Interval, 4> areas;
  mpfr_prec_t precision = 0;
};

// Valid iff the Gram matrix is positive semidefinite of rank 3 (three
// eigenvalues provably positive, determinant enclosing 0 within 2^-40)
// and its one-dimensional kernel is spanned by a one-sign vector.
Existence check_existence(const Tetrahedron& t,
                          const NumericOptions& opts = {});

struct EdgeLengths {
  std::array<Interval, kNumEdges> lengths;
  Normalization normalization = Normalization::MaxEdge;
  mpfr_prec_t precision = 0;
};

// Single-precision reconstruction: factor the Gram matrix, place face
// planes at unit offset, intersect for vertices, cross-validate recomputed
// normals against the Gram matrix, and return the six distances (unscaled).
// Throws PrecisionError when a step is undecidable at this precision and
// InvalidGeometryError on a proven contradiction.
std::array<Interval, kNumEdges> raw_edge_lengths_at(const Tetrahedron& t,
                                                    mpfr_prec_t precision);

// Memoizing per-precision length provider; also applies normalization.
class LengthOracle {
 public:
  LengthOracle(Tetrahedron t, Normalization norm)
      : t_(std::move(t)), norm_(norm) {}

  const Tetrahedron& tetrahedron() const { return t_; }
  Normalization normalization() const { return norm_; }
  const std::array<Interval, kNumEdges>& raw_at(mpfr_prec_t precision);
  std::array<Interval, kNumEdges> normalized_at(mpfr_prec_t precision);

 private:
  Tetrahedron t_;
  Normalization norm_;
  std::map<mpfr_prec_t, std::array<Interval, kNumEdges>> cache_;
};

// Adaptive wrapper: escalates precision from opts.precision to the cap;
// throws PrecisionExhaustedError if still undecided there.
EdgeLengths edge_lengths(const Tetrahedron& t, Normalization norm,
                         const NumericOptions& opts = {});

// Orbits of the edge slots under the vertex relabelings that fix the angle
// tuple exactly. Two slots in one class have exactly equal lengths: an
// angle-preserving relabeling is realized by an isometry of the tetrahedron.
// Classes are sorted by smallest member.
std::vector<std::vector<int>> edge_equality_classes(const Tetrahedron& t);

enum class PatternKind { ParallelogramLike, AllDistinct, Other, Undecided };

std::string pattern_name(PatternKind k);

struct EdgePattern {
  PatternKind classification = PatternKind::Undecided;
  // Opposite-pair indices (0: slots {0,1}, 1: {2,3}, 2: {4,5}) proven
  // equal within-pair by exact symmetry.
  std::vector<int> equal_pairs;
};

// ParallelogramLike iff exactly two opposite pairs are proven equal
// within-pair, those two pairs are separated from each other, and the third
// pair is separated within-pair. AllDistinct iff all 15 slot pairs separate.
// Equality is only ever concluded from exact symmetry, inequality only from
// interval separation; anything else is Undecided.
EdgePattern classify_pattern(const Tetrahedron& t,
                             const NumericOptions& opts = {});

// Three-way length comparison between two slots (raw lengths; comparisons
// are scale-free), adaptive in precision.
Cmp compare_lengths(LengthOracle& oracle, int slot_a, int slot_b,
                    const NumericOptions& opts);

}  // namespace tiling
