#include "tiling/tetrahedron.hpp"

#include <algorithm>
#include <numeric>

namespace tiling {

namespace {

using Vec3 = std::array<Interval, 3>;
using Mat = std::vector<std::vector<Interval>>;

Interval det_n(const Mat& m, mpfr_prec_t p) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Interval acc(0L, p);
  for (size_t k = 0; k < n; ++k) {
    Mat sub(n - 1, std::vector<Interval>(n - 1, Interval(p)));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == k) continue;
        sub[r - 1][cc++] = m[r][c];
      }
    }
    Interval term = m[0][k] * det_n(sub, p);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Mat principal_minor(const Matrix4& g, int drop) {
  Mat m(3, std::vector<Interval>(3, Interval(2)));
  int rr = 0;
  for (int r = 0; r < 4; ++r) {
    if (r == drop) continue;
    int cc = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == drop) continue;
      m[rr][cc++] = g[r][c];
    }
    ++rr;
  }
  return m;
}

// adj[i][j] = (-1)^(i+j) * det(G with row j and column i removed)
Interval adjugate_entry(const Matrix4& g, int i, int j, mpfr_prec_t p) {
  Mat m(3, std::vector<Interval>(3, Interval(2)));
  int rr = 0;
  for (int r = 0; r < 4; ++r) {
    if (r == j) continue;
    int cc = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == i) continue;
      m[rr][cc++] = g[r][c];
    }
    ++rr;
  }
  Interval d = det_n(m, p);
  return ((i + j) % 2 == 0) ? d : -d;
}

Interval dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 sub3(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 neg3(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Interval positive_sqrt(const Interval& v, const char* what) {
  if (v.is_negative())
    throw InvalidGeometryError(std::string(what) + " is provably negative");
  if (!v.is_positive())
    throw PrecisionError(std::string(what) + " not provably positive");
  return v.sqrt();
}

bool overlap(const Interval& a, const Interval& b) {
  return !certainly_less(a, b) && !certainly_less(b, a);
}

// Solve <rows[k], v> = 1 for k = 0..2 by Cramer's rule.
Vec3 solve_unit_offsets(const std::array<Vec3, 3>& rows, mpfr_prec_t p) {
  Mat m(3, std::vector<Interval>(3, Interval(2)));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = rows[r][c];
  Interval d = det_n(m, p);
  if (d.contains_zero())
    throw PrecisionError("vertex system not provably nonsingular");
  Vec3 v{Interval(p), Interval(p), Interval(p)};
  Interval one(1L, p);
  for (int c = 0; c < 3; ++c) {
    Mat mc = m;
    for (int r = 0; r < 3; ++r) mc[r][c] = one;
    v[c] = det_n(mc, p) / d;
  }
  return v;
}

struct UnionFind {
  std::array<int, kNumEdges> parent;
  UnionFind() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string normalization_name(Normalization n) {
  return n == Normalization::MaxEdge ? "max-edge" : "unit-volume";
}

std::string pattern_name(PatternKind k) {
  switch (k) {
    case PatternKind::ParallelogramLike:
      return "ParallelogramLike";
    case PatternKind::AllDistinct:
      return "AllDistinct";
    case PatternKind::Other:
      return "Other";
    default:
      return "Undecided";
  }
}

Tetrahedron::Tetrahedron(AngleTuple angles) : angles_(std::move(angles)) {
  for (const auto& a : angles_)
    if (!a.is_dihedral())
      throw OutOfRangeError(
          "dihedral angle must lie strictly between 0 and pi: " + a.str());
}

Tetrahedron Tetrahedron::from_strings(
    const std::array<std::string, 6>& fracs) {
  AngleTuple angles;
  for (int i = 0; i < kNumEdges; ++i)
    angles[i] = RationalAngle::parse_dihedral(fracs[i]);
  return Tetrahedron(angles);
}

Matrix4 gram_matrix(const Tetrahedron& t, mpfr_prec_t precision) {
  Matrix4 g;
  for (int i = 0; i < 4; ++i) g[i][i] = Interval(1L, precision);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      int slot = opposite_slot(slot_of_vertices(i, j));
      Interval v = -cos_pi(t.angle(slot).value(), precision);
      g[i][j] = v;
      g[j][i] = v;
    }
  }
  return g;
}

Existence check_existence(const Tetrahedron& t, const NumericOptions& opts) {
  mpfr_prec_t p = opts.precision;
  while (true) {
    Matrix4 g = gram_matrix(t, p);

    Interval c2(0L, p);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        c2 = c2 + (Interval(1L, p) - g[i][j].square());
    Interval c3(0L, p);
    for (int drop = 0; drop < 4; ++drop)
      c3 = c3 + det_n(principal_minor(g, drop), p);
    Mat g4(4, std::vector<Interval>(4, Interval(2)));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) g4[r][c] = g[r][c];
    Interval c4 = det_n(g4, p);

    // Characteristic polynomial x^4 - 4x^3 + c2 x^2 - c3 x + c4 with all
    // roots real: rank-3 positive semidefiniteness is c4 = 0 with c2, c3 > 0.
    if (!c4.contains_zero())
      return {false, "determinant-nonzero", {}, p};
    if (c3.is_negative() || c2.is_negative())
      return {false, "spectrum-not-positive", {}, p};

    Matrix4 adj;
    bool all_positive = true;
    bool any_negative = false;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        adj[i][j] = adjugate_entry(g, i, j, p);
        if (!adj[i][j].is_positive()) all_positive = false;
        if (adj[i][j].is_negative()) any_negative = true;
      }
    }
    if (any_negative) return {false, "kernel-sign", {}, p};

    if (c2.is_positive() && c3.is_positive() && all_positive &&
        c4.width_below_2exp(-40)) {
      // The adjugate of a rank-3 Gram matrix is c3 * u u^T for the kernel
      // vector u, so row sums are proportional to the entries of u.
      std::array<Interval, 4> rows{Interval(p), Interval(p), Interval(p),
                                   Interval(p)};
      Interval total(0L, p);
      for (int i = 0; i < 4; ++i) {
        Interval r(0L, p);
        for (int j = 0; j < 4; ++j) r = r + adj[i][j];
        rows[i] = r;
        total = total + r;
      }
      std::array<Interval, 4> areas{Interval(p), Interval(p), Interval(p),
                                    Interval(p)};
      for (int i = 0; i < 4; ++i) areas[i] = rows[i] / total;
      return {true, "", areas, p};
    }

    if (p >= opts.max_precision)
      return {false, "numerically-undecided", {}, p};
    p = std::min(p * 2, opts.max_precision);
  }
}

std::array<Interval, kNumEdges> raw_edge_lengths_at(const Tetrahedron& t,
                                                    mpfr_prec_t precision) {
  const mpfr_prec_t p = precision;
  Matrix4 g = gram_matrix(t, p);
  Interval one(1L, p);
  Interval zero(0L, p);

  // Cholesky coordinates for the first three unit normals.
  Interval l21 = g[0][1];
  Interval l22 = positive_sqrt(one - l21.square(), "second factor pivot");
  Interval l31 = g[0][2];
  Interval l32 = (g[1][2] - l21 * l31) / l22;
  Interval l33 =
      positive_sqrt(one - l31.square() - l32.square(), "third factor pivot");
  Interval x1 = g[0][3];
  Interval x2 = (g[1][3] - l21 * x1) / l22;
  Interval x3 = (g[2][3] - l31 * x1 - l32 * x2) / l33;

  std::array<Vec3, 4> n;
  n[0] = {one, zero, zero};
  n[1] = {l21, l22, zero};
  n[2] = {l31, l32, l33};
  n[3] = {x1, x2, x3};

  Interval n4sq = x1.square() + x2.square() + x3.square();
  if (!n4sq.contains(Rational(1)))
    throw InvalidGeometryError(
        "fourth normal cannot be unit: angles admit no rank-3 realization");

  // Vertices of { x : <n_i, x> <= 1 }, a bounded tetrahedron when the
  // normals positively span space.
  std::array<Vec3, 4> v;
  for (int j = 0; j < 4; ++j) {
    std::array<Vec3, 3> rows;
    int rr = 0;
    for (int i = 0; i < 4; ++i)
      if (i != j) rows[rr++] = n[i];
    v[j] = solve_unit_offsets(rows, p);
    Interval side = dot(n[j], v[j]);
    if (certainly_less(one, side))
      throw InvalidGeometryError("vertex escapes its opposite half-space");
    if (!certainly_less(side, one))
      throw PrecisionError("vertex placement not provably interior");
  }

  // Recompute outward unit normals from the vertices and require agreement
  // with the Gram matrix: validates the whole factorization path.
  std::array<Vec3, 4> m;
  for (int j = 0; j < 4; ++j) {
    std::array<int, 3> f;
    int rr = 0;
    for (int i = 0; i < 4; ++i)
      if (i != j) f[rr++] = i;
    Vec3 raw = cross(sub3(v[f[1]], v[f[0]]), sub3(v[f[2]], v[f[0]]));
    Interval orient = dot(raw, sub3(v[j], v[f[0]]));
    if (orient.contains_zero())
      throw PrecisionError("face orientation not provably decided");
    if (orient.is_positive()) raw = neg3(raw);
    Interval norm = positive_sqrt(dot(raw, raw), "face normal magnitude");
    m[j] = {raw[0] / norm, raw[1] / norm, raw[2] / norm};
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!overlap(dot(m[i], m[j]), g[i][j]))
        throw InvalidGeometryError(
            "reconstructed dihedral angles contradict the inputs");

  std::array<Interval, kNumEdges> lengths{Interval(p), Interval(p),
                                          Interval(p), Interval(p),
                                          Interval(p), Interval(p)};
  for (int s = 0; s < kNumEdges; ++s) {
    auto [a, b] = kSlotVertices[s];
    Vec3 d = sub3(v[a], v[b]);
    lengths[s] = positive_sqrt(dot(d, d), "edge length");
  }
  return lengths;
}

const std::array<Interval, kNumEdges>& LengthOracle::raw_at(
    mpfr_prec_t precision) {
  auto it = cache_.find(precision);
  if (it == cache_.end())
    it = cache_.emplace(precision, raw_edge_lengths_at(t_, precision)).first;
  return it->second;
}

std::array<Interval, kNumEdges> LengthOracle::normalized_at(
    mpfr_prec_t precision) {
  const auto& raw = raw_at(precision);
  std::array<Interval, kNumEdges> out = raw;
  if (norm_ == Normalization::MaxEdge) {
    int top = 0;
    for (int s = 1; s < kNumEdges; ++s)
      if (mpfr_cmp(raw[s].hi(), raw[top].hi()) > 0) top = s;
    static const Rational kGuard = Rational(1) + Rational(1, mpz_class(1) << 40);
    for (int s = 0; s < kNumEdges; ++s) {
      out[s] = raw[s] / raw[top];
      if (out[s].hi_q() > kGuard)
        throw PrecisionError("normalized length exceeds the unit guard");
    }
    return out;
  }

  // Unit volume via the Cayley-Menger determinant: det = 288 V^2.
  Mat b(5, std::vector<Interval>(5, Interval(0L, precision)));
  for (int i = 1; i < 5; ++i) {
    b[0][i] = Interval(1L, precision);
    b[i][0] = Interval(1L, precision);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Interval d2 = raw[slot_of_vertices(i, j)].square();
      b[i + 1][j + 1] = d2;
      b[j + 1][i + 1] = d2;
    }
  }
  Interval det = det_n(b, precision);
  Interval vol = positive_sqrt(det / Interval(288L, precision), "squared volume");
  Interval scale = Interval(1L, precision) / vol.cbrt();
  for (int s = 0; s < kNumEdges; ++s) out[s] = raw[s] * scale;
  return out;
}

EdgeLengths edge_lengths(const Tetrahedron& t, Normalization norm,
                         const NumericOptions& opts) {
  LengthOracle oracle(t, norm);
  mpfr_prec_t p = opts.precision;
  while (true) {
    try {
      return EdgeLengths{oracle.normalized_at(p), norm, p};
    } catch (const PrecisionError&) {
      if (p >= opts.max_precision)
        throw PrecisionExhaustedError(
            "edge lengths undecided at the precision cap");
      p = std::min(p * 2, opts.max_precision);
    }
  }
}

std::vector<std::vector<int>> edge_equality_classes(const Tetrahedron& t) {
  UnionFind uf;
  for (const auto& sigma : all_vertex_permutations()) {
    if (permute_tuple(t.angles(), sigma) != t.angles()) continue;
    auto map = induced_edge_map(sigma);
    for (int s = 0; s < kNumEdges; ++s) uf.unite(s, map[s]);
  }
  std::vector<std::vector<int>> classes;
  for (int root = 0; root < kNumEdges; ++root) {
    if (uf.find(root) != root) continue;
    std::vector<int> members;
    for (int s = 0; s < kNumEdges; ++s)
      if (uf.find(s) == root) members.push_back(s);
    classes.push_back(std::move(members));
  }
  return classes;
}

Cmp compare_lengths(LengthOracle& oracle, int slot_a, int slot_b,
                    const NumericOptions& opts) {
  return compare_adaptive(
      [&oracle, slot_a](mpfr_prec_t p) { return oracle.raw_at(p)[slot_a]; },
      [&oracle, slot_b](mpfr_prec_t p) { return oracle.raw_at(p)[slot_b]; },
      opts.precision, opts.max_precision);
}

EdgePattern classify_pattern(const Tetrahedron& t,
                             const NumericOptions& opts) {
  std::array<int, kNumEdges> cls{};
  {
    auto classes = edge_equality_classes(t);
    for (size_t i = 0; i < classes.size(); ++i)
      for (int s : classes[i]) cls[s] = static_cast<int>(i);
  }
  LengthOracle oracle(t, Normalization::MaxEdge);

  EdgePattern out;
  for (int pr = 0; pr < 3; ++pr) {
    auto [a, b] = kOppositePairs[pr];
    if (cls[a] == cls[b]) out.equal_pairs.push_back(pr);
  }
  auto separated = [&](int s1, int s2) {
    return compare_lengths(oracle, s1, s2, opts) != Cmp::Undecided;
  };

  switch (out.equal_pairs.size()) {
    case 3:
      out.classification = PatternKind::Other;
      break;
    case 2: {
      int p1 = out.equal_pairs[0], p2 = out.equal_pairs[1];
      int third = 3 - p1 - p2;
      int a1 = kOppositePairs[p1].first;
      int a2 = kOppositePairs[p2].first;
      if (cls[a1] == cls[a2]) {
        // Both equal pairs share one value: not "unequal between them".
        out.classification = PatternKind::Other;
        break;
      }
      bool between = separated(a1, a2);
      bool within_third = separated(kOppositePairs[third].first,
                                    kOppositePairs[third].second);
      out.classification = (between && within_third)
                               ? PatternKind::ParallelogramLike
                               : PatternKind::Undecided;
      break;
    }
    case 1: {
      // One congruent pair is proven; ruling out a second one (which would
      // allow ParallelogramLike) needs both other pairs separated.
      bool all_sep = true;
      for (int pr = 0; pr < 3; ++pr) {
        if (pr == out.equal_pairs[0]) continue;
        all_sep = all_sep && separated(kOppositePairs[pr].first,
                                       kOppositePairs[pr].second);
      }
      out.classification =
          all_sep ? PatternKind::Other : PatternKind::Undecided;
      break;
    }
    default: {
      // No within-pair equality is provable. If all three pairs separate
      // within-pair, the shape cannot be parallelogram-like, and a proven
      // cross-pair equality already refutes AllDistinct.
      bool pairs_sep = true;
      for (int pr = 0; pr < 3; ++pr)
        pairs_sep = pairs_sep && separated(kOppositePairs[pr].first,
                                           kOppositePairs[pr].second);
      if (!pairs_sep) {
        out.classification = PatternKind::Undecided;
        break;
      }
      bool cross_equal = false;
      for (int i = 0; i < kNumEdges; ++i)
        for (int j = i + 1; j < kNumEdges; ++j)
          if (cls[i] == cls[j]) cross_equal = true;
      if (cross_equal) {
        out.classification = PatternKind::Other;
        break;
      }
      bool all_sep = true;
      for (int i = 0; i < kNumEdges && all_sep; ++i)
        for (int j = i + 1; j < kNumEdges && all_sep; ++j)
          all_sep = separated(i, j);
      out.classification =
          all_sep ? PatternKind::AllDistinct : PatternKind::Undecided;
      break;
    }
  }
  return out;
}

}  // namespace tiling
