#include "tiling/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace tiling {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kFeasEps = 1e-7;

struct Tableau {
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<int> basis;
  std::vector<double> robj;  // reduced costs
  double z = 0.0;

  size_t m() const { return rows.size(); }

  void pivot(size_t pi, size_t pj) {
    double piv = rows[pi][pj];
    z += robj[pj] * (rhs[pi] / piv);
    for (double& v : rows[pi]) v /= piv;
    rhs[pi] /= piv;
    for (size_t r = 0; r < m(); ++r) {
      if (r == pi) continue;
      double f = rows[r][pj];
      if (f == 0.0) continue;
      for (size_t c = 0; c < rows[r].size(); ++c)
        rows[r][c] -= f * rows[pi][c];
      rhs[r] -= f * rhs[pi];
    }
    double f = robj[pj];
    for (size_t c = 0; c < robj.size(); ++c) robj[c] -= f * rows[pi][c];
    basis[pi] = static_cast<int>(pj);
  }

  // Returns false when unbounded.
  bool run(size_t cols) {
    while (true) {
      size_t enter = cols;
      for (size_t j = 0; j < cols; ++j) {
        if (robj[j] < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return true;
      size_t leave = m();
      double best = 0.0;
      for (size_t i = 0; i < m(); ++i) {
        if (rows[i][enter] <= kPivotEps) continue;
        double ratio = rhs[i] / rows[i][enter];
        if (leave == m() || ratio < best - kPivotEps ||
            (ratio < best + kPivotEps && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m()) return false;
      pivot(leave, enter);
    }
  }

  void reset_costs(const std::vector<double>& cost) {
    z = 0.0;
    for (size_t i = 0; i < m(); ++i) z += cost[basis[i]] * rhs[i];
    robj.assign(cost.size(), 0.0);
    for (size_t j = 0; j < cost.size(); ++j) {
      double r = cost[j];
      for (size_t i = 0; i < m(); ++i) r -= cost[basis[i]] * rows[i][j];
      robj[j] = r;
    }
  }
};

}  // namespace

SimplexResult solve_simplex(std::vector<std::vector<double>> a,
                            std::vector<double> b, std::vector<double> c) {
  const size_t m = a.size();
  const size_t n = c.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("ragged constraint row");
  if (b.size() != m) throw std::invalid_argument("rhs size mismatch");

  Tableau t;
  t.rows.assign(m, std::vector<double>(n + m, 0.0));
  t.rhs.assign(m, 0.0);
  t.basis.assign(m, 0);
  for (size_t i = 0; i < m; ++i) {
    double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (size_t j = 0; j < n; ++j) t.rows[i][j] = sign * a[i][j];
    t.rows[i][n + i] = 1.0;
    t.rhs[i] = sign * b[i];
    t.basis[i] = static_cast<int>(n + i);
  }

  std::vector<double> phase1_cost(n + m, 0.0);
  for (size_t j = n; j < n + m; ++j) phase1_cost[j] = 1.0;
  t.reset_costs(phase1_cost);
  if (!t.run(n + m)) return {SimplexResult::Status::Unbounded, 0.0, {}};
  if (t.z > kFeasEps) return {SimplexResult::Status::Infeasible, t.z, {}};

  // Drive basic artificials out; drop rows that prove redundant.
  for (size_t i = 0; i < t.m();) {
    if (t.basis[i] < static_cast<int>(n)) {
      ++i;
      continue;
    }
    size_t pj = n;
    for (size_t j = 0; j < n; ++j) {
      if (std::fabs(t.rows[i][j]) > kPivotEps) {
        pj = j;
        break;
      }
    }
    if (pj < n) {
      t.pivot(i, pj);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.rhs.erase(t.rhs.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }
  for (auto& row : t.rows) row.resize(n);

  std::vector<double> cost = c;
  t.reset_costs(cost);
  if (!t.run(n)) return {SimplexResult::Status::Unbounded, 0.0, {}};

  SimplexResult out;
  out.status = SimplexResult::Status::Optimal;
  out.objective = t.z;
  out.x.assign(n, 0.0);
  for (size_t i = 0; i < t.m(); ++i) out.x[t.basis[i]] = t.rhs[i];
  return out;
}

}  // namespace tiling
