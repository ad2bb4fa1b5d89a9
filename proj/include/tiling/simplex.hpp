#pragma once

#include <vector>

namespace tiling {

// Dense two-phase simplex for min c.x subject to A x = b, x >= 0.
// Bland's rule (lowest eligible index enters, lowest basis index breaks
// ratio ties) makes the pivot sequence deterministic and cycle-free.
struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

SimplexResult solve_simplex(std::vector<std::vector<double>> a,
                            std::vector<double> b, std::vector<double> c);

}  // namespace tiling
