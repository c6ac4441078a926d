// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/sweep.hpp"

#include <cmath>

#include "mrenewal/closedform.hpp"
#include "mrenewal/error.hpp"

namespace mrenewal {

std::vector<TransformPoint> transform_sweep(int i, int j, std::span<const double> s_grid,
                                            const QueueParams& p, TransformSolver solver,
                                            const TruncationConfig& truncation, Execution exec,
                                            int workers) {
  if (i < 0 || j < 0) throw DomainError("transform_sweep: states must be >= 0");
  const MmInfKernel kernel(p);
  std::vector<TransformPoint> out(s_grid.size());
  for_each_index(
      s_grid.size(),
      [&](std::size_t idx) {
        TransformPoint& pt = out[idx];
        pt.s = s_grid[idx];
        if (solver != TransformSolver::closedform) {
          pt.oracle = solve_row_adaptive(i, pt.s, kernel, truncation).at(j);
        }
        if (solver != TransformSolver::oracle) {
          pt.closedform = rbar_closed_form(i, j, pt.s, p);
        }
        if (solver == TransformSolver::both) {
          const double diff = std::abs(*pt.closedform - *pt.oracle);
          pt.rel_diff = *pt.oracle != 0.0 ? diff / std::abs(*pt.oracle) : diff;
        }
      },
      exec, workers);
  return out;
}

}  // namespace mrenewal
