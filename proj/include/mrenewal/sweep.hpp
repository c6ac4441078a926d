// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mrenewal/model.hpp"
#include "mrenewal/oracle.hpp"
#include "mrenewal/parallel.hpp"

namespace mrenewal {

enum class TransformSolver { oracle, closedform, both };

struct TransformPoint {
  double s = 0.0;
  std::optional<double> oracle;
  std::optional<double> closedform;
  /// |closedform - oracle| / |oracle| (absolute difference when oracle is 0);
  /// set only for TransformSolver::both.
  std::optional<double> rel_diff;
};

/// r̄_ij(s) over an s grid, one independent solve per point.
std::vector<TransformPoint> transform_sweep(int i, int j, std::span<const double> s_grid,
                                            const QueueParams& p, TransformSolver solver,
                                            const TruncationConfig& truncation = {},
                                            Execution exec = Execution::parallel,
                                            int workers = 0);

inline std::vector<TransformPoint> transform_sweep_serial(int i, int j,
                                                          std::span<const double> s_grid,
                                                          const QueueParams& p,
                                                          TransformSolver solver,
                                                          const TruncationConfig& truncation = {}) {
  return transform_sweep(i, j, s_grid, p, solver, truncation, Execution::serial);
}

}  // namespace mrenewal
