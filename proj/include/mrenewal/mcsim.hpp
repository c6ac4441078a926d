// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrenewal/model.hpp"
#include "mrenewal/parallel.hpp"

namespace mrenewal {

struct SimConfig {
  std::int64_t n_paths = 100'000;
  std::uint64_t seed = 1;
  double t_max = 1.0;
  std::int64_t max_events = 10'000'000;
  /// OpenMP threads for the parallel kernel; 0 = runtime default.
  int workers = 0;
};

/// Monte Carlo estimate of R_ij(t) = δ_ij + E[# entries into j during (0, t]].
struct RenewalEstimate {
  int i = 0;
  int j = 0;
  double t = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_paths = 0;
};

struct EmbeddedStep {
  int next_state;
  double sojourn;  // +inf when absorbed
};

/// One transition of the M|M|∞ embedded chain from `state`: an exponential race
/// between one arrival (rate λ) and `state` services (rate 1/α each).
/// u_time drives the sojourn, u_move the direction; both in (0, 1).
/// With λ = 0 and state = 0 nothing can happen and the step is absorbed.
EmbeddedStep step_embedded(int state, const QueueParams& p, double u_time, double u_move);

/// Estimates R_ij(t) for every j in j_set and t in t_grid (ascending, within
/// (0, t_max]). Results are ordered j-major in j_set order, then by t.
///
/// Paths are grouped in fixed blocks and counted with exact integer
/// accumulators, so the output is bit-identical for any number of workers.
/// Throws ConvergenceError if a path exceeds max_events.
std::vector<RenewalEstimate> simulate_renewal_counts(int i, std::span<const int> j_set,
                                                     std::span<const double> t_grid,
                                                     const QueueParams& p, const SimConfig& cfg,
                                                     Execution exec = Execution::parallel);

/// Serial reference for simulate_renewal_counts.
inline std::vector<RenewalEstimate> simulate_renewal_counts_serial(
    int i, std::span<const int> j_set, std::span<const double> t_grid, const QueueParams& p,
    const SimConfig& cfg) {
  return simulate_renewal_counts(i, j_set, t_grid, p, cfg, Execution::serial);
}

}  // namespace mrenewal
