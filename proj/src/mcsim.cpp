// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mrenewal/error.hpp"
#include "mrenewal/rng.hpp"

namespace mrenewal {

EmbeddedStep step_embedded(int state, const QueueParams& p, double u_time, double u_move) {
  if (state < 0) throw DomainError("step_embedded: state must be >= 0");
  const double up_rate = p.lambda();
  const double rate = up_rate + state / p.alpha();
  if (rate == 0.0) return {state, std::numeric_limits<double>::infinity()};
  const double sojourn = -std::log(u_time) / rate;
  const int next = u_move * rate < up_rate ? state + 1 : state - 1;
  return {next, sojourn};
}

namespace {

constexpr std::int64_t kBlockPaths = 512;

struct BlockTotals {
  std::vector<std::uint64_t> sum;
  std::vector<std::uint64_t> sum_sq;
  std::int64_t overflow_path = -1;
};

}  // namespace

std::vector<RenewalEstimate> simulate_renewal_counts(int i, std::span<const int> j_set,
                                                     std::span<const double> t_grid,
                                                     const QueueParams& p, const SimConfig& cfg,
                                                     Execution exec) {
  if (cfg.n_paths < 1) throw DomainError("simulate: n_paths must be >= 1");
  if (!(cfg.t_max > 0.0)) throw DomainError("simulate: t_max must be > 0");
  if (cfg.max_events < 1) throw DomainError("simulate: max_events must be >= 1");
  if (i < 0) throw DomainError("simulate: start state must be >= 0");
  if (j_set.empty() || t_grid.empty()) throw DomainError("simulate: empty target or time grid");
  for (int j : j_set) {
    if (j < 0) throw DomainError("simulate: target states must be >= 0");
  }
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) {
    throw DomainError("simulate: t_grid must be ascending");
  }
  if (!(t_grid.front() > 0.0) || t_grid.back() > cfg.t_max) {
    throw DomainError("simulate: t_grid must lie in (0, t_max]");
  }

  const std::size_t n_targets = j_set.size();
  const std::size_t n_times = t_grid.size();
  const std::size_t cells = n_targets * n_times;
  const double horizon = t_grid.back();
  const std::int64_t n_blocks = (cfg.n_paths + kBlockPaths - 1) / kBlockPaths;

  std::vector<BlockTotals> blocks(n_blocks);
  for_each_index(
      static_cast<std::size_t>(n_blocks),
      [&](std::size_t b) {
        BlockTotals& tot = blocks[b];
        tot.sum.assign(cells, 0);
        tot.sum_sq.assign(cells, 0);
        std::vector<std::uint64_t> count(cells);

        const std::int64_t first = static_cast<std::int64_t>(b) * kBlockPaths;
        const std::int64_t last = std::min(cfg.n_paths, first + kBlockPaths);
        for (std::int64_t path = first; path < last; ++path) {
          std::fill(count.begin(), count.end(), 0);
          PathStream rng(cfg.seed, static_cast<std::uint64_t>(path));
          int state = i;
          double time = 0.0;
          std::int64_t events = 0;
          for (;;) {
            const double u_time = rng.next_open01();
            const double u_move = rng.next_open01();
            const EmbeddedStep step = step_embedded(state, p, u_time, u_move);
            time += step.sojourn;
            if (!(time <= horizon)) break;
            if (++events > cfg.max_events) {
              tot.overflow_path = path;
              return;
            }
            state = step.next_state;
            // Entry at `time` counts for every grid time >= `time`.
            const auto first_t = static_cast<std::size_t>(
                std::lower_bound(t_grid.begin(), t_grid.end(), time) - t_grid.begin());
            for (std::size_t q = 0; q < n_targets; ++q) {
              if (j_set[q] == state) ++count[q * n_times + first_t];
            }
          }
          for (std::size_t q = 0; q < n_targets; ++q) {
            std::uint64_t running = 0;
            for (std::size_t t = 0; t < n_times; ++t) {
              const std::size_t c = q * n_times + t;
              running += count[c];
              tot.sum[c] += running;
              tot.sum_sq[c] += running * running;
            }
          }
        }
      },
      exec, cfg.workers);

  std::vector<std::uint64_t> sum(cells, 0);
  std::vector<std::uint64_t> sum_sq(cells, 0);
  for (const BlockTotals& tot : blocks) {
    if (tot.overflow_path >= 0) {
      throw ConvergenceError("simulate: path " + std::to_string(tot.overflow_path) +
                             " exceeded max_events=" + std::to_string(cfg.max_events) +
                             "; estimate aborted");
    }
    for (std::size_t c = 0; c < cells; ++c) {
      sum[c] += tot.sum[c];
      sum_sq[c] += tot.sum_sq[c];
    }
  }

  std::vector<RenewalEstimate> out;
  out.reserve(cells);
  const auto n = static_cast<long double>(cfg.n_paths);
  for (std::size_t q = 0; q < n_targets; ++q) {
    for (std::size_t t = 0; t < n_times; ++t) {
      const std::size_t c = q * n_times + t;
      const long double s1 = static_cast<long double>(sum[c]);
      const long double s2 = static_cast<long double>(sum_sq[c]);
      const long double mean = s1 / n;
      long double se = 0.0L;
      if (cfg.n_paths > 1) {
        const long double var = std::max(0.0L, (s2 - s1 * mean) / (n - 1.0L));
        se = std::sqrt(var / n);
      }
      RenewalEstimate est;
      est.i = i;
      est.j = j_set[q];
      est.t = t_grid[t];
      est.mean = static_cast<double>(mean) + (i == j_set[q] ? 1.0 : 0.0);
      est.std_error = static_cast<double>(se);
      est.n_paths = cfg.n_paths;
      out.push_back(est);
    }
  }
  return out;
}

}  // namespace mrenewal
