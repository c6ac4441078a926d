// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mrenewal/closedform.hpp"
#include "mrenewal/invert.hpp"
#include "mrenewal/mcsim.hpp"
#include "mrenewal/oracle.hpp"

namespace mrenewal {

namespace {

std::string label(const char* fmt, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

void two_oracle(bool quick, std::vector<CheckResult>& out) {
  const std::vector<int> starts = quick ? std::vector<int>{0, 2} : std::vector<int>{0, 1, 2, 5};
  const std::vector<double> ss = {0.1, 1.0, 10.0};
  const std::vector<std::pair<double, double>> params = {{0.5, 1.0}, {1.0, 1.0}, {2.0, 0.5}};
  constexpr int n = 256;
  for (auto [lambda, alpha] : params) {
    const QueueParams p(lambda, alpha);
    const MmInfKernel k(p);
    for (double s : ss) {
      for (int i : starts) {
        const auto direct = solve_row_truncated(i, s, k, n);
        const auto series = neumann_series_converged(i, s, k, n, 1e-13);
        double err = 0.0;
        for (int j = 0; j <= n; ++j) err = std::max(err, std::abs(direct.values[j] - series.values[j]));
        out.push_back({"two-oracle", label("lambda=%g alpha=%g s=%g i=%d", lambda, alpha, s, i),
                       err <= 1e-8, err, 1e-8});
      }
    }
  }
}

void closed_form_vs_oracle(bool quick, std::vector<CheckResult>& out) {
  const std::vector<double> rhos = quick ? std::vector<double>{1.0} : std::vector<double>{0.5, 1.0, 2.0};
  const std::vector<double> ss = {0.5, 1.0, 5.0};
  for (double rho : rhos) {
    const QueueParams p(rho, 1.0);
    const MmInfKernel k(p);
    for (double s : ss) {
      for (int i = 0; i <= 4; ++i) {
        const auto row = solve_row_adaptive(i, s, k);
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
          const double o = row.at(n);
          const double cf = rbar_closed_form(i, n, s, p);
          // Scaled so that <= 1 means within max(1e-6 |o|, 1e-9).
          worst = std::max(worst, std::abs(cf - o) / std::max(1e-6 * std::abs(o), 1e-9));
        }
        out.push_back({"closed-form-vs-oracle", label("rho=%g s=%g i=%d n=0..4", rho, s, i),
                       worst <= 1.0, worst, 1.0});
      }
    }
  }
}

void inversion_vs_simulation(bool quick, std::vector<CheckResult>& out) {
  const QueueParams p(1.0, 1.0);
  const std::vector<double> times = {0.5, 1.0, 2.0};
  const std::vector<int> targets = {0, 1};
  SimConfig sim;
  sim.n_paths = quick ? 20'000 : 100'000;
  sim.seed = 20261015;
  sim.t_max = times.back();
  const auto mc = simulate_renewal_counts(0, targets, times, p, sim);
  for (std::size_t q = 0; q < targets.size(); ++q) {
    const auto inv = renewal_function(0, targets[q], times, p, Solver::oracle);
    for (std::size_t t = 0; t < times.size(); ++t) {
      const auto& est = mc[q * times.size() + t];
      const double z = std::abs(inv[t] - est.mean) / std::max(est.std_error, 1e-300);
      out.push_back({"inversion-vs-simulation",
                     label("R_0%d(%g) inv=%.6f mc=%.6f se=%.2g", targets[q], times[t], inv[t],
                           est.mean, est.std_error),
                     z <= 3.0, z, 3.0});
    }
  }
}

}  // namespace

std::vector<CheckResult> run_validation(bool quick) {
  std::vector<CheckResult> out;
  two_oracle(quick, out);
  closed_form_vs_oracle(quick, out);
  inversion_vs_simulation(quick, out);
  return out;
}

}  // namespace mrenewal
