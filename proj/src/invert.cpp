// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/invert.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mrenewal/closedform.hpp"
#include "mrenewal/error.hpp"

namespace mrenewal {

void check_config(const InversionConfig& cfg) {
  if (cfg.order % 2 != 0 || cfg.order < 4 || cfg.order > 18) {
    throw DomainError("inversion: Gaver-Stehfest order must be even and in [4, 18]");
  }
  if (cfg.euler_m < 0 || cfg.euler_n < 1) throw DomainError("inversion: invalid Euler term counts");
  if (!(cfg.euler_a > 0.0)) throw DomainError("inversion: Euler A must be > 0");
  if (!(cfg.t_min > 0.0)) throw DomainError("inversion: t_min must be > 0");
}

std::vector<double> stehfest_weights(int order) {
  if (order % 2 != 0 || order < 2 || order > 18) {
    throw DomainError("stehfest_weights: order must be even and <= 18");
  }
  auto fact = [](int n) {
    long double f = 1.0L;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  const int half = order / 2;
  std::vector<double> weights(order);
  for (int k = 1; k <= order; ++k) {
    long double v = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      v += std::pow(static_cast<long double>(j), half) * fact(2 * j) /
           (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
    }
    weights[k - 1] = static_cast<double>(((k + half) % 2 == 0) ? v : -v);
  }
  return weights;
}

double gaver_stehfest(const std::function<double(double)>& f, double t, int order) {
  if (!(t > 0.0)) throw DomainError("gaver_stehfest: requires t > 0");
  const auto weights = stehfest_weights(order);
  const double step = std::numbers::ln2 / t;
  double sum = 0.0;
  for (int k = 1; k <= order; ++k) sum += weights[k - 1] * f(k * step);
  return sum * step;
}

double euler_inversion(const std::function<std::complex<double>(std::complex<double>)>& f,
                       double t, int m, int n, double a) {
  if (!(t > 0.0)) throw DomainError("euler_inversion: requires t > 0");
  const double scale = std::exp(a / 2.0) / t;
  const double re = a / (2.0 * t);
  const double im_step = std::numbers::pi / t;

  // Partial sums S_0..S_{n+m} of the alternating series.
  std::vector<double> partial(n + m + 1);
  double running = 0.5 * scale * f({re, 0.0}).real();
  partial[0] = running;
  for (int k = 1; k <= n + m; ++k) {
    const double term = scale * f({re, k * im_step}).real();
    running += (k % 2 == 0) ? term : -term;
    partial[k] = running;
  }

  double result = 0.0;
  double coeff = std::pow(2.0, -m);  // C(m, 0) 2^-m
  for (int k = 0; k <= m; ++k) {
    result += coeff * partial[n + k];
    coeff = coeff * (m - k) / (k + 1);
  }
  return result;
}

std::vector<double> renewal_function(int i, int j, std::span<const double> t_grid,
                                     const QueueParams& p, Solver solver,
                                     const InversionConfig& cfg, Execution exec, int workers) {
  check_config(cfg);
  if (i < 0 || j < 0) throw DomainError("renewal_function: states must be >= 0");
  for (double t : t_grid) {
    if (!(t >= cfg.t_min)) {
      throw DomainError("renewal_function: t=" + std::to_string(t) + " below t_min");
    }
  }
  if (cfg.method == InversionMethod::euler && solver != Solver::oracle) {
    throw DomainError("renewal_function: Euler inversion needs the oracle solver (complex s)");
  }

  const MmInfKernel kernel(p);
  std::vector<double> out(t_grid.size());
  for_each_index(
      t_grid.size(),
      [&](std::size_t idx) {
        const double t = t_grid[idx];
        if (cfg.method == InversionMethod::gaver_stehfest) {
          auto lt = [&](double s) {
            const double rbar = solver == Solver::oracle
                                    ? solve_row_adaptive(i, s, kernel, cfg.truncation).at(j)
                                    : rbar_closed_form(i, j, s, p);
            return rbar / s;
          };
          out[idx] = gaver_stehfest(lt, t, cfg.order);
        } else {
          auto lt = [&](std::complex<double> s) {
            return solve_row_adaptive(i, s, kernel, cfg.truncation).at(j) / s;
          };
          out[idx] = euler_inversion(lt, t, cfg.euler_m, cfg.euler_n, cfg.euler_a);
        }
      },
      exec, workers);
  return out;
}

}  // namespace mrenewal
