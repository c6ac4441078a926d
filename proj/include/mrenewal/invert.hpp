// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "mrenewal/model.hpp"
#include "mrenewal/oracle.hpp"
#include "mrenewal/parallel.hpp"

namespace mrenewal {

enum class InversionMethod { gaver_stehfest, euler };
enum class Solver { oracle, closedform };

struct InversionConfig {
  InversionMethod method = InversionMethod::gaver_stehfest;
  /// Gaver-Stehfest order: even, 4..18.
  int order = 18;
  /// Euler: binomial averaging length m and partial-sum length n.
  int euler_m = 11;
  int euler_n = 38;
  /// Euler discretization parameter; error ~ e^{-A}.
  double euler_a = 18.4;
  double t_min = 1e-6;
  TruncationConfig truncation{};
};

/// Throws DomainError on an invalid configuration.
void check_config(const InversionConfig& cfg);

/// Stehfest weights V_1..V_order (index 0 holds V_1).
std::vector<double> stehfest_weights(int order);

/// Inverse of an ordinary Laplace transform F at t > 0 from real samples
/// F(k ln2 / t), k = 1..order.
double gaver_stehfest(const std::function<double(double)>& f, double t, int order = 18);

/// Abate-Whitt Euler-summation inversion; uses Re F on the line Re s = A/(2t).
double euler_inversion(const std::function<std::complex<double>(std::complex<double>)>& f,
                       double t, int m = 11, int n = 38, double a = 18.4);

/// R_ij(t) on t_grid, obtained by inverting r̄_ij(s)/s (r̄ is a
/// Laplace-Stieltjes transform, so dividing by s gives the ordinary transform
/// of R). Every t must be >= cfg.t_min. Euler requires Solver::oracle.
std::vector<double> renewal_function(int i, int j, std::span<const double> t_grid,
                                     const QueueParams& p, Solver solver,
                                     const InversionConfig& cfg = {},
                                     Execution exec = Execution::parallel, int workers = 0);

/// Serial reference for renewal_function.
inline std::vector<double> renewal_function_serial(int i, int j, std::span<const double> t_grid,
                                                   const QueueParams& p, Solver solver,
                                                   const InversionConfig& cfg = {}) {
  return renewal_function(i, j, t_grid, p, solver, cfg, Execution::serial);
}

}  // namespace mrenewal
