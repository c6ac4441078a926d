// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "mrenewal/hyperg.hpp"
#include "mrenewal/model.hpp"

namespace mrenewal {

// Analytic solution for the M|M|∞ kernel.
//
// With t̄_ij = α r̄_ij / (j + ρ + αs), the generating function
// y_i(x) = sum_j t̄_ij x^j satisfies
//
//   (1 - x) y' - [ρ(1 - x) + αs] y + α x^i = 0,   y(1) = 1/s,
//
// whose solution bounded at x = 1 is
//
//   y_i(x) = α e^{-ρ(1-x)} sum_{k=0}^{i} (-1)^k C(i,k) (1-x)^k / (αs+k)
//                          · M(αs + k, αs + k + 1; ρ(1 - x)).
//
// Taking the n-th Taylor coefficient at x = 0 (Leibniz rule on
// w^k M(1, αs+k+1; w), w = -ρ(1-x)) gives
//
//   r̄_in(s) = (n/α + λ + s) sum_{k=0}^{i} (-1)^k C(i,k) α / (αs+k)
//             · sum_{j=0}^{min(n,k)} (-1)^j C(k,j) ρ^{n-j} / (αs+k+1)_{n-j}
//             · M(n - j + 1, αs + k + n - j + 1; -ρ)
//
// where (x)_m is the rising factorial. docs/closed_form.md has the derivation.

/// α·r̄ / (j + ρ + αs)
double tbar_from_rbar(int j, double s, double rbar, const QueueParams& p);
/// t̄·(j + ρ + αs) / α
double rbar_from_tbar(int j, double s, double tbar, const QueueParams& p);

/// C(n, k) by multiplicative recurrence in floating point.
double binomial(int n, int k);

/// y_i(x) for x in (-1, 1], s > 0.
double generating_function(int i, double x, double s, const QueueParams& p,
                           double tol = kKummerDefaultTol);

/// Residual of the generating-function ODE at x, with y' from central
/// differences of step h. O(h^2) at the true solution.
double ode_residual(int i, double x, double s, const QueueParams& p, double h,
                    double tol = kKummerDefaultTol);
/// Same residual for an arbitrary candidate y.
double ode_residual(const std::function<double(double)>& y, int i, double x, double s,
                    const QueueParams& p, double h);

/// r̄_in(s) from the closed form above.
double rbar_closed_form(int i, int n, double s, const QueueParams& p,
                        double tol = kKummerDefaultTol);

}  // namespace mrenewal
