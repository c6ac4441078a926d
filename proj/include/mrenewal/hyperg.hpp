// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace mrenewal {

/// Arguments of the confluent hypergeometric function M(a, b; z).
struct HypergeomArgs {
  double a;
  double b;
  double z;
};

inline constexpr double kKummerDefaultTol = 1e-18;
inline constexpr int kKummerMaxTerms = 10000;

/// term_{k+1} = term_k * (a + k) / (b + k) * z / (k + 1)
double pochhammer_ratio_step(double prev_term, double a, double b, double z, int k) noexcept;

/// Kummer's function M(a, b; z) = sum_k (a)_k / (b)_k z^k / k!.
///
/// Summation stops once three consecutive terms fall below tol * |partial sum|.
/// Negative z goes through M(a, b; z) = e^z M(b - a, b; -z) so that the summed
/// series has no alternating cancellation.
///
/// Throws InvalidParameter when b is within 1e-12 of 0, -1, -2, ... or tol is
/// outside (0, 1e-6]; ConvergenceError after kKummerMaxTerms terms.
double kummer_m(const HypergeomArgs& args, double tol = kKummerDefaultTol);

}  // namespace mrenewal
