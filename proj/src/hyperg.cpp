// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/hyperg.hpp"

#include <cmath>
#include <string>

#include "mrenewal/error.hpp"

namespace mrenewal {

double pochhammer_ratio_step(double prev_term, double a, double b, double z, int k) noexcept {
  return prev_term * ((a + k) / (b + k)) * (z / (k + 1));
}

namespace {

bool is_nonpositive_integer(double b) {
  if (b > 1e-12) return false;
  return std::abs(b - std::round(b)) <= 1e-12;
}

// Direct summation in extended precision; callers guarantee z >= 0 or a
// terminating series.
double kummer_series(double a, double b, double z, double tol) {
  long double term = 1.0L;
  long double sum = 1.0L;
  int small_run = 0;
  for (int k = 0; k < kKummerMaxTerms; ++k) {
    term *= ((static_cast<long double>(a) + k) / (static_cast<long double>(b) + k)) *
            (static_cast<long double>(z) / (k + 1));
    sum += term;
    if (!std::isfinite(sum) || !std::isfinite(static_cast<double>(sum))) {
      throw NumericalError("kummer_m: overflow for a=" + std::to_string(a) +
                           " b=" + std::to_string(b) + " z=" + std::to_string(z));
    }
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++small_run == 3) return static_cast<double>(sum);
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("kummer_m: no convergence in " + std::to_string(kKummerMaxTerms) +
                         " terms for a=" + std::to_string(a) + " b=" + std::to_string(b) +
                         " z=" + std::to_string(z));
}

}  // namespace

double kummer_m(const HypergeomArgs& args, double tol) {
  const auto [a, b, z] = args;
  if (!(tol > 0.0 && tol <= 1e-6)) throw InvalidParameter("kummer_m: tol must be in (0, 1e-6]");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
    throw InvalidParameter("kummer_m: non-finite argument");
  }
  if (is_nonpositive_integer(b)) {
    throw InvalidParameter("kummer_m: b must not be zero or a negative integer");
  }
  if (z == 0.0) return 1.0;
  if (z < 0.0) {
    return static_cast<double>(std::exp(static_cast<long double>(z)) *
                               static_cast<long double>(kummer_series(b - a, b, -z, tol)));
  }
  return kummer_series(a, b, z, tol);
}

}  // namespace mrenewal
