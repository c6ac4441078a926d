// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mrenewal/error.hpp"

namespace mrenewal {

namespace {

void require_positive_s(double s, const char* who) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError(std::string(who) + ": requires s > 0");
}

void require_state(int j, const char* who) {
  if (j < 0) throw DomainError(std::string(who) + ": state index must be >= 0");
}

}  // namespace

double tbar_from_rbar(int j, double s, double rbar, const QueueParams& p) {
  require_state(j, "tbar_from_rbar");
  require_positive_s(s, "tbar_from_rbar");
  return p.alpha() * rbar / (j + p.rho() + p.alpha() * s);
}

double rbar_from_tbar(int j, double s, double tbar, const QueueParams& p) {
  require_state(j, "rbar_from_tbar");
  require_positive_s(s, "rbar_from_tbar");
  return tbar * (j + p.rho() + p.alpha() * s) / p.alpha();
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int m = 1; m <= k; ++m) c = c * (n - k + m) / m;
  return c;
}

double generating_function(int i, double x, double s, const QueueParams& p, double tol) {
  require_state(i, "generating_function");
  require_positive_s(s, "generating_function");
  if (!(x > -1.0 && x <= 1.0)) throw DomainError("generating_function: requires x in (-1, 1]");

  const double alpha = p.alpha();
  const double as = alpha * s;
  const double w = 1.0 - x;
  const double z = p.rho() * w;

  double sum = 0.0;
  double w_pow = 1.0;
  for (int k = 0; k <= i; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double m = kummer_m({as + k, as + k + 1.0, z}, tol);
    sum += sign * binomial(i, k) * w_pow / (as + k) * m;
    w_pow *= w;
    if (w_pow == 0.0) break;
  }
  return alpha * std::exp(-z) * sum;
}

double ode_residual(const std::function<double(double)>& y, int i, double x, double s,
                    const QueueParams& p, double h) {
  require_state(i, "ode_residual");
  require_positive_s(s, "ode_residual");
  if (!(h > 0.0)) throw DomainError("ode_residual: requires h > 0");
  if (!(x > -1.0 + h && x < 1.0 - h)) throw DomainError("ode_residual: requires x in (-1+h, 1-h)");
  const double dy = (y(x + h) - y(x - h)) / (2.0 * h);
  const double w = 1.0 - x;
  return w * dy - (p.rho() * w + p.alpha() * s) * y(x) + p.alpha() * std::pow(x, i);
}

double ode_residual(int i, double x, double s, const QueueParams& p, double h, double tol) {
  return ode_residual([&](double u) { return generating_function(i, u, s, p, tol); }, i, x, s,
                      p, h);
}

double rbar_closed_form(int i, int n, double s, const QueueParams& p, double tol) {
  require_state(i, "rbar_closed_form");
  require_state(n, "rbar_closed_form");
  require_positive_s(s, "rbar_closed_form");

  const double alpha = p.alpha();
  const double rho = p.rho();
  const double as = alpha * s;

  double outer = 0.0;
  for (int k = 0; k <= i; ++k) {
    const double c = as + k + 1.0;
    double inner = 0.0;
    for (int j = 0; j <= std::min(n, k); ++j) {
      const int m = n - j;
      // ρ^m / (c)_m as a running product.
      double ratio = 1.0;
      for (int q = 0; q < m && ratio != 0.0; ++q) ratio *= rho / (c + q);
      if (ratio == 0.0) continue;
      const double phi = kummer_m({double(m + 1), c + m, -rho}, tol);
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      inner += sign * binomial(k, j) * ratio * phi;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    outer += sign * binomial(i, k) * alpha / (as + k) * inner;
  }
  return (n / alpha + p.lambda() + s) * outer;
}

}  // namespace mrenewal
