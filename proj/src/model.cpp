// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mrenewal/error.hpp"

namespace mrenewal {

QueueParams::QueueParams(double lambda, double alpha) : lambda_(lambda), alpha_(alpha) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw DomainError("QueueParams: lambda must be finite and >= 0");
  }
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("QueueParams: alpha must be finite and > 0");
  }
}

KernelEntries<std::complex<double>> KernelTransform::at(int, std::complex<double>) const {
  throw std::logic_error("KernelTransform: complex evaluation not supported by this kernel");
}

namespace {

void check_state_and_s(int j, double s) {
  if (j < 0) throw DomainError("kernel: state index must be >= 0");
  if (!(s >= 0.0)) throw DomainError("kernel: transform variable must be >= 0");
}

}  // namespace

double mm_inf_tau_bar(int j, double s, const QueueParams& p) {
  check_state_and_s(j, s);
  const double rho = p.rho();
  if (rho == 0.0) return 0.0;
  return rho / (j + rho + p.alpha() * s);
}

double mm_inf_sigma_bar(int j, double s, const QueueParams& p) {
  check_state_and_s(j, s);
  if (j == 0) return 0.0;
  return j / (j + p.rho() + p.alpha() * s);
}

KernelEntries<double> MmInfKernel::at(int j, double s) const {
  return {mm_inf_sigma_bar(j, s, params_), mm_inf_tau_bar(j, s, params_)};
}

KernelEntries<std::complex<double>> MmInfKernel::at(int j, std::complex<double> s) const {
  if (j < 0) throw DomainError("kernel: state index must be >= 0");
  if (!(s.real() >= 0.0)) throw DomainError("kernel: Re(s) must be >= 0");
  const double rho = params_.rho();
  const std::complex<double> denom = double(j) + rho + params_.alpha() * s;
  return {double(j) / denom, rho / denom};
}

std::vector<KernelViolation> validate_kernel(const KernelTransform& k, int j_max,
                                             std::span<const double> s_grid) {
  constexpr double tol = 1e-12;
  std::vector<KernelViolation> report;
  if (j_max < 0) throw DomainError("validate_kernel: j_max must be >= 0");
  if (s_grid.empty()) throw DomainError("validate_kernel: empty s grid");

  std::vector<double> grid(s_grid.begin(), s_grid.end());
  std::sort(grid.begin(), grid.end());
  if (grid.front() < 0.0) throw DomainError("validate_kernel: s grid must be >= 0");

  for (int j = 0; j <= j_max; ++j) {
    KernelEntries<double> prev{};
    for (std::size_t m = 0; m < grid.size(); ++m) {
      const double s = grid[m];
      const auto e = k.at(j, s);
      if (j == 0 && std::abs(e.sigma_bar) > tol) {
        report.push_back({j, s, "sigma_bar(0, s) != 0"});
      }
      if (e.sigma_bar < -tol) report.push_back({j, s, "sigma_bar < 0"});
      if (e.tau_bar < -tol) report.push_back({j, s, "tau_bar < 0"});
      if (e.sigma_bar + e.tau_bar > 1.0 + tol) {
        report.push_back({j, s, "sigma_bar + tau_bar > 1"});
      }
      if (m > 0) {
        if (e.sigma_bar > prev.sigma_bar + tol) {
          report.push_back({j, s, "sigma_bar increasing in s"});
        }
        if (e.tau_bar > prev.tau_bar + tol) {
          report.push_back({j, s, "tau_bar increasing in s"});
        }
      }
      prev = e;
    }
  }
  return report;
}

}  // namespace mrenewal
