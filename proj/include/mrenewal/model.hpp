// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mrenewal {

/// M|M|∞ queue parameters. The traffic intensity is always derived.
class QueueParams {
 public:
  /// Throws DomainError unless lambda >= 0 and alpha > 0 (both finite).
  QueueParams(double lambda, double alpha);

  double lambda() const noexcept { return lambda_; }
  double alpha() const noexcept { return alpha_; }
  double rho() const noexcept { return lambda_ * alpha_; }

 private:
  double lambda_;
  double alpha_;
};

template <typename Scalar>
struct KernelEntries {
  Scalar sigma_bar;  // transform of the j -> j-1 entry
  Scalar tau_bar;    // transform of the j -> j+1 entry
};

/// Transforms of the nonzero entries of a tridiagonal (immigration-and-death)
/// semi-Markov kernel, state j >= 0, transform variable s.
///
/// Real evaluation is mandatory. Complex evaluation is needed only by the
/// Euler inverter; kernels that cannot continue analytically leave it
/// unsupported.
class KernelTransform {
 public:
  virtual ~KernelTransform() = default;

  virtual KernelEntries<double> at(int j, double s) const = 0;

  virtual bool supports_complex() const noexcept { return false; }
  /// Throws std::logic_error unless supports_complex().
  virtual KernelEntries<std::complex<double>> at(int j, std::complex<double> s) const;
};

double mm_inf_tau_bar(int j, double s, const QueueParams& p);
double mm_inf_sigma_bar(int j, double s, const QueueParams& p);

class MmInfKernel final : public KernelTransform {
 public:
  explicit MmInfKernel(QueueParams p) : params_(p) {}

  KernelEntries<double> at(int j, double s) const override;
  bool supports_complex() const noexcept override { return true; }
  /// Requires Re(s) >= 0.
  KernelEntries<std::complex<double>> at(int j, std::complex<double> s) const override;

  const QueueParams& params() const noexcept { return params_; }

 private:
  QueueParams params_;
};

/// Adapts a plain function to KernelTransform (real s only).
class FunctionKernel final : public KernelTransform {
 public:
  using Fn = std::function<KernelEntries<double>(int, double)>;
  explicit FunctionKernel(Fn fn) : fn_(std::move(fn)) {}
  KernelEntries<double> at(int j, double s) const override { return fn_(j, s); }

 private:
  Fn fn_;
};

struct KernelViolation {
  int j;
  double s;
  std::string what;
};

/// Checks the regularity conditions of the kernel on {0..j_max} x s_grid:
/// sigma_bar(0, s) = 0, nonnegativity, sigma_bar + tau_bar <= 1, and
/// monotone nonincrease in s between consecutive points of the sorted grid.
/// Tolerance 1e-12. An empty result means the kernel passed.
std::vector<KernelViolation> validate_kernel(const KernelTransform& k, int j_max,
                                             std::span<const double> s_grid);

}  // namespace mrenewal
