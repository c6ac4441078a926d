// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "mrenewal/model.hpp"

namespace mrenewal {

/// One row i of the transformed renewal matrix, r̄_i0(s) .. r̄_in(s).
template <typename Scalar>
struct BasicRowResult {
  int i = 0;
  Scalar s{};
  int truncation_n = 0;
  std::vector<Scalar> values;
  /// |sum_k (1 - σ̄_k - τ̄_k) r̄_ik - 1|
  double normalization_residual = 0.0;
  bool converged = false;

  /// r̄_ij(s); zero beyond the truncation.
  Scalar at(int j) const { return j >= 0 && j < int(values.size()) ? values[j] : Scalar{}; }
};

using TransformRowResult = BasicRowResult<double>;
using ComplexRowResult = BasicRowResult<std::complex<double>>;

struct TruncationConfig {
  int n0 = 64;
  int n_max = 1 << 16;
  double tol = 1e-10;
  int growth = 2;
};

inline constexpr double kMinPivot = 1e-14;

/// Solves the renewal equations for row i on states 0..n with r̄_{i,n+1} = 0.
/// The system is tridiagonal in j and is eliminated without pivoting.
///
/// Throws DomainError if s <= 0 or i is outside [0, n); NumericalError if a
/// pivot magnitude drops below kMinPivot.
TransformRowResult solve_row_truncated(int i, double s, const KernelTransform& k, int n);
/// Same for complex s with Re(s) > 0; the kernel must support complex evaluation.
ComplexRowResult solve_row_truncated(int i, std::complex<double> s, const KernelTransform& k,
                                     int n);

/// Grows the truncation n0, n0*growth, ... until the normalization residual
/// and the change in values[0..i+10] between consecutive truncations are both
/// within cfg.tol. Throws ConvergenceError once n would exceed cfg.n_max.
TransformRowResult solve_row_adaptive(int i, double s, const KernelTransform& k,
                                      const TruncationConfig& cfg = {});
ComplexRowResult solve_row_adaptive(int i, std::complex<double> s, const KernelTransform& k,
                                    const TruncationConfig& cfg = {});

/// Row i of sum_{m=0}^{m_terms} Q̄(s)^m on states 0..n, by repeated
/// row-vector times tridiagonal products.
std::vector<double> neumann_series_sum(int i, double s, const KernelTransform& k, int n,
                                       int m_terms);

struct NeumannResult {
  std::vector<double> values;
  int terms = 0;
  double last_increment = 0.0;
};

/// Like neumann_series_sum but keeps adding powers until the largest entry of
/// the latest one is below increment_tol. Throws ConvergenceError after
/// max_terms powers.
NeumannResult neumann_series_converged(int i, double s, const KernelTransform& k, int n,
                                       double increment_tol = 1e-12, int max_terms = 10'000'000);

}  // namespace mrenewal
