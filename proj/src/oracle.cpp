// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include "mrenewal/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "mrenewal/error.hpp"

namespace mrenewal {

namespace {

double real_part(double s) { return s; }
double real_part(std::complex<double> s) { return s.real(); }

template <typename Scalar>
std::vector<KernelEntries<Scalar>> kernel_table(const KernelTransform& k, Scalar s, int count) {
  std::vector<KernelEntries<Scalar>> table(count);
  for (int j = 0; j < count; ++j) table[j] = k.at(j, s);
  return table;
}

// Equation j of row i:  -τ̄_{j-1} r_{j-1} + r_j - σ̄_{j+1} r_{j+1} = δ_ij,  j = 0..n.
template <typename Scalar>
BasicRowResult<Scalar> solve_row(int i, Scalar s, const KernelTransform& k, int n) {
  if (!(real_part(s) > 0.0)) throw DomainError("solve_row_truncated: requires s > 0");
  if (n < 1 || i < 0 || i >= n) throw DomainError("solve_row_truncated: requires 0 <= i < n");
  if constexpr (!std::is_same_v<Scalar, double>) {
    if (!k.supports_complex()) {
      throw DomainError("solve_row_truncated: kernel has no complex evaluation");
    }
  }

  const int size = n + 1;
  const auto kern = kernel_table<Scalar>(k, s, size + 1);

  std::vector<Scalar> c_prime(size);
  std::vector<Scalar> x(size);
  Scalar denom = 1.0;
  for (int j = 0; j < size; ++j) {
    const Scalar lower = j > 0 ? -kern[j - 1].tau_bar : Scalar{};
    const Scalar upper = j < n ? -kern[j + 1].sigma_bar : Scalar{};
    const Scalar rhs = j == i ? Scalar{1.0} : Scalar{};
    denom = j > 0 ? Scalar{1.0} - lower * c_prime[j - 1] : Scalar{1.0};
    if (std::abs(denom) < kMinPivot) {
      throw NumericalError("solve_row_truncated: pivot below 1e-14 at j=" + std::to_string(j));
    }
    c_prime[j] = upper / denom;
    x[j] = (rhs - (j > 0 ? lower * x[j - 1] : Scalar{})) / denom;
  }
  for (int j = size - 1; j > 0; --j) x[j - 1] -= c_prime[j - 1] * x[j];

  Scalar norm{};
  for (int j = 0; j < size; ++j) {
    norm += (Scalar{1.0} - kern[j].sigma_bar - kern[j].tau_bar) * x[j];
  }

  BasicRowResult<Scalar> out;
  out.i = i;
  out.s = s;
  out.truncation_n = n;
  out.values = std::move(x);
  out.normalization_residual = std::abs(norm - Scalar{1.0});
  return out;
}

template <typename Scalar>
BasicRowResult<Scalar> solve_adaptive(int i, Scalar s, const KernelTransform& k,
                                      const TruncationConfig& cfg) {
  if (!(real_part(s) > 0.0)) throw DomainError("solve_row_adaptive: requires s > 0");
  if (i < 0) throw DomainError("solve_row_adaptive: requires i >= 0");
  if (cfg.n_max < cfg.n0 || !(cfg.tol > 0.0) || cfg.growth < 2) {
    throw DomainError("solve_row_adaptive: invalid TruncationConfig");
  }

  int n = std::max(cfg.n0, i + 2);
  if (n > cfg.n_max) throw DomainError("solve_row_adaptive: n_max below i + 2");

  BasicRowResult<Scalar> prev = solve_row(i, s, k, n);
  for (;;) {
    if (n > cfg.n_max / cfg.growth) {
      throw ConvergenceError("solve_row_adaptive: truncation cap " + std::to_string(cfg.n_max) +
                             " reached for i=" + std::to_string(i) +
                             ", last residual " + std::to_string(prev.normalization_residual));
    }
    n *= cfg.growth;
    BasicRowResult<Scalar> cur = solve_row(i, s, k, n);

    const int watch = std::min(i + 10, prev.truncation_n);
    double change = 0.0;
    for (int j = 0; j <= watch; ++j) {
      change = std::max(change, std::abs(cur.values[j] - prev.values[j]));
    }
    if (cur.normalization_residual <= cfg.tol && change <= cfg.tol) {
      cur.converged = true;
      return cur;
    }
    prev = std::move(cur);
  }
}

}  // namespace

TransformRowResult solve_row_truncated(int i, double s, const KernelTransform& k, int n) {
  return solve_row<double>(i, s, k, n);
}

ComplexRowResult solve_row_truncated(int i, std::complex<double> s, const KernelTransform& k,
                                     int n) {
  return solve_row<std::complex<double>>(i, s, k, n);
}

TransformRowResult solve_row_adaptive(int i, double s, const KernelTransform& k,
                                      const TruncationConfig& cfg) {
  return solve_adaptive<double>(i, s, k, cfg);
}

ComplexRowResult solve_row_adaptive(int i, std::complex<double> s, const KernelTransform& k,
                                    const TruncationConfig& cfg) {
  return solve_adaptive<std::complex<double>>(i, s, k, cfg);
}

namespace {

struct NeumannState {
  std::vector<KernelEntries<double>> kern;
  std::vector<double> power;  // e_i Q̄^m
  std::vector<double> next;
  std::vector<double> sum;
};

NeumannState neumann_init(int i, double s, const KernelTransform& k, int n) {
  if (!(s > 0.0)) throw DomainError("neumann_series_sum: requires s > 0");
  if (n < 0 || i < 0 || i > n) throw DomainError("neumann_series_sum: requires 0 <= i <= n");
  NeumannState st;
  st.kern = kernel_table<double>(k, s, n + 1);
  st.power.assign(n + 1, 0.0);
  st.power[i] = 1.0;
  st.next.assign(n + 1, 0.0);
  st.sum = st.power;
  return st;
}

// power <- power * Q̄ restricted to states 0..n; returns the largest new entry.
double neumann_step(NeumannState& st) {
  const int size = int(st.power.size());
  double biggest = 0.0;
  for (int j = 0; j < size; ++j) {
    double v = 0.0;
    if (j > 0) v += st.power[j - 1] * st.kern[j - 1].tau_bar;
    if (j + 1 < size) v += st.power[j + 1] * st.kern[j + 1].sigma_bar;
    st.next[j] = v;
    st.sum[j] += v;
    biggest = std::max(biggest, std::abs(v));
  }
  st.power.swap(st.next);
  return biggest;
}

}  // namespace

std::vector<double> neumann_series_sum(int i, double s, const KernelTransform& k, int n,
                                       int m_terms) {
  if (m_terms < 0) throw DomainError("neumann_series_sum: m_terms must be >= 0");
  NeumannState st = neumann_init(i, s, k, n);
  for (int m = 0; m < m_terms; ++m) neumann_step(st);
  return st.sum;
}

NeumannResult neumann_series_converged(int i, double s, const KernelTransform& k, int n,
                                       double increment_tol, int max_terms) {
  NeumannState st = neumann_init(i, s, k, n);
  NeumannResult out;
  for (int m = 1; m <= max_terms; ++m) {
    out.last_increment = neumann_step(st);
    if (out.last_increment < increment_tol) {
      out.terms = m;
      out.values = std::move(st.sum);
      return out;
    }
  }
  throw ConvergenceError("neumann_series_converged: increment still " +
                         std::to_string(out.last_increment) + " after " +
                         std::to_string(max_terms) + " terms");
}

}  // namespace mrenewal
