// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <vector>

#include "mrenewal/error.hpp"
#include "mrenewal/invert.hpp"

using namespace mrenewal;

TEST_CASE("Stehfest weights sum to zero and reproduce constants") {
  for (int order = 4; order <= 18; order += 2) {
    const auto w = stehfest_weights(order);
    double sum = 0.0, scale = 0.0;
    for (double v : w) {
      sum += v;
      scale = std::max(scale, std::abs(v));
    }
    CHECK(std::abs(sum) <= 1e-10 * scale);
  }
  // Classic N = 4 weights: -2, 26, -48, 24.
  const auto w4 = stehfest_weights(4);
  CHECK(w4[0] == -2.0);
  CHECK(w4[1] == 26.0);
  CHECK(w4[2] == -48.0);
  CHECK(w4[3] == 24.0);
  CHECK_THROWS_AS(stehfest_weights(5), DomainError);
  CHECK_THROWS_AS(stehfest_weights(20), DomainError);
}

TEST_CASE("Gaver-Stehfest textbook transforms") {
  CHECK(std::abs(gaver_stehfest([](double s) { return 1.0 / s; }, 1.0, 14) - 1.0) <= 1e-8);
  CHECK(std::abs(gaver_stehfest([](double s) { return 1.0 / (s + 1.0); }, 1.0, 14) - std::exp(-1.0)) <=
        1e-6);
  CHECK(std::abs(gaver_stehfest([](double s) { return 1.0 / (s * s); }, 2.5, 14) - 2.5) <= 1e-6);
  CHECK_THROWS_AS(gaver_stehfest([](double s) { return 1.0 / s; }, 0.0), DomainError);
}

TEST_CASE("Euler inversion textbook transforms") {
  using C = std::complex<double>;
  CHECK(std::abs(euler_inversion([](C s) { return 1.0 / s; }, 1.0) - 1.0) <= 1e-7);
  CHECK(std::abs(euler_inversion([](C s) { return 1.0 / (s + 1.0); }, 1.0) - std::exp(-1.0)) <=
        1e-7);
  CHECK(std::abs(euler_inversion([](C s) { return 1.0 / (s * s + 1.0); }, 2.0) - std::sin(2.0)) <=
        1e-7);
}

TEST_CASE("renewal function without arrivals") {
  const std::vector<double> ts = {0.25, 0.5, 1.0, 2.0, 4.0};
  for (double alpha : {0.5, 1.0, 2.0}) {
    const QueueParams p(0.0, alpha);
    for (auto method : {InversionMethod::gaver_stehfest, InversionMethod::euler}) {
      InversionConfig cfg;
      cfg.method = method;
      const auto r00 = renewal_function(0, 0, ts, p, Solver::oracle, cfg);
      const auto r10 = renewal_function(1, 0, ts, p, Solver::oracle, cfg);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        CHECK(std::abs(r00[k] - 1.0) <= 1e-6);
        CHECK(std::abs(r10[k] - (1.0 - std::exp(-ts[k] / alpha))) <= 1e-5);
      }
    }
    const auto cf = renewal_function(1, 0, ts, p, Solver::closedform);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      CHECK(std::abs(cf[k] - (1.0 - std::exp(-ts[k] / alpha))) <= 1e-5);
    }
  }
}

TEST_CASE("renewal function: methods and solvers agree, values nondecreasing") {
  std::vector<double> ts;
  for (double t = 0.25; t <= 4.0; t += 0.25) ts.push_back(t);
  const QueueParams p(1.0, 1.0);
  for (auto [i, j] : {std::pair{0, 0}, {0, 1}, {2, 1}}) {
    const auto gs = renewal_function(i, j, ts, p, Solver::oracle);
    InversionConfig euler;
    euler.method = InversionMethod::euler;
    const auto eu = renewal_function(i, j, ts, p, Solver::oracle, euler);
    const auto cf = renewal_function(i, j, ts, p, Solver::closedform);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      CHECK(std::abs(gs[k] - eu[k]) <= 1e-4);
      // Order-18 weights amplify ~1e-13 input differences to a few 1e-6.
      CHECK(std::abs(gs[k] - cf[k]) <= 1e-5);
      if (k > 0) CHECK(gs[k] >= gs[k - 1] - 1e-5);
    }
    CHECK(gs.front() >= (i == j ? 1.0 : 0.0) - 1e-5);
  }
}

TEST_CASE("renewal function configuration errors") {
  const QueueParams p(1.0, 1.0);
  const std::vector<double> ts = {1.0};
  InversionConfig cfg;
  cfg.order = 15;
  CHECK_THROWS_AS(renewal_function(0, 0, ts, p, Solver::oracle, cfg), DomainError);
  cfg.order = 20;
  CHECK_THROWS_AS(renewal_function(0, 0, ts, p, Solver::oracle, cfg), DomainError);
  cfg = {};
  cfg.method = InversionMethod::euler;
  CHECK_THROWS_AS(renewal_function(0, 0, ts, p, Solver::closedform, cfg), DomainError);
  const std::vector<double> at_zero = {0.0};
  CHECK_THROWS_AS(renewal_function(0, 0, at_zero, p, Solver::oracle), DomainError);
}
