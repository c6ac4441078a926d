// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "mrenewal/error.hpp"
#include "mrenewal/mcsim.hpp"
#include "mrenewal/model.hpp"
#include "mrenewal/rng.hpp"

using namespace mrenewal;

TEST_CASE("step_embedded basics") {
  const auto absorbed = step_embedded(0, {0.0, 1.0}, 0.3, 0.3);
  CHECK(std::isinf(absorbed.sojourn));
  CHECK(absorbed.next_state == 0);

  PathStream rng(5, 0);
  for (int k = 0; k < 1000; ++k) {
    const auto st = step_embedded(0, {0.7, 1.0}, rng.next_open01(), rng.next_open01());
    CHECK(st.next_state == 1);
    CHECK(st.sojourn > 0.0);
  }
  for (int k = 0; k < 1000; ++k) {
    const auto st = step_embedded(4, {0.7, 1.0}, rng.next_open01(), rng.next_open01());
    CHECK((st.next_state == 3 || st.next_state == 5));
  }
}

TEST_CASE("step_embedded follows the exponential race") {
  // State 2, λ = α = 1: total rate 3, so P(up) = 1/3 and E[T] = 1/3.
  PathStream rng(99, 1);
  const int n = 1'000'000;
  double ups = 0.0, t_sum = 0.0, t_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    const auto st = step_embedded(2, {1.0, 1.0}, rng.next_open01(), rng.next_open01());
    ups += st.next_state == 3;
    t_sum += st.sojourn;
    t_sq += st.sojourn * st.sojourn;
  }
  const double p_up = ups / n;
  CHECK(std::abs(p_up - 1.0 / 3.0) <= 3.0 * std::sqrt(p_up * (1 - p_up) / n));
  const double mean = t_sum / n;
  const double se = std::sqrt((t_sq / n - mean * mean) / n);
  CHECK(std::abs(mean - 1.0 / 3.0) <= 3.0 * se);
}

TEST_CASE("one-step transform of the simulator matches the kernel") {
  const QueueParams p(1.0, 1.0);
  const int n = 1'000'000;
  for (int j : {0, 1, 5}) {
    for (double s : {0.5, 2.0}) {
      PathStream rng(1234, 17 * j + 1);
      double sum = 0.0, sq = 0.0;
      for (int k = 0; k < n; ++k) {
        const auto st = step_embedded(j, p, rng.next_open01(), rng.next_open01());
        const double v = st.next_state == j + 1 ? std::exp(-s * st.sojourn) : 0.0;
        sum += v;
        sq += v * v;
      }
      const double mean = sum / n;
      const double se = std::sqrt((sq / n - mean * mean) / n);
      CHECK_MESSAGE(std::abs(mean - mm_inf_tau_bar(j, s, p)) <= 4.0 * se, "j=" << j << " s=" << s);
    }
  }
}

TEST_CASE("simulate: absorbed start gives the identity term exactly") {
  SimConfig cfg;
  cfg.n_paths = 1000;
  cfg.t_max = 5.0;
  const int targets[] = {0, 1};
  const double ts[] = {0.5, 5.0};
  const auto est = simulate_renewal_counts(0, targets, ts, {0.0, 1.0}, cfg);
  REQUIRE(est.size() == 4);
  CHECK(est[0].mean == 1.0);
  CHECK(est[0].std_error == 0.0);
  CHECK(est[1].mean == 1.0);
  CHECK(est[2].mean == 0.0);
  CHECK(est[3].j == 1);
  CHECK(est[3].t == 5.0);
  CHECK(est[3].n_paths == 1000);
}

TEST_CASE("simulate: single service completion") {
  SimConfig cfg;
  cfg.n_paths = 100'000;
  cfg.seed = 42;
  cfg.t_max = 1.0;
  const int targets[] = {0};
  const double ts[] = {1.0};
  const auto est = simulate_renewal_counts(1, targets, ts, {0.0, 1.0}, cfg);
  const double want = 1.0 - std::exp(-1.0);
  CHECK(std::abs(est[0].mean - want) <= 3.0 * est[0].std_error);
  CHECK(est[0].std_error == doctest::Approx(0.0015).epsilon(0.05));
}

TEST_CASE("simulate: estimates are nondecreasing in t and at least δ_ij") {
  SimConfig cfg;
  cfg.n_paths = 5000;
  cfg.t_max = 3.0;
  const int targets[] = {0, 1, 2};
  std::vector<double> ts;
  for (double t = 0.1; t <= 3.0; t += 0.1) ts.push_back(t);
  const auto est = simulate_renewal_counts(1, targets, ts, {2.0, 0.5}, cfg);
  for (std::size_t q = 0; q < 3; ++q) {
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const auto& e = est[q * ts.size() + k];
      CHECK(e.mean >= (e.i == e.j ? 1.0 : 0.0));
      CHECK(e.std_error >= 0.0);
      if (k > 0) CHECK(e.mean >= est[q * ts.size() + k - 1].mean);
    }
  }
}

TEST_CASE("simulate: same seed, any worker count, same bits") {
  const int targets[] = {0, 1};
  const double ts[] = {0.5, 1.0, 2.0};
  SimConfig cfg;
  cfg.n_paths = 20'000;
  cfg.seed = 77;
  cfg.t_max = 2.0;
  const auto serial = simulate_renewal_counts_serial(0, targets, ts, {1.0, 1.0}, cfg);
  for (int workers : {1, 2, 3, 8}) {
    cfg.workers = workers;
    const auto par = simulate_renewal_counts(0, targets, ts, {1.0, 1.0}, cfg);
    REQUIRE(par.size() == serial.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
      CHECK(std::memcmp(&par[k].mean, &serial[k].mean, sizeof(double)) == 0);
      CHECK(std::memcmp(&par[k].std_error, &serial[k].std_error, sizeof(double)) == 0);
    }
  }
  cfg.seed = 78;
  const auto other = simulate_renewal_counts(0, targets, ts, {1.0, 1.0}, cfg);
  CHECK(other[5].mean != serial[5].mean);
}

TEST_CASE("simulate: event cap aborts") {
  SimConfig cfg;
  cfg.n_paths = 10;
  cfg.t_max = 10.0;
  cfg.max_events = 5;
  const int targets[] = {0};
  const double ts[] = {10.0};
  CHECK_THROWS_AS(simulate_renewal_counts(0, targets, ts, {5.0, 1.0}, cfg), ConvergenceError);
}

TEST_CASE("simulate: argument checks") {
  SimConfig cfg;
  cfg.t_max = 1.0;
  const int targets[] = {0};
  const double unsorted[] = {0.5, 0.2};
  const double beyond[] = {2.0};
  CHECK_THROWS_AS(simulate_renewal_counts(0, targets, unsorted, {1.0, 1.0}, cfg), DomainError);
  CHECK_THROWS_AS(simulate_renewal_counts(0, targets, beyond, {1.0, 1.0}, cfg), DomainError);
  cfg.n_paths = 0;
  const double ok[] = {1.0};
  CHECK_THROWS_AS(simulate_renewal_counts(0, targets, ok, {1.0, 1.0}, cfg), DomainError);
}

TEST_CASE("PathStream is a pure function of (seed, path, draw)") {
  PathStream a(3, 10), b(3, 10), c(3, 11);
  for (int k = 0; k < 100; ++k) {
    const double x = a.next_open01();
    CHECK(x > 0.0);
    CHECK(x < 1.0);
    CHECK(x == b.next_open01());
    CHECK(x != c.next_open01());
  }
}
