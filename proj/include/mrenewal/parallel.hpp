// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace mrenewal {

enum class Execution { serial, parallel };

/// Number of OpenMP threads used when workers == 0.
inline int default_workers() { return omp_get_max_threads(); }

/// Calls fn(idx) for idx in [0, count). With Execution::parallel the loop is
/// spread over `workers` OpenMP threads (0 = runtime default). If any call
/// throws, the exception from the lowest index is rethrown after the loop so
/// the failure reported does not depend on scheduling.
template <typename Fn>
void for_each_index(std::size_t count, Fn&& fn, Execution exec = Execution::parallel,
                    int workers = 0) {
  if (exec == Execution::serial || count < 2) {
    for (std::size_t idx = 0; idx < count; ++idx) fn(idx);
    return;
  }
  const int threads = workers > 0 ? workers : default_workers();
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long idx = 0; idx < n; ++idx) {
    try {
      fn(static_cast<std::size_t>(idx));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mrenewal
