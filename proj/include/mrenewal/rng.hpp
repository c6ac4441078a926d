// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace mrenewal {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based stream: draw k of path p depends only on (seed, p, k), so a
/// path produces the same numbers whichever worker runs it.
class PathStream {
 public:
  PathStream(std::uint64_t seed, std::uint64_t path) noexcept
      : counter_(mix64(mix64(seed) ^ mix64(path + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next_u64() noexcept {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix64(counter_);
  }

  /// Uniform on the open interval (0, 1).
  double next_open01() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t counter_;
};

}  // namespace mrenewal
