// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mrenewal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Parses "A:B:N" into N linearly spaced points from A to B inclusive
/// (N = 1 gives {A}). Throws std::invalid_argument on malformed input.
std::vector<double> parse_grid(std::string_view spec);

/// Formats a value as %.17g.
std::string format_number(double v);

/// Runs the command line (args excludes the program name). CSV and results go
/// to `out`; usage text and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrenewal::cli
