// Copyright 2026 The mrenewal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace mrenewal {

struct CheckResult {
  std::string suite;
  std::string case_label;
  bool passed = false;
  double observed = 0.0;   // error measure of the case
  double threshold = 0.0;  // pass iff observed <= threshold
};

/// Cross-check suites: the two transform oracles against each other, the
/// closed form against the oracle, and transform inversion against Monte Carlo.
/// `quick` shrinks the grids and path counts. Numerical failures propagate as
/// exceptions.
std::vector<CheckResult> run_validation(bool quick);

}  // namespace mrenewal
