// Copyright 2026 The covphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "covphase/oracle.hpp"

namespace covphase::cli {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  int max_n = 10;
  int dense_cap = kDefaultDenseCap;
  /// Build Wigner matrices with the 2j+l-k cosine exponent (no -2t term).
  bool inject_wigner_exponent_fault = false;
};

/// Runs every property suite. Throws ResourceLimitError when max_n exceeds
/// the dense cap and DomainError when max_n < 1.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

std::string render_selftest(const std::vector<SuiteResult>& results);

}  // namespace covphase::cli
