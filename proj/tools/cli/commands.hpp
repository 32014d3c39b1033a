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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "covphase/estimator.hpp"
#include "cli/format.hpp"

namespace covphase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;

/// Oracle agreement required by `eval --oracle` and `sweep --oracle`.
inline constexpr double kOracleTolerance = 1e-9;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { kText, kCsv, kJson };

/// Inclusive arithmetic progression start, start+step, ..., <= stop.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
};

struct SweepSpec {
  std::vector<int> n_values;
  Range r_range;
  Range theta_range;
  OutputFormat output_format = OutputFormat::kCsv;
  bool oracle_check = false;
};

/// "3", "1,2,5", "2:10", "1:21:2" or combinations separated by commas.
/// Result is sorted and deduplicated.
std::vector<int> parse_n_list(std::string_view text);

/// "x" (single point) or "start:stop:step"; every number is multiplied by
/// `scale` (pi/180 for --degrees).
Range parse_range(std::string_view text, double scale = 1.0);

/// Grid points of `range` that fall in [lo, hi]; points within 1e-12 of a
/// bound are snapped onto it. Throws UsageError on malformed ranges or an
/// empty result.
std::vector<double> expand_range(const Range& range, double lo, double hi,
                                 std::string_view name);

/// Default grids: r in 0:1:0.05, theta in 0:pi:pi/64.
Range default_r_range();
Range default_theta_range();

/// Dense-oracle cap: kDefaultDenseCap unless COVPHASE_MAX_DENSE_N is set.
/// Throws UsageError for unparsable values or values above kHardDenseCap.
int dense_cap_from_env();

/// Evaluates every (n, r, theta) of the sweep concurrently; rows come back in
/// lexicographic (n, r, theta) order.
std::vector<EstimationReport> run_sweep(const SweepSpec& spec);

/// n,r,theta,avg_cos,var_proxy,infidelity_cost,cr_bound,ratio_to_bound
Table report_table(const std::vector<EstimationReport>& reports);

/// Dataset behind figure 1, 2 or 3. Throws UsageError for other ids.
Table figure_table(int which);

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covphase::cli
