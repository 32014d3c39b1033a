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

#include "cli/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "cli/format.hpp"
#include "covphase/bounds.hpp"
#include "covphase/errors.hpp"
#include "covphase/estimator.hpp"
#include "covphase/repr.hpp"

namespace covphase::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kQuadratureNodes = 1 << 12;

const std::vector<double> kGridR = {0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kGridTheta = {0.0, kPi / 8, kPi / 4, 3 * kPi / 8, kPi / 2};

std::string sci(double v) {
  std::ostringstream s;
  s.precision(2);
  s << std::scientific << v;
  return s.str();
}

SuiteResult wigner_suite(bool inject_fault) {
  const CosineExponent exponent =
      inject_fault ? CosineExponent::kDropTwoT : CosineExponent::kStandard;
  double worst = 0.0;
  try {
    for (int tj = 0; tj <= 40; ++tj) {
      const HalfInteger j = HalfInteger::from_twice(tj);
      const WignerMatrix at_zero = wigner_d(j, 0.0, exponent);
      worst = std::max(worst, (at_zero.matrix() - Eigen::MatrixXd::Identity(tj + 1, tj + 1))
                                  .cwiseAbs()
                                  .maxCoeff());
      for (int i = 0; i < 50; ++i) {
        const double theta = kPi * i / 49.0;
        worst = std::max(worst, wigner_d(j, theta, exponent).orthogonality_residual());
      }
    }
  } catch (const NumericalValidationError& e) {
    return {"wigner-orthogonality", false, e.what()};
  }
  return {"wigner-orthogonality", worst <= 1e-10,
          "max residual " + sci(worst) + " over 2j<=40, 50 angles"};
}

SuiteResult dimension_suite() {
  for (int n = 1; n <= 24; ++n) {
    unsigned long long total = 0;
    for (const HalfInteger j : irrep_list(n)) total += multiplicity(n, j) * (j.twice() + 1ULL);
    if (total != (1ULL << n)) {
      return {"dimension-identity", false,
              "N=" + std::to_string(n) + ": sum d_j(2j+1) = " + std::to_string(total)};
    }
  }
  return {"dimension-identity", true, "sum d_j(2j+1) = 2^N for N<=24"};
}

SuiteResult oracle_suite(int max_n, int cap) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (double r : kGridR) {
      for (double t : kGridTheta) {
        const double diff =
            std::fabs(averaged_cosine(n, BlochState(r, t)) - oracle_avg_cosine(n, r, t, cap));
        worst = std::max(worst, diff);
      }
    }
  }
  return {"oracle-equivalence", worst <= 1e-9,
          "max |block - dense| " + sci(worst) + " for N<=" + std::to_string(max_n)};
}

SuiteResult spectrum_suite(int max_n, int cap) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (double r : kGridR) {
      const SpectrumReport rep = spectrum_check(n, r, cap);
      if (!rep.ok) {
        return {"spectrum", false, "N=" + std::to_string(n) + " r=" + format_number(r) + "\n" + rep.diff};
      }
      worst = std::max(worst, rep.max_abs_diff);
    }
  }
  return {"spectrum", true, "max eigenvalue diff " + sci(worst)};
}

SuiteResult povm_suite(int max_n) {
  double worst_gap = 0.0;
  double min_eig = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (double r : kGridR) {
      for (double t : kGridTheta) {
        const BlochState state(r, t);
        const std::vector<SeedBlock> seed = build_seed(n, state);
        const PovmReport rep = povm_check(seed);
        if (!rep.ok) return {"povm", false, rep.failures.front()};
        min_eig = std::min(min_eig, rep.min_eigenvalue);
        worst_gap = std::max(
            worst_gap, std::fabs(seed_average_cosine(n, state, seed) - averaged_cosine(n, state)));
      }
    }
  }
  return {"povm", worst_gap <= 1e-12,
          "min eigenvalue " + sci(min_eig) + ", bound-chain gap " + sci(worst_gap)};
}

SuiteResult density_suite(int max_n) {
  double worst_norm = 0.0;
  double worst_moment = 0.0;
  double min_p = 0.0;
  for (int n = 1; n <= std::min(max_n, 8); ++n) {
    for (double r : kGridR) {
      for (double t : kGridTheta) {
        const BlochState state(r, t);
        const PhaseDensity density(n, state);
        double mass = 0.0;
        double moment = 0.0;
        for (int k = 0; k < kQuadratureNodes; ++k) {
          const double phi = 2.0 * kPi * k / kQuadratureNodes;
          const double p = density(phi);
          min_p = std::min(min_p, p);
          mass += p;
          moment += p * std::cos(phi);
        }
        mass /= kQuadratureNodes;
        moment /= kQuadratureNodes;
        worst_norm = std::max(worst_norm, std::fabs(mass - 1.0));
        worst_moment = std::max(worst_moment, std::fabs(moment - averaged_cosine(n, state)));
      }
    }
  }
  return {"posterior-density", worst_norm <= 1e-9 && worst_moment <= 1e-9 && min_p >= -1e-10,
          "norm err " + sci(worst_norm) + ", first-moment err " + sci(worst_moment) +
              ", min p " + sci(min_p)};
}

SuiteResult sld_suite() {
  double worst = 0.0;
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 16; ++b) worst = std::max(worst, sld_residual(a / 10.0, kPi * b / 16));
  }
  return {"sld-identity", worst <= 1e-12, "max residual " + sci(worst)};
}

// 2N(1 - <c>) against the 1/r^2 line at the equator for N = 16, 18, 20 and
// r in [0.3, 1], the regime where the asymptotic comparison is meaningful.
SuiteResult cr_dominance_suite() {
  std::string violations;
  int count = 0;
  for (int n : {16, 18, 20}) {
    for (int k = 0; k <= 14; ++k) {
      const double r = 0.3 + 0.05 * k;
      const double scaled = n * variance_proxy(averaged_cosine(n, BlochState(r, kPi / 2)));
      const double bound = n * cramer_rao(n, r, kPi / 2);
      if (scaled < bound && count++ < 4) {
        violations += " N=" + std::to_string(n) + ",r=" + format_number(r) + ": " +
                      format_number(scaled) + " < " + format_number(bound) + ";";
      }
    }
  }
  if (count == 0) return {"cr-dominance", true, "2N(1-<c>) >= 1/r^2 for N in {16,18,20}"};
  return {"cr-dominance", false, std::to_string(count) + " violations:" + violations};
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  if (options.max_n < 1) {
    throw DomainError("--max-n must be >= 1, got " + std::to_string(options.max_n));
  }
  if (options.dense_cap > kHardDenseCap || options.max_n > options.dense_cap) {
    throw ResourceLimitError("--max-n " + std::to_string(options.max_n) +
                             " exceeds the dense oracle cap " +
                             std::to_string(std::min(options.dense_cap, kHardDenseCap)));
  }
  return {wigner_suite(options.inject_wigner_exponent_fault),
          dimension_suite(),
          oracle_suite(options.max_n, options.dense_cap),
          spectrum_suite(options.max_n, options.dense_cap),
          povm_suite(options.max_n),
          density_suite(options.max_n),
          sld_suite(),
          cr_dominance_suite()};
}

std::string render_selftest(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  out << "suite" << std::string(width - 5 + 2, ' ') << "status  detail\n";
  int failed = 0;
  for (const auto& r : results) {
    out << r.name << std::string(width - r.name.size() + 2, ' ') << (r.passed ? "PASS  " : "FAIL  ")
        << "  " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  out << (failed == 0 ? "all suites passed\n"
                      : std::to_string(failed) + " suite(s) failed\n");
  return out.str();
}

}  // namespace covphase::cli
