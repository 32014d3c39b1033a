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

#include "covphase/repr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "covphase/errors.hpp"

namespace covphase {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + carry_; }

 private:
  long double sum_ = 0.0L;
  long double carry_ = 0.0L;
};

long double int_pow(long double base, int exponent) {
  long double result = 1.0L;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result *= base;
    base *= base;
  }
  return result;
}

// Exact C(n, k); false on 64-bit overflow.
bool binomial(int n, int k, std::uint64_t& out) {
  if (k < 0 || k > n) {
    out = 0;
    return true;
  }
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) {
    // acc = C(n-k+i-1, i-1); i divides acc * (n-k+i), so split the gcd first.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    const std::uint64_t g = std::gcd(acc, static_cast<std::uint64_t>(i));
    const std::uint64_t factor = num / (static_cast<std::uint64_t>(i) / g);
    if (__builtin_mul_overflow(acc / g, factor, &acc)) return false;
  }
  out = acc;
  return true;
}

void check_spin_label(int n_qubits, HalfInteger j) {
  if (n_qubits < 1) {
    throw DomainError("qubit count must be >= 1, got " + std::to_string(n_qubits));
  }
  if (j.twice() < 0 || j.twice() > n_qubits || (n_qubits - j.twice()) % 2 != 0) {
    throw DomainError("spin j=" + j.to_string() + " is not an irrep label for N=" +
                      std::to_string(n_qubits));
  }
}

}  // namespace

BlochState::BlochState(double r, double theta_polar) : r_(r), theta_(theta_polar) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    throw DomainError("purity r must lie in [0, 1], got " + std::to_string(r));
  }
  if (!std::isfinite(theta_polar) || std::fabs(theta_polar) > std::numbers::pi) {
    throw DomainError("polar angle must lie in [-pi, pi], got " +
                      std::to_string(theta_polar));
  }
}

WignerMatrix::WignerMatrix(HalfInteger j, double theta, Eigen::MatrixXd entries)
    : j_(j), theta_(theta), entries_(std::move(entries)) {}

double WignerMatrix::entry(HalfInteger l, HalfInteger k) const {
  if (std::abs(l.twice()) > j_.twice() || std::abs(k.twice()) > j_.twice() ||
      !HalfInteger::same_parity(l, j_) || !HalfInteger::same_parity(k, j_)) {
    throw DomainError("magnetic labels (" + l.to_string() + ", " + k.to_string() +
                      ") out of range for j=" + j_.to_string());
  }
  return entries_(index(l), index(k));
}

double WignerMatrix::orthogonality_residual() const {
  const Eigen::MatrixXd gram = entries_ * entries_.transpose();
  return (gram - Eigen::MatrixXd::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

std::vector<HalfInteger> irrep_list(int n_qubits) {
  if (n_qubits < 1) {
    throw DomainError("qubit count must be >= 1, got " + std::to_string(n_qubits));
  }
  std::vector<HalfInteger> out;
  for (int tj = n_qubits % 2; tj <= n_qubits; tj += 2) {
    out.push_back(HalfInteger::from_twice(tj));
  }
  return out;
}

std::uint64_t multiplicity(int n_qubits, HalfInteger j) {
  check_spin_label(n_qubits, j);
  const int k = (n_qubits - j.twice()) / 2;  // J - j
  std::uint64_t upper = 0;
  std::uint64_t lower = 0;
  if (!binomial(n_qubits, k, upper) || !binomial(n_qubits, k - 1, lower)) {
    throw ResourceLimitError("multiplicity for N=" + std::to_string(n_qubits) +
                             " overflows 64-bit integers");
  }
  return upper - lower;
}

WignerMatrix wigner_d(HalfInteger j, double theta, CosineExponent exponent) {
  const int tj = j.twice();
  if (tj < 0) throw DomainError("spin j must be >= 0, got " + j.to_string());
  const int dim = tj + 1;

  // log n! for the row/column normalisation, exact binomials for the t-sum:
  //   sqrt((j+l)!(j-l)!(j+k)!(j-k)!) / ((j+l-t)!(j-k-t)!(t-l+k)! t!)
  //     = C(j+l, t) C(j-l, j-k-t) sqrt((j+k)!(j-k)! / ((j+l)!(j-l)!))
  // Binomials up to C(64, 32) are exact in the 64-bit long double mantissa.
  std::vector<long double> log_fact(dim + 1);
  for (int n = 0; n <= dim; ++n) log_fact[n] = std::lgamma(static_cast<long double>(n) + 1.0L);
  std::vector<std::vector<long double>> pascal(dim + 1);
  for (int n = 0; n <= dim; ++n) {
    pascal[n].assign(n + 1, 1.0L);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }

  const long double c = std::cos(static_cast<long double>(theta) / 2.0L);
  const long double s = std::sin(static_cast<long double>(theta) / 2.0L);

  Eigen::MatrixXd d(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const int jpl = row;       // j + l
    const int jml = tj - row;  // j - l
    for (int col = 0; col < dim; ++col) {
      const int jpk = col;
      const int jmk = tj - col;
      const int l_minus_k = row - col;
      const long double norm =
          std::exp(0.5L * (log_fact[jpk] + log_fact[jmk] - log_fact[jpl] - log_fact[jml]));

      CompensatedSum sum;
      const int t_lo = std::max(0, l_minus_k);
      const int t_hi = std::min(jpl, jmk);
      for (int t = t_lo; t <= t_hi; ++t) {
        const int cos_exp = exponent == CosineExponent::kStandard
                                ? tj + l_minus_k - 2 * t
                                : tj + l_minus_k;
        const int sin_exp = 2 * t - l_minus_k;
        long double term =
            pascal[jpl][t] * pascal[jml][jmk - t] * int_pow(c, cos_exp) * int_pow(s, sin_exp);
        if (t % 2 != 0) term = -term;
        sum.add(term);
      }
      d(row, col) = static_cast<double>(norm * sum.value());
    }
  }

  WignerMatrix out(j, theta, std::move(d));
  const double residual = out.orthogonality_residual();
  if (!(residual <= kWignerSelfCheckTolerance)) {
    throw NumericalValidationError("Wigner d-matrix for j=" + j.to_string() +
                                   ", theta=" + std::to_string(theta) +
                                   " failed orthogonality check (residual " +
                                   std::to_string(residual) + ")");
  }
  return out;
}

IrrepBlock block_weights(int n_qubits, double r, HalfInteger j) {
  const std::uint64_t mult = multiplicity(n_qubits, j);
  const BlochState state(r, 0.0);
  IrrepBlock block{j, mult, {}};
  block.weights.reserve(j.twice() + 1);
  for (int tm = -j.twice(); tm <= j.twice(); tm += 2) {
    const int up = (n_qubits + tm) / 2;    // J + m
    const int down = (n_qubits - tm) / 2;  // J - m
    block.weights.push_back(std::pow(state.r_plus(), up) * std::pow(state.r_minus(), down));
  }
  return block;
}

}  // namespace covphase
