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

// Reference computations used only by the tests. None of these go through
// the library's Wigner sum or block weights.

#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace covphase::testing {

/// exp(-i theta J_y) for spin j, basis ordered m = -j..j. -i J_y is real
/// antisymmetric, so the exponential is computed in real arithmetic.
inline Eigen::MatrixXd wigner_by_exponential(int twice_j, double theta) {
  const int dim = twice_j + 1;
  const double j = 0.5 * twice_j;
  Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(dim, dim);  // (J_+ - J_-)/2
  for (int a = 0; a + 1 < dim; ++a) {
    const double m = -j + a;
    const double raise = std::sqrt(j * (j + 1) - m * (m + 1));  // <m+1|J_+|m>
    generator(a + 1, a) += 0.5 * raise;
    generator(a, a + 1) -= 0.5 * raise;
  }
  return (-theta * generator).exp();
}

/// Total J^2 on N qubits in the computational basis.
inline Eigen::MatrixXcd total_spin_squared(int n_qubits) {
  using cd = std::complex<double>;
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, cd(0, -1), cd(0, 1), 0;
  sz << 1, 0, 0, -1;
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  auto embed = [&](const Eigen::Matrix2cd& op, int site) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = 0; k < n_qubits; ++k) {
      const Eigen::Matrix2cd factor = k == site ? op : Eigen::Matrix2cd::Identity();
      Eigen::MatrixXcd next(acc.rows() * 2, acc.cols() * 2);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          next.block(a * acc.rows(), b * acc.cols(), acc.rows(), acc.cols()) = factor(a, b) * acc;
      acc = next;
    }
    return acc;
  };
  Eigen::MatrixXcd jx = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd jy = jx, jz = jx;
  for (int k = 0; k < n_qubits; ++k) {
    jx += 0.5 * embed(sx, k);
    jy += 0.5 * embed(sy, k);
    jz += 0.5 * embed(sz, k);
  }
  return jx * jx + jy * jy + jz * jz;
}

/// <c> for the pure equatorial state: the symmetric block only, with binomial
/// amplitudes, 2^-N sum_k sqrt(C(N,k) C(N,k+1)).
inline double pure_equatorial_avg_cos(int n_qubits) {
  long double total = 0.0L;
  auto log_binom = [](int n, int k) {
    return std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L);
  };
  for (int k = 0; k < n_qubits; ++k) {
    total += std::exp(0.5L * (log_binom(n_qubits, k) + log_binom(n_qubits, k + 1)) -
                      n_qubits * std::log(2.0L));
  }
  return static_cast<double>(total);
}

/// (1/nodes) sum f(2 pi k / nodes): the composite trapezoid rule for the
/// normalised integral of a 2pi-periodic function.
inline double periodic_mean(const std::function<double(double)>& f, int nodes) {
  double acc = 0.0;
  for (int k = 0; k < nodes; ++k) acc += f(2.0 * std::numbers::pi * k / nodes);
  return acc / nodes;
}

}  // namespace covphase::testing
