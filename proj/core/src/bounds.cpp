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

#include "covphase/bounds.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "covphase/errors.hpp"

namespace covphase {
namespace {

using cd = std::complex<double>;

void check_purity(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("purity r must lie in [0, 1], got " + std::to_string(r));
  }
}

bool zero_information(double r, double theta_polar) {
  return r == 0.0 || theta_polar == 0.0 || std::fabs(theta_polar) == std::numbers::pi;
}

}  // namespace

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0.0, cd(0.0, -1.0), cd(0.0, 1.0), 0.0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Eigen::Matrix2cd qubit_density(double r, double theta_polar) {
  check_purity(r);
  return 0.5 * (Eigen::Matrix2cd::Identity() + r * std::sin(theta_polar) * pauli_x() +
                r * std::cos(theta_polar) * pauli_z());
}

Eigen::Matrix2cd phase_derivative(double r, double theta_polar) {
  check_purity(r);
  return 0.5 * r * std::sin(theta_polar) * pauli_y();
}

SldOperator sld(double r, double theta_polar) {
  check_purity(r);
  const double coefficient = r * std::sin(theta_polar);
  return SldOperator{coefficient * pauli_y(), coefficient};
}

double sld_residual(double r, double theta_polar) {
  const Eigen::Matrix2cd rho = qubit_density(r, theta_polar);
  const Eigen::Matrix2cd l = sld(r, theta_polar).matrix;
  return (0.5 * (rho * l + l * rho) - phase_derivative(r, theta_polar)).cwiseAbs().maxCoeff();
}

double quantum_fisher_information(double r, double theta_polar) {
  if (zero_information(r, theta_polar)) {
    check_purity(r);
    return 0.0;
  }
  const Eigen::Matrix2cd l = sld(r, theta_polar).matrix;
  return (qubit_density(r, theta_polar) * l * l).trace().real();
}

double cramer_rao(int n_qubits, double r, double theta_polar) {
  if (n_qubits < 1) {
    throw DomainError("qubit count must be >= 1, got " + std::to_string(n_qubits));
  }
  const double qfi = quantum_fisher_information(r, theta_polar);
  if (qfi <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (n_qubits * qfi);
}

double variance_proxy(double avg_cos) {
  if (!(avg_cos >= 0.0 && avg_cos <= 1.0)) {
    throw DomainError("averaged cosine must lie in [0, 1], got " + std::to_string(avg_cos));
  }
  return 2.0 * (1.0 - avg_cos);
}

}  // namespace covphase
