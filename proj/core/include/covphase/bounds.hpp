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

#include <Eigen/Dense>

namespace covphase {

/// Symmetric logarithmic derivative of the single-qubit phase family at
/// phi = 0. Always a real multiple of sigma_y.
struct SldOperator {
  Eigen::Matrix2cd matrix;
  double coefficient = 0.0;
};

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

/// 1/2 (I + r sin(theta) sigma_x + r cos(theta) sigma_z).
Eigen::Matrix2cd qubit_density(double r, double theta_polar);

/// d/dphi of exp(-i phi sigma_z / 2) rho exp(i phi sigma_z / 2) at phi = 0,
/// i.e. (r sin(theta) / 2) sigma_y.
Eigen::Matrix2cd phase_derivative(double r, double theta_polar);

/// L = r sin(theta) sigma_y.
SldOperator sld(double r, double theta_polar);

/// max |1/2 (rho L + L rho) - d rho/d phi| entrywise.
double sld_residual(double r, double theta_polar);

/// Tr[rho L^2] for one qubit.
double quantum_fisher_information(double r, double theta_polar);

/// 1 / (N r^2 sin^2 theta); +inf when r = 0 or theta is 0 or +-pi.
double cramer_rao(int n_qubits, double r, double theta_polar);

/// Small-angle estimate 2 (1 - <c>) of the phase variance.
double variance_proxy(double avg_cos);

}  // namespace covphase
