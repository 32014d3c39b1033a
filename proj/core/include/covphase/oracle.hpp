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

#include <Eigen/Dense>

#include "covphase/estimator.hpp"

// Exponential-cost reference computations on the full 2^N-dimensional space.
// The dense path groups computational-basis states by Hamming weight to get
// the J_z eigenspaces and shares no code with the SU(2) block route.

namespace covphase {

inline constexpr int kDefaultDenseCap = 12;
inline constexpr int kHardDenseCap = 14;

/// Eigenvalues below -kPsdTolerance make a matrix "not PSD".
inline constexpr double kPsdTolerance = 1e-10;

struct DenseState {
  int n_qubits = 0;
  Eigen::MatrixXcd matrix;
};

/// rho^{(x)N} for rho = 1/2 (I + r sin(theta) sigma_x + r cos(theta) sigma_z).
/// Qubit 0 is the most significant bit; |0> is spin up.
/// Throws ResourceLimitError if N exceeds `cap` or `cap` exceeds kHardDenseCap.
DenseState dense_state(int n_qubits, double r, double theta_polar,
                       int cap = kDefaultDenseCap);

/// sum_m || P_{m+1} R P_m ||_1, the basis-free optimum of the averaged cosine.
double oracle_avg_cosine(int n_qubits, double r, double theta_polar,
                         int cap = kDefaultDenseCap);

struct SpectrumReport {
  bool ok = false;
  double max_abs_diff = 0.0;
  std::vector<double> predicted;  // ascending
  std::vector<double> observed;   // ascending
  std::string diff;               // empty when ok
};

inline constexpr double kSpectrumTolerance = 1e-10;

/// Compares the dense spectrum of rho^{(x)N} with the multiset
/// {w_m(j) repeated d_j times}. The state is evaluated at a generic polar angle
/// since the spectrum does not depend on it.
SpectrumReport spectrum_check(int n_qubits, double r, int cap = kDefaultDenseCap);

struct PovmReport {
  bool ok = true;
  double min_eigenvalue = 0.0;
  std::vector<std::string> failures;
};

/// Per block: PSD, unit diagonal, rank one with eigenvalue 2j+1.
PovmReport povm_check(const std::vector<SeedBlock>& seed);

/// Hermitian PSD square root. Throws DomainError on eigenvalues below
/// -kPsdTolerance; smaller negative values are clamped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m);

/// F = (Tr sqrt(sqrt(a) b sqrt(a)))^2. Throws DomainError unless both inputs
/// are density matrices of equal dimension.
double uhlmann_fidelity(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b);

}  // namespace covphase
