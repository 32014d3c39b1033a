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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "covphase/half_integer.hpp"

namespace covphase {

/// Single-qubit mixed state 1/2 (I + r sin(theta) sigma_x + r cos(theta) sigma_z).
///
/// `theta` is the polar angle from +z, so the equator is pi/2. Negative angles
/// down to -pi are accepted and describe the mirror image across the z axis.
class BlochState {
 public:
  /// Throws DomainError unless 0 <= r <= 1 and -pi <= theta <= pi.
  BlochState(double r, double theta_polar);

  double r() const { return r_; }
  double theta() const { return theta_; }
  double r_plus() const { return 0.5 * (1.0 + r_); }
  double r_minus() const { return 0.5 * (1.0 - r_); }

 private:
  double r_;
  double theta_;
};

/// Which cosine exponent the Wigner sum uses. `kDropTwoT` reproduces the
/// misprinted 2j+l-k exponent and only exists for fault-injection tests.
enum class CosineExponent { kStandard, kDropTwoT };

/// Real rotation matrix d^j(theta) for exp(-i theta J_y), rows and columns
/// indexed by magnetic label in ascending order (-j first).
class WignerMatrix {
 public:
  WignerMatrix(HalfInteger j, double theta, Eigen::MatrixXd entries);

  HalfInteger j() const { return j_; }
  double theta() const { return theta_; }
  int dim() const { return static_cast<int>(entries_.rows()); }

  /// d^j_{l,k}(theta). Labels must satisfy |l|,|k| <= j with the parity of j.
  double entry(HalfInteger l, HalfInteger k) const;
  const Eigen::MatrixXd& matrix() const { return entries_; }

  /// Zero-based row/column of magnetic label m.
  int index(HalfInteger m) const { return (m.twice() + j_.twice()) / 2; }

  /// max |d d^T - I| over all entries.
  double orthogonality_residual() const;

 private:
  HalfInteger j_;
  double theta_;
  Eigen::MatrixXd entries_;
};

/// One spin-j sector of rho^{(x)N}: multiplicity and diagonal weights of the
/// tau block in the rotated (Bloch-aligned) basis.
struct IrrepBlock {
  HalfInteger j;
  std::uint64_t multiplicity = 0;
  std::vector<double> weights;  // w_m for m = -j..j

  double weight(HalfInteger m) const { return weights[(m.twice() + j.twice()) / 2]; }
};

// Largest 2j for which the Wigner sum is guaranteed to pass its self-check.
inline constexpr int kWignerGuaranteedTwiceJ = 64;
inline constexpr double kWignerSelfCheckTolerance = 1e-8;

/// Spin labels <<N/2>>, <<N/2>>+1, ..., N/2. Throws DomainError for N < 1.
std::vector<HalfInteger> irrep_list(int n_qubits);

/// d_j = C(N, N/2-j) - C(N, N/2-j-1), exact.
///
/// Throws DomainError when j has the wrong parity or lies outside
/// [<<N/2>>, N/2], and ResourceLimitError if the binomials overflow 64 bits.
std::uint64_t multiplicity(int n_qubits, HalfInteger j);

/// Builds d^j(theta) from the explicit alternating sum over t with log-domain
/// factorials and compensated extended-precision accumulation, then checks
/// orthogonality. Throws NumericalValidationError if the residual exceeds
/// kWignerSelfCheckTolerance.
WignerMatrix wigner_d(HalfInteger j, double theta,
                      CosineExponent exponent = CosineExponent::kStandard);

/// w_m = r_+^{N/2+m} r_-^{N/2-m} for m = -j..j, plus d_j.
IrrepBlock block_weights(int n_qubits, double r, HalfInteger j);

}  // namespace covphase
