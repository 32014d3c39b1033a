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
#include "covphase/repr.hpp"

namespace covphase {

/// Seed phases gamma(m) of one spin-j sector, m = -j..j. Shared by all
/// alpha copies of the sector.
struct PhaseRow {
  HalfInteger j;
  std::vector<double> gammas;

  double gamma(HalfInteger m) const { return gammas[(m.twice() + j.twice()) / 2]; }
};

/// Rank-one Susskind-Glogower block |e><e| with e_m = exp(i gamma(m)).
struct SeedBlock {
  HalfInteger j;
  std::uint64_t multiplicity = 0;
  std::vector<double> gammas;
  Eigen::MatrixXcd block;  // block(m', m) = exp(i (gamma(m') - gamma(m)))
};

struct CostAverages {
  double variance;    // <v> = 2 (1 - <c>)
  double infidelity;  // <1 - F> = (r^2 / 2) (1 - <c>)
};

struct EstimationReport {
  int n_qubits = 0;
  double r = 0.0;
  double theta_polar = 0.0;
  double avg_cos = 0.0;
  double avg_variance_cost = 0.0;
  double avg_infidelity_cost = 0.0;
  double cr_bound = 0.0;        // +inf when the state carries no phase information
  double ratio_to_bound = 0.0;  // N <v> QFI
};

/// Values of <c> within this distance outside [0, 1] are clamped; anything
/// further raises NumericalValidationError.
inline constexpr double kAvgCosClampTolerance = 1e-12;

/// j-block of the rotated state, d diag(w) d^T, rows/cols ascending in m.
Eigen::MatrixXd rotated_block(const IrrepBlock& weights, const WignerMatrix& wigner);

/// Superdiagonal <m+1|R^(j)|m> for m = -j..j-1 without forming the block.
std::vector<double> block_coherences(const IrrepBlock& weights, const WignerMatrix& wigner);

/// Optimal averaged cosine
///   sum_j d_j sum_m | sum_n w_n d^j_{m+1,n} d^j_{m,n} |
/// in O(N^4) time. The j-sum runs in ascending order, so results are
/// bit-reproducible.
double averaged_cosine(int n_qubits, const BlochState& state);

/// Per-sector seed phases telescoped from gamma(j) = 0. Vanishing overlaps
/// contribute a zero phase.
std::vector<PhaseRow> seed_phases(int n_qubits, const BlochState& state);

SeedBlock make_seed_block(HalfInteger j, std::uint64_t multiplicity,
                          std::vector<double> gammas);

/// Optimal covariant POVM seed, one block per spin sector.
std::vector<SeedBlock> build_seed(int n_qubits, const BlochState& state);

/// Re sum <m|xi|m+1><m+1|R|m> for an arbitrary seed. For the seed returned by
/// build_seed this equals averaged_cosine.
double seed_average_cosine(int n_qubits, const BlochState& state,
                           const std::vector<SeedBlock>& seed);

/// Outcome density p(phi) = Tr[R U_phi xi U_phi^dag] relative to dphi / 2pi.
/// Blocks are built once; evaluation is O(sum_j (2j+1)^2) per angle.
class PhaseDensity {
 public:
  PhaseDensity(int n_qubits, const BlochState& state);
  PhaseDensity(int n_qubits, const BlochState& state, std::vector<SeedBlock> seed);

  double operator()(double phi) const;

  const std::vector<SeedBlock>& seed() const { return seed_; }

 private:
  struct Sector {
    double multiplicity;
    Eigen::MatrixXd state_block;
  };
  std::vector<Sector> sectors_;
  std::vector<SeedBlock> seed_;
};

double posterior_density(int n_qubits, const BlochState& state, double phi);

/// Throws DomainError if avg_cos lies outside [0, 1].
CostAverages cost_averages(double avg_cos, double r);

/// Full report for one (N, r, theta) point. The infidelity cost uses the
/// equatorial Bloch component r |sin theta|, which is the part of the state the
/// phase shift actually rotates; at theta = pi/2 it reduces to r.
EstimationReport evaluate(int n_qubits, const BlochState& state);

}  // namespace covphase
