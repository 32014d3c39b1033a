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

#include "covphase/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "covphase/bounds.hpp"
#include "covphase/errors.hpp"

namespace covphase {
namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit_interval(double value) {
  if (value < 0.0) {
    if (value < -kAvgCosClampTolerance) {
      throw NumericalValidationError("averaged cosine " + std::to_string(value) +
                                     " is below 0");
    }
    return 0.0;
  }
  if (value > 1.0) {
    if (value > 1.0 + kAvgCosClampTolerance) {
      throw NumericalValidationError("averaged cosine " + std::to_string(value) +
                                     " exceeds 1");
    }
    return 1.0;
  }
  return value;
}

}  // namespace

Eigen::MatrixXd rotated_block(const IrrepBlock& weights, const WignerMatrix& wigner) {
  const Eigen::Map<const Eigen::VectorXd> w(weights.weights.data(),
                                            static_cast<Eigen::Index>(weights.weights.size()));
  const Eigen::MatrixXd& d = wigner.matrix();
  return d * w.asDiagonal() * d.transpose();
}

std::vector<double> block_coherences(const IrrepBlock& weights, const WignerMatrix& wigner) {
  const Eigen::MatrixXd& d = wigner.matrix();
  const int dim = wigner.dim();
  std::vector<double> out(dim > 0 ? dim - 1 : 0);
  // Constant weights (r = 0) make the block a multiple of the identity.
  const auto& w = weights.weights;
  if (std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) == w.end()) return out;
  for (int a = 0; a + 1 < dim; ++a) {
    double acc = 0.0;
    for (int n = 0; n < dim; ++n) acc += weights.weights[n] * d(a + 1, n) * d(a, n);
    out[a] = acc;
  }
  return out;
}

double averaged_cosine(int n_qubits, const BlochState& state) {
  double total = 0.0;
  for (const HalfInteger j : irrep_list(n_qubits)) {
    const IrrepBlock block = block_weights(n_qubits, state.r(), j);
    const WignerMatrix d = wigner_d(j, state.theta());
    double sector = 0.0;
    for (double c : block_coherences(block, d)) sector += std::fabs(c);
    total += static_cast<double>(block.multiplicity) * sector;
  }
  return clamp_unit_interval(total);
}

std::vector<PhaseRow> seed_phases(int n_qubits, const BlochState& state) {
  std::vector<PhaseRow> rows;
  for (const HalfInteger j : irrep_list(n_qubits)) {
    const IrrepBlock block = block_weights(n_qubits, state.r(), j);
    const std::vector<double> coh = block_coherences(block, wigner_d(j, state.theta()));
    const int dim = j.twice() + 1;
    PhaseRow row{j, std::vector<double>(dim, 0.0)};
    // gamma(m) = gamma(m+1) + arg <m+1|R|m>, with gamma(j) = 0. The overlaps are
    // real, so every phase is 0 or pi.
    for (int a = dim - 2; a >= 0; --a) {
      const double chi = coh[a] < 0.0 ? kPi : 0.0;
      double g = row.gammas[a + 1] + chi;
      if (g >= 2.0 * kPi) g -= 2.0 * kPi;
      row.gammas[a] = g;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SeedBlock make_seed_block(HalfInteger j, std::uint64_t multiplicity,
                          std::vector<double> gammas) {
  const int dim = j.twice() + 1;
  if (static_cast<int>(gammas.size()) != dim) {
    throw DomainError("seed for j=" + j.to_string() + " needs " + std::to_string(dim) +
                      " phases, got " + std::to_string(gammas.size()));
  }
  Eigen::VectorXcd e(dim);
  for (int a = 0; a < dim; ++a) e(a) = std::polar(1.0, gammas[a]);
  SeedBlock out{j, multiplicity, std::move(gammas), e * e.adjoint()};
  // |e_m| = 1 exactly in exact arithmetic; pin the diagonal so normalization
  // holds bit-for-bit.
  for (int a = 0; a < dim; ++a) out.block(a, a) = 1.0;
  return out;
}

std::vector<SeedBlock> build_seed(int n_qubits, const BlochState& state) {
  std::vector<SeedBlock> seed;
  for (PhaseRow& row : seed_phases(n_qubits, state)) {
    seed.push_back(make_seed_block(row.j, multiplicity(n_qubits, row.j), std::move(row.gammas)));
  }
  return seed;
}

double seed_average_cosine(int n_qubits, const BlochState& state,
                           const std::vector<SeedBlock>& seed) {
  const std::vector<HalfInteger> irreps = irrep_list(n_qubits);
  if (seed.size() != irreps.size()) {
    throw DomainError("seed has " + std::to_string(seed.size()) + " blocks, expected " +
                      std::to_string(irreps.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const HalfInteger j = irreps[i];
    if (seed[i].j != j || seed[i].block.rows() != j.twice() + 1) {
      throw DomainError("seed block " + std::to_string(i) + " does not match j=" +
                        j.to_string());
    }
    const IrrepBlock block = block_weights(n_qubits, state.r(), j);
    const std::vector<double> coh = block_coherences(block, wigner_d(j, state.theta()));
    double sector = 0.0;
    for (std::size_t a = 0; a < coh.size(); ++a) {
      sector += (seed[i].block(a, a + 1) * coh[a]).real();
    }
    total += static_cast<double>(block.multiplicity) * sector;
  }
  return total;
}

PhaseDensity::PhaseDensity(int n_qubits, const BlochState& state)
    : PhaseDensity(n_qubits, state, build_seed(n_qubits, state)) {}

PhaseDensity::PhaseDensity(int n_qubits, const BlochState& state, std::vector<SeedBlock> seed)
    : seed_(std::move(seed)) {
  const std::vector<HalfInteger> irreps = irrep_list(n_qubits);
  if (seed_.size() != irreps.size()) {
    throw DomainError("seed has " + std::to_string(seed_.size()) + " blocks, expected " +
                      std::to_string(irreps.size()));
  }
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const IrrepBlock block = block_weights(n_qubits, state.r(), irreps[i]);
    if (seed_[i].block.rows() != irreps[i].twice() + 1) {
      throw DomainError("seed block " + std::to_string(i) + " has the wrong size");
    }
    sectors_.push_back(Sector{static_cast<double>(block.multiplicity),
                              rotated_block(block, wigner_d(irreps[i], state.theta()))});
  }
}

double PhaseDensity::operator()(double phi) const {
  double total = 0.0;
  for (std::size_t i = 0; i < sectors_.size(); ++i) {
    const Eigen::MatrixXd& rho = sectors_[i].state_block;
    const Eigen::MatrixXcd& xi = seed_[i].block;
    const int dim = static_cast<int>(rho.rows());
    std::vector<std::complex<double>> phase(2 * dim - 1);
    for (int k = -(dim - 1); k <= dim - 1; ++k) phase[k + dim - 1] = std::polar(1.0, k * phi);
    double sector = 0.0;
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        sector += rho(a, b) * (xi(b, a) * phase[b - a + dim - 1]).real();
      }
    }
    total += sectors_[i].multiplicity * sector;
  }
  return total;
}

double posterior_density(int n_qubits, const BlochState& state, double phi) {
  return PhaseDensity(n_qubits, state)(phi);
}

CostAverages cost_averages(double avg_cos, double r) {
  if (!(avg_cos >= 0.0 && avg_cos <= 1.0)) {
    throw DomainError("averaged cosine must lie in [0, 1], got " + std::to_string(avg_cos));
  }
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("purity r must lie in [0, 1], got " + std::to_string(r));
  }
  const double gap = 1.0 - avg_cos;
  return CostAverages{2.0 * gap, 0.5 * r * r * gap};
}

EstimationReport evaluate(int n_qubits, const BlochState& state) {
  EstimationReport report;
  report.n_qubits = n_qubits;
  report.r = state.r();
  report.theta_polar = state.theta();
  report.avg_cos = averaged_cosine(n_qubits, state);
  const CostAverages costs =
      cost_averages(report.avg_cos, state.r() * std::fabs(std::sin(state.theta())));
  report.avg_variance_cost = costs.variance;
  report.avg_infidelity_cost = costs.infidelity;
  report.cr_bound = cramer_rao(n_qubits, state.r(), state.theta());
  report.ratio_to_bound =
      n_qubits * costs.variance * quantum_fisher_information(state.r(), state.theta());
  return report;
}

}  // namespace covphase
