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

#include "covphase/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "covphase/errors.hpp"
#include "covphase/repr.hpp"

namespace covphase {
namespace {

using cd = std::complex<double>;

// Polar angle used by spectrum_check; anything off the z axis works.
constexpr double kSpectrumProbeTheta = 1.0;
constexpr double kHermitianTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-10;
constexpr double kUnitDiagonalTolerance = 1e-12;
constexpr double kRankOneTolerance = 1e-9;
constexpr double kRankTruncation = 4.0 * std::numeric_limits<double>::epsilon();

void check_dense_request(int n_qubits, int cap) {
  if (cap > kHardDenseCap) {
    throw ResourceLimitError("dense cap " + std::to_string(cap) + " exceeds hard limit " +
                             std::to_string(kHardDenseCap));
  }
  if (n_qubits < 1) {
    throw DomainError("qubit count must be >= 1, got " + std::to_string(n_qubits));
  }
  if (n_qubits > cap) {
    throw ResourceLimitError("dense oracle limited to N <= " + std::to_string(cap) +
                             ", requested N=" + std::to_string(n_qubits));
  }
}

void check_density_matrix(const Eigen::MatrixXcd& m, const char* name) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DomainError(std::string(name) + " must be a non-empty square matrix");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
    throw DomainError(std::string(name) + " is not Hermitian");
  }
  if (std::abs(m.trace() - cd(1.0, 0.0)) > kTraceTolerance) {
    throw DomainError(std::string(name) + " does not have unit trace");
  }
}

// Sum of singular values via two-sided Jacobi in real arithmetic. BDCSVD in
// Eigen 3.4.0 is off by up to 1e-4 on these rank-deficient blocks. A complex
// block A = X + iY has the singular values of [[X, -Y], [Y, X]], each twice.
double nuclear_norm(const Eigen::MatrixXcd& block) {
  const Eigen::MatrixXd re = block.real();
  const Eigen::MatrixXd im = block.imag();
  if (im.cwiseAbs().maxCoeff() == 0.0) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(re).singularValues().sum();
  }
  const Eigen::Index r = block.rows();
  const Eigen::Index c = block.cols();
  Eigen::MatrixXd embedded(2 * r, 2 * c);
  embedded << re, -im, im, re;
  return 0.5 * Eigen::JacobiSVD<Eigen::MatrixXd>(embedded).singularValues().sum();
}

}  // namespace

DenseState dense_state(int n_qubits, double r, double theta_polar, int cap) {
  check_dense_request(n_qubits, cap);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("purity r must lie in [0, 1], got " + std::to_string(r));
  }
  const double x = r * std::sin(theta_polar);
  const double z = r * std::cos(theta_polar);
  Eigen::Matrix2cd single;
  single << 0.5 * (1.0 + z), 0.5 * x, 0.5 * x, 0.5 * (1.0 - z);

  Eigen::MatrixXcd acc = single;
  for (int k = 1; k < n_qubits; ++k) {
    const Eigen::Index d = acc.rows();
    Eigen::MatrixXcd next(2 * d, 2 * d);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) next.block(a * d, b * d, d, d) = single(a, b) * acc;
    }
    acc = std::move(next);
  }
  return DenseState{n_qubits, std::move(acc)};
}

double oracle_avg_cosine(int n_qubits, double r, double theta_polar, int cap) {
  const DenseState state = dense_state(n_qubits, r, theta_polar, cap);
  const Eigen::Index dim = state.matrix.rows();

  std::vector<std::vector<Eigen::Index>> by_weight(n_qubits + 1);
  for (Eigen::Index i = 0; i < dim; ++i) {
    by_weight[std::popcount(static_cast<unsigned long long>(i))].push_back(i);
  }

  // Weight k has J_z eigenvalue N/2 - k, so (k, k+1) are adjacent eigenspaces.
  double total = 0.0;
  for (int k = 0; k < n_qubits; ++k) {
    total += nuclear_norm(state.matrix(by_weight[k], by_weight[k + 1]));
  }
  return total;
}

SpectrumReport spectrum_check(int n_qubits, double r, int cap) {
  const DenseState state = dense_state(n_qubits, r, kSpectrumProbeTheta, cap);
  SpectrumReport report;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(state.matrix, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = eig.eigenvalues();
  report.observed.assign(values.data(), values.data() + values.size());
  std::sort(report.observed.begin(), report.observed.end());

  for (const HalfInteger j : irrep_list(n_qubits)) {
    const IrrepBlock block = block_weights(n_qubits, r, j);
    for (double w : block.weights) report.predicted.insert(report.predicted.end(), block.multiplicity, w);
  }
  std::sort(report.predicted.begin(), report.predicted.end());

  std::ostringstream diff;
  if (report.predicted.size() != report.observed.size()) {
    diff << "size mismatch: predicted " << report.predicted.size() << ", observed "
         << report.observed.size() << "\n";
  } else {
    int shown = 0;
    for (std::size_t i = 0; i < report.predicted.size(); ++i) {
      const double d = std::fabs(report.predicted[i] - report.observed[i]);
      report.max_abs_diff = std::max(report.max_abs_diff, d);
      if (d > kSpectrumTolerance && shown++ < 8) {
        diff << "  [" << i << "] predicted " << report.predicted[i] << ", observed "
             << report.observed[i] << "\n";
      }
    }
  }
  report.diff = diff.str();
  report.ok = report.diff.empty();
  return report;
}

PovmReport povm_check(const std::vector<SeedBlock>& seed) {
  PovmReport report;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const SeedBlock& s : seed) {
    const std::string tag = "j=" + s.j.to_string() + ": ";
    const Eigen::Index dim = s.block.rows();
    if (dim != s.j.twice() + 1 || s.block.cols() != dim) {
      report.failures.push_back(tag + "block has the wrong shape");
      continue;
    }
    if ((s.block - s.block.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
      report.failures.push_back(tag + "block is not Hermitian");
      continue;
    }
    for (Eigen::Index a = 0; a < dim; ++a) {
      if (std::abs(s.block(a, a) - cd(1.0, 0.0)) > kUnitDiagonalTolerance) {
        std::ostringstream msg;
        msg << tag << "diagonal entry " << a << " is " << s.block(a, a).real()
            << ", normalization requires 1";
        report.failures.push_back(msg.str());
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(s.block, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = eig.eigenvalues();  // ascending
    report.min_eigenvalue = std::min(report.min_eigenvalue, ev(0));
    if (ev(0) < -kPsdTolerance) {
      report.failures.push_back(tag + "negative eigenvalue " + std::to_string(ev(0)));
    }
    const double top = ev(dim - 1);
    const double rest = dim > 1 ? ev.head(dim - 1).cwiseAbs().maxCoeff() : 0.0;
    if (std::fabs(top - static_cast<double>(dim)) > kRankOneTolerance || rest > kRankOneTolerance) {
      report.failures.push_back(tag + "not rank one with eigenvalue " + std::to_string(dim));
    }
  }
  report.ok = report.failures.empty();
  return report;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  Eigen::VectorXd ev = eig.eigenvalues();
  if (ev.size() == 0) return herm;
  if (ev(0) < -kPsdTolerance) {
    throw DomainError("matrix is not positive semidefinite (eigenvalue " +
                      std::to_string(ev(0)) + ")");
  }
  // Eigenvalues at roundoff level are exact zeros of a rank-deficient input;
  // taking their square root would inflate 1e-17 noise to 3e-9.
  const double floor = kRankTruncation * static_cast<double>(ev.size()) *
                       std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = ev(i) <= floor ? 0.0 : std::sqrt(ev(i));
  return eig.eigenvectors() * ev.asDiagonal() * eig.eigenvectors().adjoint();
}

double uhlmann_fidelity(const Eigen::MatrixXcd& rho_a, const Eigen::MatrixXcd& rho_b) {
  check_density_matrix(rho_a, "rho_a");
  check_density_matrix(rho_b, "rho_b");
  if (rho_a.rows() != rho_b.rows()) {
    throw DomainError("density matrices have different dimensions");
  }
  // Tr sqrt(sqrt(a) b sqrt(a)) = ||sqrt(a) sqrt(b)||_1; singular values avoid a
  // second square root of near-zero eigenvalues.
  const Eigen::MatrixXcd product = psd_sqrt(rho_a) * psd_sqrt(rho_b);
  const double trace_norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(product).singularValues().sum();
  return std::clamp(trace_norm * trace_norm, 0.0, 1.0);
}

}  // namespace covphase
