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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "covphase/bounds.hpp"
#include "covphase/errors.hpp"
#include "support/reference.hpp"

namespace covphase {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNodes = 1 << 12;

double avg_cos(int n, double r, double theta) { return averaged_cosine(n, BlochState(r, theta)); }

TEST(AveragedCosineTest, SingleQubit) {
  for (double r : {0.0, 0.2, 0.6, 1.0}) {
    EXPECT_NEAR(avg_cos(1, r, kPi / 2), r / 2, 1e-12);
    for (double theta : {0.3, 1.2, 2.9}) {
      EXPECT_NEAR(avg_cos(1, r, theta), r * std::sin(theta) / 2, 1e-12);
    }
  }
}

TEST(AveragedCosineTest, NoPhaseInformationGivesExactZero) {
  for (int n : {1, 2, 5, 12, 30}) {
    EXPECT_EQ(avg_cos(n, 0.0, 0.9), 0.0);
    EXPECT_EQ(avg_cos(n, 0.7, 0.0), 0.0);
  }
}

TEST(AveragedCosineTest, TwoPureQubits) {
  EXPECT_NEAR(avg_cos(2, 1.0, kPi / 2), std::sqrt(2.0) / 2, 1e-12);
}

TEST(AveragedCosineTest, PureEquatorialClosedForm) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_NEAR(avg_cos(n, 1.0, kPi / 2), testing::pure_equatorial_avg_cos(n), 1e-12) << "N=" << n;
  }
}

TEST(AveragedCosineTest, Symmetries) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const double r = unit(rng);
    const double theta = kPi * unit(rng);
    const double c = avg_cos(n, r, theta);
    EXPECT_NEAR(c, avg_cos(n, r, kPi - theta), 1e-12);
    EXPECT_NEAR(c, avg_cos(n, r, -theta), 1e-12);
  }
}

TEST(AveragedCosineTest, MonotoneInPurityAtEquator) {
  for (int n = 1; n <= 12; ++n) {
    double prev = -1.0;
    for (int k = 0; k <= 20; ++k) {
      const double c = avg_cos(n, k / 20.0, kPi / 2);
      EXPECT_GE(c, prev) << "N=" << n << " r=" << k / 20.0;
      prev = c;
    }
  }
}

TEST(AveragedCosineTest, ArgmaxOverThetaAtEquator) {
  for (int n = 1; n <= 12; ++n) {
    for (double r : {0.3, 0.7, 1.0}) {
      int best = 0;
      double best_value = -1.0;
      for (int i = 0; i <= 64; ++i) {
        const double c = avg_cos(n, r, kPi * i / 64);
        if (c > best_value) {
          best_value = c;
          best = i;
        }
      }
      EXPECT_LE(std::abs(best - 32), 1) << "N=" << n << " r=" << r;
    }
  }
}

TEST(AveragedCosineTest, BoundedAndReproducible) {
  for (int n : {3, 17, 40}) {
    const double a = avg_cos(n, 0.8, 1.0);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 1.0);
    EXPECT_EQ(a, avg_cos(n, 0.8, 1.0));
  }
}

TEST(SeedPhasesTest, PositiveOverlapsNeedNoCompensation) {
  for (const PhaseRow& row : seed_phases(1, BlochState(0.5, kPi / 2))) {
    for (double g : row.gammas) EXPECT_EQ(g, 0.0);
  }
}

TEST(SeedPhasesTest, MultiplesOfPiAndTelescoping) {
  for (int n : {2, 5, 8}) {
    for (double theta : {0.4, kPi / 2, 2.6}) {
      const BlochState state(0.7, theta);
      const auto rows = seed_phases(n, state);
      for (const PhaseRow& row : rows) {
        ASSERT_EQ(static_cast<int>(row.gammas.size()), row.j.twice() + 1);
        EXPECT_EQ(row.gammas.back(), 0.0);  // gamma(j) = 0
        for (double g : row.gammas) {
          const double k = g / kPi;
          EXPECT_NEAR(k, std::round(k), 1e-15);
        }
        const IrrepBlock block = block_weights(n, state.r(), row.j);
        const auto coh = block_coherences(block, wigner_d(row.j, theta));
        for (std::size_t a = 0; a < coh.size(); ++a) {
          const double chi = coh[a] < 0 ? kPi : 0.0;
          const double residual = std::remainder(row.gammas[a] - row.gammas[a + 1] - chi, 2 * kPi);
          EXPECT_NEAR(residual, 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(SeedPhasesTest, ZeroOverlapConvention) {
  for (const PhaseRow& row : seed_phases(4, BlochState(0.0, 1.0))) {
    for (double g : row.gammas) EXPECT_EQ(g, 0.0);
  }
  for (const PhaseRow& row : seed_phases(4, BlochState(0.8, 0.0))) {
    for (double g : row.gammas) EXPECT_EQ(g, 0.0);
  }
}

TEST(BuildSeedTest, SpinHalfAllOnes) {
  const SeedBlock s = make_seed_block(kHalf, 1, {0.0, 0.0});
  EXPECT_EQ(s.block, Eigen::MatrixXcd::Ones(2, 2));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(s.block);
  EXPECT_NEAR(eig.eigenvalues()(0), 0.0, 1e-15);
  EXPECT_NEAR(eig.eigenvalues()(1), 2.0, 1e-15);
}

TEST(BuildSeedTest, UnitDiagonalRankOne) {
  for (int n : {3, 6, 9}) {
    for (const SeedBlock& s : build_seed(n, BlochState(0.8, 1.1))) {
      const Eigen::Index dim = s.block.rows();
      for (Eigen::Index a = 0; a < dim; ++a) EXPECT_EQ(s.block(a, a), std::complex<double>(1.0, 0.0));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(s.block);
      EXPECT_NEAR(eig.eigenvalues()(dim - 1), static_cast<double>(dim), 1e-12);
      if (dim > 1) EXPECT_LE(eig.eigenvalues().head(dim - 1).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(BuildSeedTest, SingleQubitCanonicalPhasePovm) {
  // U_phi xi U_phi^dag with xi = all-ones is |e_phi><e_phi|, e_phi = (e^{-i phi/2}, e^{i phi/2})
  // in the (down, up) ordering; the outcome density is then 1 + r sin(theta) cos(phi).
  const BlochState state(0.6, 1.0);
  const auto seed = build_seed(1, state);
  ASSERT_EQ(seed.size(), 1u);
  EXPECT_EQ(seed[0].block, Eigen::MatrixXcd::Ones(2, 2));
  const PhaseDensity density(1, state, seed);
  for (double phi : {0.0, 0.5, 2.0, 4.4}) {
    EXPECT_NEAR(density(phi), 1.0 + 0.6 * std::sin(1.0) * std::cos(phi), 1e-14);
  }
}

TEST(BuildSeedTest, BoundChainIsTight) {
  const std::vector<double> rs = {0.0, 0.3, 0.7, 1.0};
  const std::vector<double> thetas = {0.0, kPi / 4, kPi / 2, 2.0};
  for (int n = 1; n <= 10; ++n) {
    for (double r : rs) {
      for (double theta : thetas) {
        const BlochState state(r, theta);
        EXPECT_NEAR(seed_average_cosine(n, state, build_seed(n, state)),
                    averaged_cosine(n, state), 1e-12)
            << "N=" << n << " r=" << r << " theta=" << theta;
      }
    }
  }
}

TEST(BuildSeedTest, UncompensatedSeedIsWorse) {
  const int n = 5;
  const BlochState state(0.9, 1.3);
  std::vector<SeedBlock> flat;
  for (auto j : irrep_list(n)) {
    flat.push_back(make_seed_block(j, multiplicity(n, j), std::vector<double>(j.twice() + 1, 0.0)));
  }
  EXPECT_LE(seed_average_cosine(n, state, flat), averaged_cosine(n, state) + 1e-12);
}

TEST(GaugeTest, PerBlockShiftIsUnobservable) {
  const int n = 6;
  const BlochState state(0.75, 1.2);
  const auto seed = build_seed(n, state);
  std::vector<SeedBlock> shifted;
  double shift = 0.37;
  for (const SeedBlock& s : seed) {
    std::vector<double> g = s.gammas;
    for (double& x : g) x += shift;
    shifted.push_back(make_seed_block(s.j, s.multiplicity, g));
    shift += 1.1;
  }
  EXPECT_NEAR(seed_average_cosine(n, state, shifted), averaged_cosine(n, state), 1e-12);
  const PhaseDensity a(n, state, seed);
  const PhaseDensity b(n, state, shifted);
  for (double phi : {0.0, 0.8, 3.0, 5.5}) EXPECT_NEAR(a(phi), b(phi), 1e-12);
}

TEST(PosteriorDensityTest, UniformWithoutPhaseInformation) {
  const PhaseDensity density(5, BlochState(0.0, 1.0));
  for (double phi : {0.0, 1.0, 2.5, 6.0}) EXPECT_NEAR(density(phi), 1.0, 1e-12);
}

TEST(PosteriorDensityTest, NormalizationFirstMomentAndPositivity) {
  for (int n = 1; n <= 8; ++n) {
    for (double r : {0.25, 0.75, 1.0}) {
      for (double theta : {kPi / 8, kPi / 2}) {
        const BlochState state(r, theta);
        const PhaseDensity density(n, state);
        EXPECT_NEAR(testing::periodic_mean(density, kNodes), 1.0, 1e-9);
        EXPECT_NEAR(testing::periodic_mean([&](double p) { return density(p) * std::cos(p); }, kNodes),
                    averaged_cosine(n, state), 1e-9);
        double min_p = 1.0;
        for (int k = 0; k < kNodes; ++k) {
          const double phi = 2 * kPi * k / kNodes;
          min_p = std::min(min_p, density(phi));
          EXPECT_NEAR(density(phi), density(-phi), 1e-12);
        }
        EXPECT_GE(min_p, -1e-10);
      }
    }
  }
}

TEST(PosteriorDensityTest, FreeFunctionMatchesClass) {
  const BlochState state(0.5, 0.9);
  EXPECT_EQ(posterior_density(4, state, 1.3), PhaseDensity(4, state)(1.3));
}

TEST(PosteriorDensityTest, RejectsMismatchedSeed) {
  const BlochState state(0.5, 0.9);
  EXPECT_THROW(PhaseDensity(4, state, build_seed(3, state)), DomainError);
  EXPECT_THROW(seed_average_cosine(4, state, build_seed(3, state)), DomainError);
}

TEST(CostAveragesTest, Examples) {
  const CostAverages perfect = cost_averages(1.0, 0.4);
  EXPECT_EQ(perfect.variance, 0.0);
  EXPECT_EQ(perfect.infidelity, 0.0);
  const CostAverages c = cost_averages(0.75, 1.0);
  EXPECT_DOUBLE_EQ(c.variance, 0.5);
  EXPECT_DOUBLE_EQ(c.infidelity, 0.125);
  EXPECT_EQ(cost_averages(0.3, 0.0).infidelity, 0.0);
  EXPECT_THROW(cost_averages(1.2, 0.5), DomainError);
  EXPECT_THROW(cost_averages(-0.1, 0.5), DomainError);
}

TEST(EvaluateTest, ReportFieldsAreConsistent) {
  const EstimationReport rep = evaluate(10, BlochState(0.8, kPi / 2));
  EXPECT_EQ(rep.n_qubits, 10);
  EXPECT_DOUBLE_EQ(rep.avg_variance_cost, 2 * (1 - rep.avg_cos));
  EXPECT_DOUBLE_EQ(rep.avg_infidelity_cost, 0.32 * (1 - rep.avg_cos));
  EXPECT_NEAR(rep.cr_bound, 0.15625, 1e-15);
  EXPECT_NEAR(rep.ratio_to_bound, rep.avg_variance_cost / rep.cr_bound, 1e-12);

  const EstimationReport flat = evaluate(3, BlochState(0.5, 0.0));
  EXPECT_EQ(flat.avg_cos, 0.0);
  EXPECT_TRUE(std::isinf(flat.cr_bound));
  EXPECT_EQ(flat.ratio_to_bound, 0.0);
}

}  // namespace
}  // namespace covphase
