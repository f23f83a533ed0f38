// Copyright 2026 The tcrystal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tcrystal/correlation.hpp"
#include "tcrystal/hilbert.hpp"
#include "tcrystal/models.hpp"
#include "tcrystal/spectral.hpp"

namespace tcrystal {
namespace {

const TimeGrid kGrid20{0.0, 0.05, 401};  // t in [0, 20]

double max_deviation(const TimeSeries& ts, const std::function<complex(double)>& want) {
  double worst = 0.0;
  for (std::size_t k = 0; k < ts.values.size(); ++k) {
    worst = std::max(worst, std::abs(ts.values[k] - want(ts.grid.at(k))));
  }
  return worst;
}

std::vector<double> random_times(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(0.0, 20.0);
  std::vector<double> t(static_cast<std::size_t>(count));
  for (auto& x : t) x = u(rng);
  return t;
}

// Ground-state projector (pure or manifold-averaged) from the eigensolver
// only through the eigenvector, so the time dependence is fully independent.
Eigen::MatrixXcd ground_density(const SpectralDecomposition& sd, int m) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(sd.dim(), sd.dim());
  for (int i = 0; i < m; ++i) rho += sd.eigenvector(i) * sd.eigenvector(i).adjoint();
  return rho / static_cast<double>(m);
}

TEST(ZeroTemperatureTest, XyStringIsPureTone) {
  for (int n = 3; n <= 8; ++n) {
    for (double J : {0.5, 1.0, 2.0}) {
      const auto sd = diagonalize(build_xy_string(n, J));
      const auto ts = correlation_zero_t(sd, mz_operator(n), kGrid20);
      EXPECT_LT(max_deviation(ts, [J](double t) { return std::polar(1.0, -J * t); }), 1e-10) << n << " " << J;
    }
  }
}

TEST(ZeroTemperatureTest, GhzProjectorIsPureTone) {
  for (int n = 2; n <= 6; ++n) {
    const auto sd = diagonalize(build_projector_hamiltonian({n, {make_ghz(GhzSign::Plus, n)}, {-1.0}}));
    const auto ts = correlation_zero_t(sd, mz_operator(n), kGrid20);
    EXPECT_LT(max_deviation(ts, [](double t) { return std::polar(1.0, -t); }), 1e-10) << n;
    EXPECT_LT(max_deviation(correlation_mixed_gs(sd, kDefaultDegeneracyTol, kGrid20),
                            [](double t) { return std::polar(1.0, -t); }),
              1e-10);
  }
}

TEST(ZeroTemperatureTest, HjIsOrderParameterTone) {
  for (int n : {6, 8}) {
    for (double J : {0.5, 1.0, 2.0}) {
      const auto sd = diagonalize(build_hj(n, J));
      const double O = order_parameter(ground_state(sd));
      const double w = 2 * (std::sqrt(1 + J * J) - 1);
      const auto ts = correlation_zero_t(sd, mz_operator(n), kGrid20);
      EXPECT_LT(max_deviation(ts, [&](double t) { return O * std::polar(1.0, -w * t); }), 1e-9);
    }
  }
}

// Odd n: the half-flip pair is magnetized, so a weaker second harmonic appears
// while the gap frequency still dominates.
TEST(ZeroTemperatureTest, HjOddSitesDominatedByGap) {
  for (int n : {5, 7, 9}) {
    for (double J : {0.5, 1.0, 2.0}) {
      const auto sd = diagonalize(build_hj(n, J));
      const auto h = merge_harmonics(ground_manifold_harmonics(sd, mz_operator(n), mz_operator(n)));
      EXPECT_NEAR(dominant_harmonic(h).omega, -2 * (std::sqrt(1 + J * J) - 1), 1e-9);
    }
  }
}

TEST(ZeroTemperatureTest, DegenerateGroundStateNamesDegeneracy) {
  const auto sd = diagonalize(build_ising_ring(4));
  try {
    correlation_zero_t(sd, mz_operator(4), kGrid20);
    FAIL() << "expected DegenerateGroundStateError";
  } catch (const DegenerateGroundStateError& e) {
    EXPECT_EQ(e.degeneracy(), 2);
    EXPECT_NE(std::string(e.what()).find("gs_degeneracy"), std::string::npos);
  }
  EXPECT_THROW(correlation_local_zz(sd, 1, 2, kGrid20), DegenerateGroundStateError);
}

TEST(ZeroTemperatureTest, GridValidation) {
  const auto sd = diagonalize(build_xy_string(3, 1.0));
  EXPECT_THROW(correlation_zero_t(sd, mz_operator(3), TimeGrid{0.0, 0.0, 10}), std::invalid_argument);
  EXPECT_THROW(correlation_zero_t(sd, mz_operator(3), TimeGrid{0.0, 0.1, 1}), std::invalid_argument);
  EXPECT_THROW(correlation_zero_t(sd, mz_operator(4), kGrid20), std::invalid_argument);
}

TEST(LocalZzTest, CoincidesWithMzForXyString) {
  for (int n = 3; n <= 6; ++n) {
    const auto sd = diagonalize(build_xy_string(n, 1.0));
    const auto mz = correlation_zero_t(sd, mz_operator(n), kGrid20);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const auto zz = correlation_local_zz(sd, i, j, kGrid20);
        for (std::size_t k = 0; k < zz.values.size(); ++k) {
          ASSERT_LT(std::abs(zz.values[k] - mz.values[k]), 1e-10) << i << "," << j;
        }
      }
    }
  }
}

TEST(LocalZzTest, EqualSitesAtZero) {
  const auto sd = diagonalize(build_hj(6, 1.0));
  for (int i = 1; i <= 6; ++i) {
    EXPECT_NEAR(std::abs(correlation_local_zz(sd, i, i, kGrid20).values[0] - 1.0), 0.0, 1e-12);
  }
  EXPECT_THROW(correlation_local_zz(sd, 0, 1, kGrid20), std::out_of_range);
  EXPECT_THROW(correlation_local_zz(sd, 1, 7, kGrid20), std::out_of_range);
}

TEST(MixedGroundStateTest, IsingRingIsConstant) {
  for (int n : {4, 6}) {
    const auto sd = diagonalize(build_ising_ring(n));
    EXPECT_LT(max_deviation(correlation_mixed_gs(sd, kDefaultDegeneracyTol, kGrid20),
                            [](double) { return complex(1.0); }),
              1e-12);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        OperatorSum zi(n), zj(n);
        zi.add(1.0, PauliString::single(n, i - 1, Pauli::Z));
        zj.add(1.0, PauliString::single(n, j - 1, Pauli::Z));
        EXPECT_LT(max_deviation(correlation_mixed_gs(sd, zi, zj, kDefaultDegeneracyTol, kGrid20),
                                [](double) { return complex(1.0); }),
                  1e-12);
      }
    }
  }
}

TEST(MixedGroundStateTest, ReducesToPureWhenNondegenerate) {
  const auto sd = diagonalize(build_hj(6, 0.8));
  const auto pure = correlation_zero_t(sd, mz_operator(6), kGrid20);
  const auto mixed = correlation_mixed_gs(sd, kDefaultDegeneracyTol, kGrid20);
  for (std::size_t k = 0; k < pure.values.size(); ++k) EXPECT_LT(std::abs(pure.values[k] - mixed.values[k]), 1e-14);
}

TEST(ThermalTest, InfiniteTemperatureAnchor) {
  for (int n = 4; n <= 9; ++n) {
    for (const auto& h : {build_hj(n, 1.0), build_xy_string(n, 1.0), build_ising_ring(n)}) {
      const auto ts = correlation_thermal(diagonalize(h), 0.0, kGrid20);
      EXPECT_NEAR(ts.values[0].real(), oracle::binomial_variance(n), 1e-12);
      EXPECT_NEAR(ts.values[0].real(), 1.0 / n, 1e-12);
      EXPECT_NEAR(ts.values[0].imag(), 0.0, 1e-14);
    }
  }
}

TEST(ThermalTest, LowTemperatureMatchesGroundState) {
  const auto sd = diagonalize(build_xy_string(6, 1.0));
  const auto zero = correlation_zero_t(sd, mz_operator(6), kGrid20);
  for (double beta : {50.0, 100.0}) {
    const auto th = correlation_thermal(sd, beta, kGrid20);
    for (std::size_t k = 0; k < zero.values.size(); ++k) EXPECT_LT(std::abs(th.values[k] - zero.values[k]), 1e-6);
  }
  const auto hj = diagonalize(build_hj(8, 1.0));
  const auto z8 = correlation_zero_t(hj, mz_operator(8), kGrid20);
  const auto t8 = correlation_thermal(hj, 100.0, kGrid20);
  for (std::size_t k = 0; k < z8.values.size(); ++k) EXPECT_LT(std::abs(t8.values[k] - z8.values[k]), 1e-6);
}

TEST(ThermalTest, InfiniteBetaIsGroundManifold) {
  const auto sd = diagonalize(build_ising_ring(5));
  const auto th = correlation_thermal(sd, kInfiniteBeta, kGrid20);
  EXPECT_LT(max_deviation(th, [](double) { return complex(1.0); }), 1e-12);
  EXPECT_THROW(correlation_thermal(sd, -1.0, kGrid20), std::invalid_argument);
}

// Property: |f(t)| <= f(0) for every ensemble.
TEST(CorrelationProperty, BoundedByInitialValue) {
  for (int n : {5, 6}) {
    const auto sd = diagonalize(build_hj(n, 1.0));
    std::vector<TimeSeries> all{correlation_zero_t(sd, mz_operator(n), kGrid20),
                                correlation_mixed_gs(sd, kDefaultDegeneracyTol, kGrid20)};
    for (double beta : {0.0, 0.3, 1.0, 5.0}) all.push_back(correlation_thermal(sd, beta, kGrid20));
    for (const auto& ts : all) {
      const double f0 = ts.values[0].real();
      EXPECT_NEAR(ts.values[0].imag(), 0.0, 1e-13);
      for (const auto& v : ts.values) EXPECT_LE(std::abs(v), f0 + 1e-12);
    }
  }
}

// Property: thermal correlations depend on time differences only.
TEST(CorrelationProperty, ThermalStationarity) {
  const auto sd = diagonalize(build_hj(6, 1.0));
  const auto h = thermal_harmonics(sd, 1.0);
  const auto dense = to_dense(build_hj(6, 1.0));
  const auto rho = oracle::gibbs_state(dense, 1.0, sd.ground_energy());
  const auto mz = oracle::mz_matrix(6);
  for (double s : {0.7, 3.1}) {
    for (double t : {0.0, 1.3, 4.4}) {
      // Tr(rho A(t+s) B(s)) must equal Tr(rho A(t) B(0)).
      const auto us = oracle::evolution(dense, s), ut = oracle::evolution(dense, t + s);
      const complex shifted = (rho * ut.adjoint() * mz * ut * us.adjoint() * mz * us).trace();
      EXPECT_LT(std::abs(shifted - evaluate(h, t)), 1e-10);
      EXPECT_LT(std::abs(evaluate(h, (t + s) - s) - evaluate(h, t)), 1e-10);
    }
  }
}

// Oracle equivalence: Lehmann sums against matrix-exponential evolution.
TEST(CorrelationOracle, MatchesDirectEvolution) {
  std::mt19937_64 rng(1234);
  for (int n = 4; n <= 6; ++n) {
    const auto times = random_times(rng, 10);
    const Eigen::MatrixXcd mz = oracle::mz_matrix(n);
    for (const auto& op : {build_hj(n, 1.0), build_xy_string(n, 0.7)}) {
      const Eigen::MatrixXcd h = oracle::kron_dense(op);
      const auto sd = diagonalize(op);
      const auto rho0 = ground_density(sd, 1);
      const auto hz = ground_manifold_harmonics(sd, mz_operator(n), mz_operator(n));
      OperatorSum z1(n), z2(n);
      z1.add(1.0, PauliString::single(n, 0, Pauli::Z));
      z2.add(1.0, PauliString::single(n, 2, Pauli::Z));
      const auto hzz = ground_manifold_harmonics(sd, z1, z2);
      for (double beta : {0.0, 1.0}) {
        const auto th = thermal_harmonics(sd, beta);
        const auto rho = oracle::gibbs_state(h, beta, sd.ground_energy());
        for (double t : times) {
          EXPECT_LT(std::abs(evaluate(th, t) - oracle::direct_correlation(h, rho, mz, mz, t)), 1e-8);
        }
      }
      for (double t : times) {
        EXPECT_LT(std::abs(evaluate(hz, t) - oracle::direct_correlation(h, rho0, mz, mz, t)), 1e-8);
        const auto want = oracle::direct_correlation(h, rho0, oracle::kron_dense(z1), oracle::kron_dense(z2), t);
        EXPECT_LT(std::abs(evaluate(hzz, t) - want), 1e-8);
      }
    }
    // Degenerate ground manifold: the Ising ring.
    const auto ring = build_ising_ring(n) + complex(0.3) * build_nn_perturbation(n, Axis::X);
    const auto sd = diagonalize(ring);
    const int m = gs_degeneracy(sd);
    const auto hm = ground_manifold_harmonics(sd, mz_operator(n), mz_operator(n));
    const auto rho = ground_density(sd, m);
    for (double t : times) {
      EXPECT_LT(std::abs(evaluate(hm, t) - oracle::direct_correlation(oracle::kron_dense(ring), rho, mz, mz, t)),
                1e-8);
    }
  }
}

TEST(HarmonicsTest, MergeAddsCloseFrequencies) {
  const Harmonics h{{1.0, 0.5}, {1.0 + 1e-12, 0.25}, {-2.0, complex(0.0, 1.0)}};
  const auto m = merge_harmonics(h);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].omega, -2.0);
  EXPECT_NEAR(m[1].weight.real(), 0.75, 1e-15);
  EXPECT_EQ(count_significant_harmonics(h), 2);
  EXPECT_EQ(count_significant_harmonics({{0.0, 1.0}, {1.0, 1e-5}}), 1);
  EXPECT_NEAR(dominant_harmonic(h).omega, -2.0, 0.0);
  EXPECT_THROW(dominant_harmonic({}), std::invalid_argument);
}

TEST(HarmonicsTest, BohrCountExamples) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(count_bohr_harmonics(diagonalize(build_xy_string(n, 1.0)), kInfiniteBeta), 1) << n;
  }
  EXPECT_EQ(count_bohr_harmonics(diagonalize(Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(16, 16))), 1.0), 1);
  EXPECT_GT(count_bohr_harmonics(diagonalize(build_hj(8, 1.0)), 1.0), 1);
}

}  // namespace
}  // namespace tcrystal
