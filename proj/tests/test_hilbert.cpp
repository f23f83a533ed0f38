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
#include "tcrystal/hilbert.hpp"
#include "tcrystal/models.hpp"
#include "tcrystal/spectral.hpp"

namespace tcrystal {
namespace {

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& a : v) a = complex(g(rng), g(rng));
  return StateVector::normalized(n, v);
}

// Random state with |a(b)| = |a(~b)|: relative phases between partners are free.
StateVector random_flip_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> ph(0.0, 2 * M_PI);
  const std::uint64_t dim = std::uint64_t{1} << n, all = dim - 1;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (b > (b ^ all)) continue;
    const double r = std::abs(g(rng));
    v[static_cast<Eigen::Index>(b)] = std::polar(r, ph(rng));
    v[static_cast<Eigen::Index>(b ^ all)] = std::polar(r, ph(rng));
  }
  return StateVector::normalized(n, v);
}

TEST(StateVectorTest, RejectsUnnormalized) {
  EXPECT_THROW(StateVector(1, Eigen::VectorXcd::Ones(2)), std::invalid_argument);
  EXPECT_THROW(StateVector(2, Eigen::VectorXcd::Unit(2, 0)), std::invalid_argument);
  EXPECT_THROW(StateVector::normalized(2, Eigen::VectorXcd::Zero(4)), std::invalid_argument);
  EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
}

TEST(StateVectorTest, GhzPlusAtTwo) {
  const auto g = make_ghz(GhzSign::Plus, 2);
  EXPECT_NEAR(g[0].real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(g[3].real(), M_SQRT1_2, 1e-15);
  EXPECT_EQ(g[1], complex{});
  EXPECT_EQ(g[2], complex{});
}

TEST(StateVectorTest, MzMapsGhzMinusToPlus) {
  for (int n = 2; n <= 10; ++n) {
    const Eigen::VectorXcd v = apply_mz(make_ghz(GhzSign::Minus, n));
    EXPECT_LT((v - make_ghz(GhzSign::Plus, n).amplitudes()).norm(), 1e-14) << n;
  }
}

TEST(MagnetizationTest, AllUpIsEigenstate) {
  const auto up = StateVector::all_up(5);
  EXPECT_LT((apply_mz(up) - up.amplitudes()).norm(), 1e-15);
  EXPECT_DOUBLE_EQ(mz_expectation(up), 1.0);
}

TEST(MagnetizationTest, BalancedIndicesAnnihilated) {
  const int n = 6;
  for (std::uint64_t b = 0; b < 64; ++b) {
    if (std::popcount(b) != 3) continue;
    EXPECT_EQ(apply_mz(StateVector::basis(n, b)).norm(), 0.0);
  }
}

TEST(MagnetizationTest, DenseOperatorMatchesOracle) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_LT((to_dense(mz_operator(n)) - oracle::mz_matrix(n)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((mz_diagonal(n).cast<complex>() - oracle::mz_matrix(n).diagonal()).norm(), 1e-15);
  }
}

TEST(OrderParameterTest, GhzMinusIsOne) {
  for (int n = 1; n <= 10; ++n) EXPECT_NEAR(order_parameter(make_ghz(GhzSign::Minus, n)), 1.0, 1e-14);
}

TEST(OrderParameterTest, UniformSuperpositionIsBinomialVariance) {
  for (int n = 1; n <= 12; ++n) {
    const auto u = StateVector::normalized(n, Eigen::VectorXcd::Ones(Eigen::Index{1} << n));
    EXPECT_NEAR(order_parameter(u), oracle::binomial_variance(n), 1e-13);
    EXPECT_NEAR(order_parameter(u), 1.0 / n, 1e-13);
  }
}

TEST(OrderParameterTest, HjGroundStateAtEvenN) {
  const double want = std::pow(std::sin(3 * M_PI / 8), 2);
  for (int n : {6, 8}) {
    const auto gs = ground_state(diagonalize(build_hj(n, 1.0)));
    EXPECT_NEAR(order_parameter(gs), want, 1e-10) << n;
    EXPECT_TRUE(check_flip_symmetry(gs, 1e-9));
  }
}

TEST(OrderParameterProperty, EqualsNormOfMzImage) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 8; ++n) {
    const auto s = random_state(n, rng);
    EXPECT_NEAR(order_parameter(s), apply_mz(s).squaredNorm(), 1e-13);
    const Eigen::MatrixXcd mz = oracle::mz_matrix(n);
    const complex direct = s.amplitudes().dot(mz * mz * s.amplitudes());
    EXPECT_NEAR(order_parameter(s), direct.real(), 1e-13);
  }
}

TEST(EigendataTest, SmallCases) {
  const auto t2 = mz_eigendata(2);
  ASSERT_EQ(t2.levels.size(), 3u);
  EXPECT_EQ(t2.levels[0].m, 1.0);
  EXPECT_EQ(t2.levels[1].m, 0.0);
  EXPECT_EQ(t2.levels[2].m, -1.0);
  EXPECT_EQ(t2.levels[0].degeneracy, 1u);
  EXPECT_EQ(t2.levels[1].degeneracy, 2u);
  EXPECT_EQ(t2.levels[2].degeneracy, 1u);

  const auto t1 = mz_eigendata(1);
  ASSERT_EQ(t1.levels.size(), 2u);
  EXPECT_EQ(t1.levels[0].m, 1.0);
  EXPECT_EQ(t1.levels[1].m, -1.0);

  EXPECT_EQ(mz_eigendata(10).levels[5].degeneracy, 252u);
}

TEST(EigendataProperty, DegeneraciesSumToDimension) {
  for (int n = 1; n <= 14; ++n) {
    std::uint64_t total = 0;
    for (const auto& l : mz_eigendata(n).levels) {
      total += l.degeneracy;
      EXPECT_DOUBLE_EQ(static_cast<double>(l.degeneracy), oracle::binomial(n, l.k));
    }
    EXPECT_EQ(total, std::uint64_t{1} << n);
  }
}

TEST(FlipSymmetryTest, Examples) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(check_flip_symmetry(make_ghz(GhzSign::Plus, n)));
    EXPECT_TRUE(check_flip_symmetry(make_ghz(GhzSign::Minus, n)));
    EXPECT_FALSE(check_flip_symmetry(StateVector::all_up(n)));
  }
  for (double J : {0.5, 1.0, 2.0}) {
    EXPECT_TRUE(check_flip_symmetry(ground_state(diagonalize(build_hj(7, J))), 1e-9)) << J;
  }
}

// Property: flip symmetry forces <M_z> = 0.
TEST(FlipSymmetryProperty, ImpliesZeroMagnetization) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 9; ++n) {
    const auto s = random_flip_symmetric(n, rng);
    ASSERT_TRUE(check_flip_symmetry(s));
    EXPECT_NEAR(mz_expectation(s), 0.0, 1e-14) << n;
  }
}

TEST(InnerTest, Examples) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(inner(make_ghz(GhzSign::Plus, n), make_ghz(GhzSign::Minus, n)), complex{});
    const auto s = random_state(n, rng);
    EXPECT_NEAR(std::abs(inner(s, s) - 1.0), 0.0, 1e-13);
  }
  EXPECT_THROW(inner(StateVector::all_up(2), StateVector::all_up(3)), std::invalid_argument);
}

TEST(ExpectationTest, EvenZStringsOnGhz) {
  for (int n = 2; n <= 8; ++n) {
    for (std::uint32_t z = 0; z < (1u << n); ++z) {
      if (std::popcount(z) % 2 != 0) continue;
      OperatorSum s(n);
      s.add(1.0, PauliString(n, 0, z));
      EXPECT_NEAR(std::abs(expectation(s, make_ghz(GhzSign::Plus, n)) - 1.0), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(expectation(s, make_ghz(GhzSign::Minus, n)) - 1.0), 0.0, 1e-14);
    }
  }
}

// Property: M_z commutes with every even-length Z string (both are diagonal).
TEST(ExpectationProperty, MzCommutesWithEvenZStrings) {
  const int n = 5;
  const Eigen::MatrixXcd mz = to_dense(mz_operator(n));
  for (std::uint32_t z = 0; z < (1u << n); ++z) {
    if (std::popcount(z) % 2 != 0) continue;
    OperatorSum s(n);
    s.add(1.0, PauliString(n, 0, z));
    const Eigen::MatrixXcd m = to_dense(s);
    EXPECT_EQ((mz * m - m * mz).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(CsvTest, RoundTrip) {
  std::mt19937_64 rng(1);
  const auto s = random_state(4, rng);
  const auto back = state_from_csv(to_csv(s));
  EXPECT_EQ(back.n(), 4);
  EXPECT_EQ(back.amplitudes(), s.amplitudes());
  EXPECT_EQ(to_csv(s).substr(0, 12), "index,re,im\n");
  EXPECT_THROW(state_from_csv("index,re,im\n0,1,0\n1,0,0\n2,0,0\n"), std::invalid_argument);
}

}  // namespace
}  // namespace tcrystal
