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

#pragma once

// Independent reference computations used only by tests. Nothing here calls
// the bitmask Pauli action or the eigenbasis correlation code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "tcrystal/pauli.hpp"

namespace tcrystal::oracle {

inline Eigen::Matrix2cd pauli_2x2(char p) {
  using c = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, c(0, -1), c(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m.setIdentity();
  }
  return m;
}

/// Kronecker product with site 1 (bit 0) as the least significant factor.
inline Eigen::MatrixXcd kron_word(const std::string& word) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char p : word) {
    const Eigen::Matrix2cd s = pauli_2x2(p);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = s(r, c) * m;
    }
    m = next;
  }
  return m;
}

inline Eigen::MatrixXcd kron_dense(const OperatorSum& s) {
  const auto dim = Eigen::Index{1} << s.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : s.terms()) m += t.coeff * kron_word(t.string.word());
  return m;
}

inline double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// Tr(M_z^2) / 2^n by summing over magnetization sectors.
inline double binomial_variance(int n) {
  double s = 0.0;
  for (int k = 0; k <= n; ++k) s += binomial(n, k) * (n - 2.0 * k) * (n - 2.0 * k);
  return s / (static_cast<double>(n) * n * std::pow(2.0, n));
}

inline Eigen::MatrixXcd mz_matrix(int n) {
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    int down = 0;
    for (int j = 0; j < n; ++j) down += (b >> j) & 1;
    m(b, b) = (n - 2.0 * down) / n;
  }
  return m;
}

inline Eigen::MatrixXcd evolution(const Eigen::MatrixXcd& h, double t) {
  const Eigen::MatrixXcd x = std::complex<double>(0.0, -t) * h;
  return x.exp();
}

/// Tr(rho U^dagger A U B) with U = exp(-iHt).
inline std::complex<double> direct_correlation(const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& rho,
                                               const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double t) {
  const Eigen::MatrixXcd u = evolution(h, t);
  return (rho * u.adjoint() * a * u * b).trace();
}

/// exp(-beta (H - shift)) / Z. The shift only guards against overflow.
inline Eigen::MatrixXcd gibbs_state(const Eigen::MatrixXcd& h, double beta, double shift) {
  const auto dim = h.rows();
  const Eigen::MatrixXcd x = -beta * (h - shift * Eigen::MatrixXcd::Identity(dim, dim));
  Eigen::MatrixXcd rho = x.exp();
  return rho / rho.trace();
}

/// Lowest eigenpair of the 2x2 block of H(J) spanned by G- and (a - b)/sqrt2,
/// a = |down^m up^(n-m)>, b = |up^m down^(n-m)>, m = floor(n/2).
struct TwoLevelBlock {
  double energy;
  double cos_theta;  ///< amplitude on G-
  double sin_theta;  ///< amplitude on (a - b)/sqrt2
  double order_parameter;
};

inline TwoLevelBlock hj_block(int n, double J) {
  // <G-|H|G-> = -n; (a - b)/sqrt2 carries two broken bonds: -n + 4;
  // H1 G- = 2 (a - b)/sqrt2.
  Eigen::Matrix2d blk;
  blk << -n, 2 * J, 2 * J, -n + 4;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(blk);
  const double c = es.eigenvectors()(0, 0), s = es.eigenvectors()(1, 0);
  const int m = n / 2;
  const double ma = (n - 2.0 * m) / n;  // magnetization of a; b has -ma
  return {es.eigenvalues()[0], c, s, c * c + s * s * ma * ma};
}

}  // namespace tcrystal::oracle
