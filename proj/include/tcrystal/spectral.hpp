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

#include <vector>

#include <Eigen/Dense>

#include "tcrystal/hilbert.hpp"
#include "tcrystal/pauli.hpp"

namespace tcrystal {

/// Hermiticity tolerance accepted by diagonalize.
inline constexpr double kHermitianTolerance = 1e-10;
/// Ground-state degeneracy tolerance, relative to max(1, spectral span).
inline constexpr double kDefaultDegeneracyTol = 1e-8;

/// A cluster of numerically equal eigenvalues.
struct EnergyLevel {
  double energy;      ///< mean of the clustered eigenvalues
  Eigen::Index first; ///< index of the first eigenvalue in the cluster
  Eigen::Index count;
};

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.
///
/// Real symmetric inputs keep real eigenvectors; this halves memory and lets
/// the eigenbasis transforms run in real arithmetic.
class SpectralDecomposition {
 public:
  SpectralDecomposition(Eigen::VectorXd eigenvalues, Eigen::MatrixXd vectors);
  SpectralDecomposition(Eigen::VectorXd eigenvalues, Eigen::MatrixXcd vectors);

  int n() const { return n_; }
  Eigen::Index dim() const { return values_.size(); }
  bool is_real() const { return real_vectors_.size() > 0; }
  const Eigen::VectorXd& eigenvalues() const { return values_; }
  double ground_energy() const { return values_[0]; }
  double span() const { return values_[dim() - 1] - values_[0]; }

  Eigen::VectorXcd eigenvector(Eigen::Index k) const;
  /// All eigenvectors as complex columns (a copy for real decompositions).
  Eigen::MatrixXcd eigenvectors() const;

  /// Eigenbasis coefficients V^dagger v.
  Eigen::VectorXcd coefficients(const Eigen::VectorXcd& v) const;
  /// Back to the computational basis: V c.
  Eigen::VectorXcd synthesize(const Eigen::VectorXcd& c) const;

  /// |<E_j| D |E_k>|^2 for a diagonal operator D = diag(d).
  Eigen::MatrixXd diagonal_transition_strengths(const Eigen::VectorXd& d) const;

  /// V diag(f(e)) V^dagger.
  template <typename F>
  Eigen::MatrixXcd function_of(F&& f) const;

  /// Eigenvalues clustered with the given absolute tolerance (chained).
  std::vector<EnergyLevel> levels(double abs_tol) const;

  /// Tolerance used to cluster degenerate eigenvalues for Lehmann sums.
  double level_tolerance() const;

 private:
  int n_;
  Eigen::VectorXd values_;
  Eigen::MatrixXd real_vectors_;
  Eigen::MatrixXcd complex_vectors_;
};

/// Dense Hermitian eigensolve. Purely real input takes the real symmetric
/// path. Throws std::invalid_argument if H is not Hermitian to
/// kHermitianTolerance or its size is not 2^n.
SpectralDecomposition diagonalize(const Eigen::MatrixXcd& h);
SpectralDecomposition diagonalize(const Eigen::MatrixXd& h);
/// Builds the dense matrix (real when possible) and diagonalizes it.
SpectralDecomposition diagonalize(const OperatorSum& h);

/// Number of eigenvalues within tol * max(1, span) of the minimum.
int gs_degeneracy(const SpectralDecomposition& sd, double tol = kDefaultDegeneracyTol);

/// Lowest eigenvector, requiring a nondegenerate ground state.
StateVector ground_state(const SpectralDecomposition& sd, double tol = kDefaultDegeneracyTol);

/// Gap from the ground level to the next distinct level (0 if none).
double spectral_gap(const SpectralDecomposition& sd, double tol = kDefaultDegeneracyTol);

template <typename F>
Eigen::MatrixXcd SpectralDecomposition::function_of(F&& f) const {
  Eigen::VectorXcd fe(dim());
  for (Eigen::Index k = 0; k < dim(); ++k) fe[k] = f(values_[k]);
  if (is_real()) {
    const Eigen::MatrixXcd v = real_vectors_.cast<complex>();
    return v * fe.asDiagonal() * v.transpose();
  }
  return complex_vectors_ * fe.asDiagonal() * complex_vectors_.adjoint();
}

}  // namespace tcrystal
