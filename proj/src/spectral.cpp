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

#include "tcrystal/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>
#include <lapacke.h>

namespace tcrystal {
namespace {

int qubits_for(Eigen::Index dim) {
  const auto d = static_cast<std::uint64_t>(dim);
  if (d < 2 || !std::has_single_bit(d)) {
    throw std::invalid_argument(fmt::format("matrix dimension {} is not 2^n", dim));
  }
  const int n = std::countr_zero(d);
  require_dense_capacity(n);
  return n;
}

template <typename Matrix>
void require_hermitian(const Matrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("diagonalize: matrix is not square");
  const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTolerance) {
    throw std::invalid_argument(fmt::format("diagonalize: matrix is not Hermitian (max |H - H^dagger| = {:.3e})", dev));
  }
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(Eigen::VectorXd eigenvalues, Eigen::MatrixXd vectors)
    : n_(qubits_for(eigenvalues.size())), values_(std::move(eigenvalues)), real_vectors_(std::move(vectors)) {}

SpectralDecomposition::SpectralDecomposition(Eigen::VectorXd eigenvalues, Eigen::MatrixXcd vectors)
    : n_(qubits_for(eigenvalues.size())), values_(std::move(eigenvalues)), complex_vectors_(std::move(vectors)) {}

Eigen::VectorXcd SpectralDecomposition::eigenvector(Eigen::Index k) const {
  if (is_real()) return real_vectors_.col(k).cast<complex>();
  return complex_vectors_.col(k);
}

Eigen::MatrixXcd SpectralDecomposition::eigenvectors() const {
  if (is_real()) return real_vectors_.cast<complex>();
  return complex_vectors_;
}

Eigen::VectorXcd SpectralDecomposition::coefficients(const Eigen::VectorXcd& v) const {
  if (is_real()) {
    const Eigen::VectorXd re = real_vectors_.transpose() * v.real();
    const Eigen::VectorXd im = real_vectors_.transpose() * v.imag();
    Eigen::VectorXcd c(dim());
    c.real() = re;
    c.imag() = im;
    return c;
  }
  return complex_vectors_.adjoint() * v;
}

Eigen::VectorXcd SpectralDecomposition::synthesize(const Eigen::VectorXcd& c) const {
  if (is_real()) {
    Eigen::VectorXcd v(dim());
    v.real() = real_vectors_ * c.real();
    v.imag() = real_vectors_ * c.imag();
    return v;
  }
  return complex_vectors_ * c;
}

Eigen::MatrixXd SpectralDecomposition::diagonal_transition_strengths(const Eigen::VectorXd& d) const {
  if (is_real()) {
    const Eigen::MatrixXd dv = d.asDiagonal() * real_vectors_;
    Eigen::MatrixXd m = real_vectors_.transpose() * dv;
    return m.cwiseAbs2();
  }
  const Eigen::MatrixXcd dv = d.cast<complex>().asDiagonal() * complex_vectors_;
  const Eigen::MatrixXcd m = complex_vectors_.adjoint() * dv;
  return m.cwiseAbs2();
}

std::vector<EnergyLevel> SpectralDecomposition::levels(double abs_tol) const {
  std::vector<EnergyLevel> out;
  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= dim(); ++k) {
    if (k == dim() || values_[k] - values_[k - 1] > abs_tol) {
      const Eigen::Index count = k - start;
      out.push_back({values_.segment(start, count).mean(), start, count});
      start = k;
    }
  }
  return out;
}

double SpectralDecomposition::level_tolerance() const { return 1e-10 * std::max(1.0, span()); }

SpectralDecomposition diagonalize(const Eigen::MatrixXd& h) {
  qubits_for(h.rows());
  require_hermitian(h);
  const auto dim = static_cast<lapack_int>(h.rows());
  Eigen::MatrixXd v = h;
  Eigen::VectorXd w(dim);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', dim, v.data(), dim, w.data());
  if (info != 0) throw std::runtime_error(fmt::format("dsyevd failed with info = {}", info));
  return SpectralDecomposition(std::move(w), std::move(v));
}

SpectralDecomposition diagonalize(const Eigen::MatrixXcd& h) {
  qubits_for(h.rows());
  require_hermitian(h);
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) return diagonalize(Eigen::MatrixXd(h.real()));
  const auto dim = static_cast<lapack_int>(h.rows());
  Eigen::MatrixXcd v = h;
  Eigen::VectorXd w(dim);
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', dim,
                                         reinterpret_cast<lapack_complex_double*>(v.data()), dim, w.data());
  if (info != 0) throw std::runtime_error(fmt::format("zheevd failed with info = {}", info));
  return SpectralDecomposition(std::move(w), std::move(v));
}

SpectralDecomposition diagonalize(const OperatorSum& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("diagonalize: operator sum has complex coefficients");
  if (is_real(h)) return diagonalize(to_dense_real(h));
  return diagonalize(to_dense(h));
}

int gs_degeneracy(const SpectralDecomposition& sd, double tol) {
  const double cut = sd.ground_energy() + tol * std::max(1.0, sd.span());
  int m = 0;
  while (m < sd.dim() && sd.eigenvalues()[m] <= cut) ++m;
  return m;
}

StateVector ground_state(const SpectralDecomposition& sd, double tol) {
  const int m = gs_degeneracy(sd, tol);
  if (m != 1) {
    throw std::runtime_error(fmt::format("ground state is {}-fold degenerate (gs_degeneracy)", m));
  }
  return StateVector::normalized(sd.n(), sd.eigenvector(0));
}

double spectral_gap(const SpectralDecomposition& sd, double tol) {
  const int m = gs_degeneracy(sd, tol);
  return m < sd.dim() ? sd.eigenvalues()[m] - sd.ground_energy() : 0.0;
}

}  // namespace tcrystal
