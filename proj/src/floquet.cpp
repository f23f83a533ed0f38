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

#include "tcrystal/floquet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "tcrystal/models.hpp"
#include "tcrystal/spectral.hpp"

namespace tcrystal {
namespace {

complex minus_i_power(int n) { return QuarterPhase(-n).value(); }

// Bond energy sum_j phi_j s_j s_{j+1} with s = +1 for an up spin.
double bond_phase(const DtcProtocol& p, std::uint64_t b) {
  double total = 0.0;
  for (int j = 0; j < p.n; ++j) {
    const auto a = (b >> j) & 1u;
    const auto c = (b >> ((j + 1) % p.n)) & 1u;
    total += a == c ? p.phases[j] : -p.phases[j];
  }
  return total;
}

struct NormalSchur {
  Eigen::MatrixXcd q;
  Eigen::VectorXd phases;  // principal arguments in (-pi, pi]
};

NormalSchur unitary_schur(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitary must be square");
  if (const double d = unitarity_defect(u); d > kUnitaryTolerance) {
    throw std::invalid_argument(fmt::format("matrix is not unitary (max |U^dagger U - I| = {:.3e})", d));
  }
  // The Schur form of a normal matrix is diagonal; its unitary factor
  // diagonalizes U even inside degenerate eigenspaces.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  if (schur.info() != Eigen::Success) throw std::runtime_error("complex Schur decomposition failed");
  NormalSchur out{schur.matrixU(), Eigen::VectorXd(u.rows())};
  for (Eigen::Index k = 0; k < u.rows(); ++k) out.phases[k] = std::arg(schur.matrixT()(k, k));
  return out;
}

Eigen::MatrixXcd from_eigenbasis(const Eigen::MatrixXcd& q, const Eigen::VectorXcd& d) {
  return q * d.asDiagonal() * q.adjoint();
}

}  // namespace

DtcProtocol DtcProtocol::uniform(int n, double phi) {
  return DtcProtocol{n, std::vector<double>(static_cast<std::size_t>(n), phi)};
}

void DtcProtocol::validate() const {
  require_dense_capacity(n);
  if (phases.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(fmt::format("protocol has {} bond phases for {} sites", phases.size(), n));
  }
  for (std::size_t j = 0; j < phases.size(); ++j) {
    if (!std::isfinite(phases[j])) throw std::invalid_argument(fmt::format("bond phase {} is not finite", j));
  }
}

Eigen::MatrixXcd u_x(int n) {
  require_dense_capacity(n);
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  const complex phase = minus_i_power(n);
  for (Eigen::Index b = 0; b < dim; ++b) u(b ^ (dim - 1), b) = phase;
  return u;
}

Eigen::MatrixXcd u_ising(const DtcProtocol& p) {
  p.validate();
  const auto dim = Eigen::Index{1} << p.n;
  Eigen::VectorXcd diag(dim);
  for (Eigen::Index b = 0; b < dim; ++b) diag[b] = std::polar(1.0, -bond_phase(p, static_cast<std::uint64_t>(b)));
  return diag.asDiagonal();
}

Eigen::MatrixXcd u_step(const DtcProtocol& p) { return u_ising(p) * u_x(p.n); }

std::vector<StateVector> stroboscopic_states(const DtcProtocol& p, const StateVector& s0, int steps) {
  p.validate();
  if (s0.n() != p.n) throw std::invalid_argument("initial state qubit count does not match protocol");
  if (steps < 1) throw std::invalid_argument(fmt::format("steps must be >= 1, got {}", steps));
  const auto dim = s0.dim();
  Eigen::VectorXcd ising(dim);
  for (Eigen::Index b = 0; b < dim; ++b) ising[b] = std::polar(1.0, -bond_phase(p, static_cast<std::uint64_t>(b)));
  const complex flip_phase = minus_i_power(p.n);

  std::vector<StateVector> out;
  out.reserve(static_cast<std::size_t>(steps));
  Eigen::VectorXcd v = s0.amplitudes();
  Eigen::VectorXcd next(dim);
  for (int s = 0; s < steps; ++s) {
    for (Eigen::Index b = 0; b < dim; ++b) next[b ^ (dim - 1)] = flip_phase * v[b];
    v = ising.cwiseProduct(next);
    out.push_back(StateVector::normalized(p.n, v));
  }
  return out;
}

std::vector<double> stroboscopic_run(const DtcProtocol& p, const StateVector& s0, int steps) {
  std::vector<double> mz;
  for (const auto& s : stroboscopic_states(p, s0, steps)) mz.push_back(mz_expectation(s));
  return mz;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

UnitaryLog unitary_log(const Eigen::MatrixXcd& u) {
  const auto s = unitary_schur(u);
  UnitaryLog out;
  Eigen::MatrixXcd h = from_eigenbasis(s.q, (-s.phases).cast<complex>());
  out.hamiltonian = (h + h.adjoint()) / 2.0;
  out.eigenphases = s.phases;
  std::sort(out.eigenphases.begin(), out.eigenphases.end());
  for (const double theta : s.phases) {
    if (std::numbers::pi - std::abs(theta) < kBranchTolerance) out.branch_ambiguous = true;
  }
  return out;
}

Eigen::MatrixXcd principal_log(const Eigen::MatrixXcd& u) {
  const auto s = unitary_schur(u);
  return from_eigenbasis(s.q, s.phases.cast<complex>() * complex(0.0, 1.0));
}

Eigen::MatrixXcd replica_log(const Eigen::MatrixXcd& u, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument(fmt::format("rho must lie in (0, 1], got {}", rho));
  const auto s = unitary_schur(u);
  Eigen::VectorXcd d(s.phases.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = (std::polar(1.0, rho * s.phases[k]) - 1.0) / rho;
  return from_eigenbasis(s.q, d);
}

EffectiveComparison compare_effective(int n) {
  if (n < 3 || n > 11 || n % 2 == 0) {
    throw std::invalid_argument(fmt::format("effective-Hamiltonian comparison needs odd n in [3, 11], got {}", n));
  }
  const auto h_eff = build_dtc_effective(n);
  const auto sd = diagonalize(h_eff);
  const Eigen::MatrixXcd evolved = sd.function_of([](double e) { return std::polar(1.0, -e); });
  const Eigen::MatrixXcd step = u_step(DtcProtocol::uniform(n, -1.0 / n));

  EffectiveComparison out;
  out.n = n;
  out.max_deviation = (step - evolved).cwiseAbs().maxCoeff();
  out.energy_ghz_plus = expectation(h_eff, make_ghz(GhzSign::Plus, n)).real();
  out.energy_ghz_minus = expectation(h_eff, make_ghz(GhzSign::Minus, n)).real();
  out.ghz_splitting = out.energy_ghz_plus - out.energy_ghz_minus;
  const double tol = 1e-9 * std::max(1.0, sd.span());
  if (gs_degeneracy(sd) == 1 && std::abs(out.energy_ghz_plus - sd.ground_energy()) < tol) {
    out.ground_state = "ghz+";
  } else if (gs_degeneracy(sd) == 1 && std::abs(out.energy_ghz_minus - sd.ground_energy()) < tol) {
    out.ground_state = "ghz-";
  } else {
    out.ground_state = "other";
  }

  if (out.max_deviation > kEffectiveExactnessTol) {
    Eigen::VectorXd step_phases = unitary_log(step).eigenphases;
    Eigen::VectorXd eff_phases(sd.dim());
    for (Eigen::Index k = 0; k < sd.dim(); ++k) eff_phases[k] = std::arg(std::polar(1.0, -sd.eigenvalues()[k]));
    std::sort(eff_phases.begin(), eff_phases.end());
    out.eigenphase_deviation = (step_phases - eff_phases).cwiseAbs().maxCoeff();
    out.eigenphases_compared = true;
  }
  return out;
}

}  // namespace tcrystal
