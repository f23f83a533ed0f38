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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tcrystal/hilbert.hpp"

namespace tcrystal {

/// Unitarity tolerance on inputs to the logarithm routines.
inline constexpr double kUnitaryTolerance = 1e-10;
/// Eigenphases this close to +-pi are reported as branch-ambiguous.
inline constexpr double kBranchTolerance = 1e-9;

/// Spin-flip plus Ising-ring drive: one phase phi_j = J_{j,j+1} tau per bond,
/// bond j joining sites j and j+1 (mod n).
struct DtcProtocol {
  int n;
  std::vector<double> phases;

  /// All bonds at phi.
  static DtcProtocol uniform(int n, double phi);
  void validate() const;
};

/// prod_j (-i sigma_x^(j)).
Eigen::MatrixXcd u_x(int n);

/// exp(-i sum_j phi_j Z_j Z_{j+1}); diagonal.
Eigen::MatrixXcd u_ising(const DtcProtocol& p);

/// u_ising * u_x: the flip acts first.
Eigen::MatrixXcd u_step(const DtcProtocol& p);

/// States after each of `steps` drive periods, not including s0.
std::vector<StateVector> stroboscopic_states(const DtcProtocol& p, const StateVector& s0, int steps);

/// <M_z> after each drive period.
std::vector<double> stroboscopic_run(const DtcProtocol& p, const StateVector& s0, int steps);

/// Max |U^dagger U - I|.
double unitarity_defect(const Eigen::MatrixXcd& u);

struct UnitaryLog {
  Eigen::MatrixXcd hamiltonian;      ///< H = i log U, eigenphases in (-pi, pi]
  Eigen::VectorXd eigenphases;       ///< arg of the eigenvalues of U, ascending
  bool branch_ambiguous = false;     ///< some eigenphase within kBranchTolerance of +-pi
};

/// Principal-branch effective Hamiltonian of a unitary, exp(-iH) = U.
UnitaryLog unitary_log(const Eigen::MatrixXcd& u);

/// (U^rho - I) / rho with U^rho = exp(rho log U) on the principal branch.
Eigen::MatrixXcd replica_log(const Eigen::MatrixXcd& u, double rho);

/// Principal matrix logarithm log U (anti-Hermitian).
Eigen::MatrixXcd principal_log(const Eigen::MatrixXcd& u);

/// Step unitary at phi_j = -1/n against exp(-i H_eff) for the closed-form
/// effective Hamiltonian.
struct EffectiveComparison {
  int n = 0;
  double max_deviation = 0.0;        ///< max entrywise |u_step - exp(-i H_eff)|
  std::string ground_state;          ///< "ghz+" or "ghz-"
  double energy_ghz_plus = 0.0;
  double energy_ghz_minus = 0.0;
  double ghz_splitting = 0.0;        ///< E(G+) - E(G-)
  /// Largest mismatch between the sorted eigenphases of the two unitaries;
  /// only filled in when max_deviation exceeds the exactness threshold.
  double eigenphase_deviation = 0.0;
  bool eigenphases_compared = false;
};

inline constexpr double kEffectiveExactnessTol = 1e-9;

EffectiveComparison compare_effective(int n);

}  // namespace tcrystal
