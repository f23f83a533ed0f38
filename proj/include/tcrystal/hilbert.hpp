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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tcrystal/pauli.hpp"

namespace tcrystal {

/// Normalization tolerance enforced when a StateVector is constructed.
inline constexpr double kNormTolerance = 1e-10;

/// A normalized n-qubit state over the computational basis.
///
/// Bit j of a basis index is 0 for spin up (sigma_z = +1) at site j, so
/// popcount(index) is the number of down spins.
class StateVector {
 public:
  /// Takes amplitudes that are already unit norm (within kNormTolerance).
  StateVector(int n, Eigen::VectorXcd amps);
  /// Rescales to unit norm; throws on a zero vector.
  static StateVector normalized(int n, Eigen::VectorXcd amps);
  static StateVector basis(int n, std::uint64_t index);
  static StateVector all_up(int n) { return basis(n, 0); }

  int n() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  complex operator[](std::uint64_t b) const { return amps_[static_cast<Eigen::Index>(b)]; }

 private:
  int n_;
  Eigen::VectorXcd amps_;
};

enum class GhzSign { Plus, Minus };

/// (|up...up> + |down...down>)/sqrt2 for Plus, with a minus sign for Minus.
StateVector make_ghz(GhzSign sign, int n);

/// M_z = sum_i sigma_z^(i) / n applied to a raw amplitude vector.
Eigen::VectorXcd apply_mz(int n, const Eigen::VectorXcd& amps);
inline Eigen::VectorXcd apply_mz(const StateVector& s) { return apply_mz(s.n(), s.amplitudes()); }

/// Diagonal of M_z, (n - 2 popcount(b)) / n.
Eigen::VectorXd mz_diagonal(int n);

/// M_z as a Pauli sum.
OperatorSum mz_operator(int n);

/// <s|M_z|s>.
double mz_expectation(const StateVector& s);

/// <s|M_z^2|s>.
double order_parameter(const StateVector& s);

struct MagnetizationLevel {
  int k;                       ///< number of down spins
  double m;                    ///< (n - 2k) / n
  std::uint64_t degeneracy;    ///< binomial(n, k)
};

struct MagnetizationTable {
  int n;
  std::vector<MagnetizationLevel> levels;  ///< k = 0..n
};

MagnetizationTable mz_eigendata(int n);

/// |amp(b)| == |amp(b ^ all-ones)| within tol for every b.
bool check_flip_symmetry(const StateVector& s, double tol = 1e-10);

complex inner(const StateVector& a, const StateVector& b);
complex expectation(const OperatorSum& op, const StateVector& s);

/// `index,re,im` rows in ascending index order, with a header line.
std::string to_csv(const StateVector& s);
StateVector state_from_csv(std::string_view text);

}  // namespace tcrystal
