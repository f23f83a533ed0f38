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

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tcrystal/hilbert.hpp"
#include "tcrystal/pauli.hpp"

namespace tcrystal {

/// Orthonormal states with assigned energies; everything orthogonal to them
/// sits at energy zero.
struct ProjectorSpec {
  int n = 1;
  std::vector<StateVector> states;
  std::vector<double> energies;
};

/// Tolerance on pairwise overlaps in a ProjectorSpec.
inline constexpr double kOrthogonalityTolerance = 1e-10;

/// sum_j e_j |E_j><E_j|. Throws std::invalid_argument naming the largest
/// overlap when the states are not orthonormal.
Eigen::MatrixXcd build_projector_hamiltonian(const ProjectorSpec& spec);

/// -J / (n(n-1)) * sum_{i<j} of the all-X string with Y on sites i and j.
OperatorSum build_xy_string(int n, double J);

/// -sum_j Z_j Z_{j+1} on a periodic ring.
OperatorSum build_ising_ring(int n);

/// X_1...X_m - X_{m+1}...X_n with m = floor(n/2).
OperatorSum build_half_strings(int n);

/// Ising ring plus J times the half-chain strings.
OperatorSum build_hj(int n, double J);

/// -(1/n) sum_j Z_j Z_{j+1} + (-1)^{(n-1)/2} (pi/2) X_1...X_n, odd n only.
OperatorSum build_dtc_effective(int n);

using FieldVector = std::array<double, 3>;

/// sum_j (hx_j X_j + hy_j Y_j + hz_j Z_j); zero components are dropped.
OperatorSum build_field_perturbation(int n, std::span<const FieldVector> h);

/// Independent fields with components uniform in [-amplitude, amplitude].
std::vector<FieldVector> random_fields(int n, std::mt19937_64& rng, double amplitude = 1.0);

enum class Axis { X, Y };

/// sum_j P_j P_{j+1} on the ring, P = X or Y.
OperatorSum build_nn_perturbation(int n, Axis axis);

}  // namespace tcrystal
