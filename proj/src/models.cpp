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

#include "tcrystal/models.hpp"

#include <numbers>
#include <random>

#include <fmt/format.h>

namespace tcrystal {
namespace {

void require_min_sites(int n, int min, const char* model) {
  if (n < min) throw std::invalid_argument(fmt::format("{} needs n >= {}, got {}", model, min, n));
}

std::uint32_t bit(int j) { return 1u << j; }

OperatorSum ring_zz(int n, double coupling) {
  OperatorSum s(n);
  for (int j = 0; j < n; ++j) {
    s.add(coupling, PauliString(n, 0, bit(j) | bit((j + 1) % n)));
  }
  return s;
}

}  // namespace

Eigen::MatrixXcd build_projector_hamiltonian(const ProjectorSpec& spec) {
  require_dense_capacity(spec.n);
  if (spec.states.size() != spec.energies.size()) {
    throw std::invalid_argument(fmt::format("projector spec has {} states but {} energies", spec.states.size(),
                                            spec.energies.size()));
  }
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < spec.states.size(); ++i) {
    if (spec.states[i].n() != spec.n) throw std::invalid_argument("projector state has wrong qubit count");
    for (std::size_t j = i; j < spec.states.size(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      const double dev = std::abs(std::abs(inner(spec.states[i], spec.states[j])) - target);
      if (dev > worst) worst = dev, wi = i, wj = j;
    }
  }
  if (worst > kOrthogonalityTolerance) {
    throw std::invalid_argument(
        fmt::format("projector states not orthonormal: max overlap deviation {:.3e} at |<E{}|E{}>|", worst, wi, wj));
  }
  const auto dim = Eigen::Index{1} << spec.n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < spec.states.size(); ++i) {
    const auto& v = spec.states[i].amplitudes();
    h.noalias() += spec.energies[i] * (v * v.adjoint());
  }
  return h;
}

OperatorSum build_xy_string(int n, double J) {
  require_min_sites(n, 2, "xy-string");
  const std::uint32_t all = (1u << n) - 1u;
  OperatorSum s(n);
  const double c = -J / (n * (n - 1.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s.add(c, PauliString(n, all, bit(i) | bit(j)));
  }
  return s;
}

OperatorSum build_ising_ring(int n) {
  require_min_sites(n, 3, "Ising ring");
  return ring_zz(n, -1.0);
}

OperatorSum build_half_strings(int n) {
  require_min_sites(n, 4, "half-chain strings");
  const int m = n / 2;
  const std::uint32_t left = (1u << m) - 1u;
  const std::uint32_t right = ((1u << n) - 1u) & ~left;
  OperatorSum s(n);
  s.add(1.0, PauliString(n, left, 0));
  s.add(-1.0, PauliString(n, right, 0));
  return s;
}

OperatorSum build_hj(int n, double J) {
  require_min_sites(n, 4, "H(J)");
  return build_ising_ring(n) + complex(J) * build_half_strings(n);
}

OperatorSum build_dtc_effective(int n) {
  require_min_sites(n, 3, "DTC effective Hamiltonian");
  if (n % 2 == 0) {
    throw std::invalid_argument(fmt::format("DTC effective Hamiltonian is defined for odd n, got {}", n));
  }
  OperatorSum s = ring_zz(n, -1.0 / n);
  const double sign = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  s.add(sign * std::numbers::pi / 2.0, PauliString(n, (1u << n) - 1u, 0));
  return s;
}

OperatorSum build_field_perturbation(int n, std::span<const FieldVector> h) {
  if (h.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(fmt::format("expected {} field vectors, got {}", n, h.size()));
  }
  OperatorSum s(n);
  for (int j = 0; j < n; ++j) {
    s.add(h[j][0], PauliString::single(n, j, Pauli::X));
    s.add(h[j][1], PauliString::single(n, j, Pauli::Y));
    s.add(h[j][2], PauliString::single(n, j, Pauli::Z));
  }
  return s;
}

std::vector<FieldVector> random_fields(int n, std::mt19937_64& rng, double amplitude) {
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  std::vector<FieldVector> h(static_cast<std::size_t>(n));
  for (auto& v : h) {
    for (auto& c : v) c = dist(rng);
  }
  return h;
}

OperatorSum build_nn_perturbation(int n, Axis axis) {
  require_min_sites(n, 3, "nearest-neighbour perturbation");
  OperatorSum s(n);
  for (int j = 0; j < n; ++j) {
    const std::uint32_t pair = bit(j) | bit((j + 1) % n);
    s.add(1.0, PauliString(n, pair, axis == Axis::Y ? pair : 0u));
  }
  return s;
}

}  // namespace tcrystal
