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

#include <limits>
#include <stdexcept>
#include <vector>

#include "tcrystal/pauli.hpp"
#include "tcrystal/spectral.hpp"

namespace tcrystal {

/// Frequencies closer than this are treated as one harmonic.
inline constexpr double kHarmonicMergeTol = 1e-9;
/// Default relative weight below which a harmonic is not counted.
inline constexpr double kDefaultWeightTol = 1e-3;
inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// Uniform sampling grid t_k = t0 + k * dt, k = 0..count-1.
struct TimeGrid {
  double t0 = 0.0;
  double dt = 0.1;
  std::size_t count = 2048;

  double at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
  void validate() const;
};

struct TimeSeries {
  TimeGrid grid;
  std::vector<complex> values;
};

/// One Bohr frequency and its complex amplitude, f(t) = sum weight * e^{i omega t}.
struct Harmonic {
  double omega;
  complex weight;
};
using Harmonics = std::vector<Harmonic>;

/// Raised when a pure ground-state correlation is requested for a degenerate
/// ground state.
class DegenerateGroundStateError : public std::runtime_error {
 public:
  explicit DegenerateGroundStateError(int m);
  int degeneracy() const { return m_; }

 private:
  int m_;
};

/// sum_h weight_h * exp(i omega_h t) at one time.
complex evaluate(const Harmonics& h, double t);
TimeSeries evaluate(const Harmonics& h, const TimeGrid& grid);

/// Lehmann weights of (1/m) sum_i <E0_i| A(t) B(0) |E0_i> over the m-fold
/// ground manifold: omega = e0 - e_k, weight = <E0|A|E_k><E_k|B|E0>.
Harmonics ground_manifold_harmonics(const SpectralDecomposition& sd, const OperatorSum& a, const OperatorSum& b,
                                    double degeneracy_tol = kDefaultDegeneracyTol);

/// Lehmann weights of the thermal M_z correlation:
/// omega = e_j - e_k, weight = Z^-1 e^{-beta e_j} |<E_j|M_z|E_k>|^2.
/// beta = kInfiniteBeta averages over the ground manifold.
Harmonics thermal_harmonics(const SpectralDecomposition& sd, double beta,
                            double degeneracy_tol = kDefaultDegeneracyTol);

/// <E0| e^{iHt} op e^{-iHt} op |E0> for a nondegenerate ground state.
TimeSeries correlation_zero_t(const SpectralDecomposition& sd, const OperatorSum& op, const TimeGrid& grid,
                              double degeneracy_tol = kDefaultDegeneracyTol);

/// <E0| sigma_z^(i)(t) sigma_z^(j)(0) |E0>, sites 1-based.
TimeSeries correlation_local_zz(const SpectralDecomposition& sd, int i, int j, const TimeGrid& grid,
                                double degeneracy_tol = kDefaultDegeneracyTol);

/// M_z correlation averaged over the degenerate ground manifold.
TimeSeries correlation_mixed_gs(const SpectralDecomposition& sd, double degeneracy_tol, const TimeGrid& grid);
/// Same average for an arbitrary pair A(t) B(0).
TimeSeries correlation_mixed_gs(const SpectralDecomposition& sd, const OperatorSum& a, const OperatorSum& b,
                                double degeneracy_tol, const TimeGrid& grid);

/// Thermal M_z correlation Tr(rho M_z(t) M_z(0)), rho = e^{-beta H} / Z.
TimeSeries correlation_thermal(const SpectralDecomposition& sd, double beta, const TimeGrid& grid);

/// Merges harmonics whose frequencies chain within tol; weights add.
/// Output is sorted by frequency.
Harmonics merge_harmonics(Harmonics h, double tol = kHarmonicMergeTol);

/// Number of merged harmonics whose |weight| exceeds weight_tol times the
/// summed |weight| of all of them.
int count_significant_harmonics(const Harmonics& h, double weight_tol = kDefaultWeightTol);

/// Number of distinct thermal Bohr frequencies whose merged weight exceeds
/// weight_tol times the total weight.
int count_bohr_harmonics(const SpectralDecomposition& sd, double beta, double weight_tol = kDefaultWeightTol);

/// Harmonic of largest |weight|.
Harmonic dominant_harmonic(const Harmonics& h);

}  // namespace tcrystal
