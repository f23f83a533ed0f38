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

#include "tcrystal/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <fmt/format.h>

#include "tcrystal/hilbert.hpp"

namespace tcrystal {
namespace {

// Maps every eigenvalue index to its level.
struct LevelIndex {
  std::vector<EnergyLevel> levels;
  std::vector<std::size_t> of;

  explicit LevelIndex(const SpectralDecomposition& sd) : levels(sd.levels(sd.level_tolerance())) {
    of.resize(static_cast<std::size_t>(sd.dim()));
    for (std::size_t l = 0; l < levels.size(); ++l) {
      for (Eigen::Index k = 0; k < levels[l].count; ++k) of[static_cast<std::size_t>(levels[l].first + k)] = l;
    }
  }
};

// Accumulates weights per (row level, column level) pair.
class PairAccumulator {
 public:
  explicit PairAccumulator(std::size_t levels) : levels_(levels) {
    if (levels <= 2048) dense_.assign(levels * levels, complex{});
  }

  void add(std::size_t a, std::size_t b, complex w) {
    if (!dense_.empty()) {
      dense_[a * levels_ + b] += w;
    } else {
      sparse_[a * levels_ + b] += w;
    }
  }

  Harmonics harmonics(const std::vector<EnergyLevel>& lv) const {
    Harmonics out;
    auto emit = [&](std::size_t key, complex w) {
      if (w == complex{}) return;
      const std::size_t a = key / levels_, b = key % levels_;
      out.push_back({lv[a].energy - lv[b].energy, w});
    };
    if (!dense_.empty()) {
      for (std::size_t k = 0; k < dense_.size(); ++k) emit(k, dense_[k]);
    } else {
      std::vector<std::pair<std::size_t, complex>> items(sparse_.begin(), sparse_.end());
      std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [k, w] : items) emit(k, w);
    }
    return out;
  }

 private:
  std::size_t levels_;
  std::vector<complex> dense_;
  std::unordered_map<std::size_t, complex> sparse_;
};

OperatorSum sigma_z(int n, int site_one_based) {
  if (site_one_based < 1 || site_one_based > n) {
    throw std::out_of_range(fmt::format("site {} outside 1..{}", site_one_based, n));
  }
  OperatorSum s(n);
  s.add(1.0, PauliString::single(n, site_one_based - 1, Pauli::Z));
  return s;
}

}  // namespace

void TimeGrid::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument(fmt::format("time step must be positive, got {}", dt));
  if (count < 2) throw std::invalid_argument(fmt::format("time grid needs at least 2 samples, got {}", count));
}

DegenerateGroundStateError::DegenerateGroundStateError(int m)
    : std::runtime_error(fmt::format(
          "ground state is {}-fold degenerate (gs_degeneracy = {}); use correlation_mixed_gs", m, m)),
      m_(m) {}

complex evaluate(const Harmonics& h, double t) {
  complex f{};
  for (const auto& [omega, w] : h) f += w * std::polar(1.0, omega * t);
  return f;
}

TimeSeries evaluate(const Harmonics& h, const TimeGrid& grid) {
  grid.validate();
  TimeSeries ts{grid, std::vector<complex>(grid.count)};
  for (std::size_t k = 0; k < grid.count; ++k) ts.values[k] = evaluate(h, grid.at(k));
  return ts;
}

Harmonics ground_manifold_harmonics(const SpectralDecomposition& sd, const OperatorSum& a, const OperatorSum& b,
                                    double degeneracy_tol) {
  if (a.n() != sd.n() || b.n() != sd.n()) throw std::invalid_argument("operator qubit count mismatch");
  const int m = gs_degeneracy(sd, degeneracy_tol);
  const LevelIndex li(sd);
  PairAccumulator acc(li.levels.size());
  for (int i = 0; i < m; ++i) {
    const Eigen::VectorXcd e0 = sd.eigenvector(i);
    const Eigen::VectorXcd av = sd.coefficients(apply(a, e0));
    const Eigen::VectorXcd bv = sd.coefficients(apply(b, e0));
    const std::size_t row = li.of[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < sd.dim(); ++k) {
      acc.add(row, li.of[static_cast<std::size_t>(k)], std::conj(av[k]) * bv[k] / static_cast<double>(m));
    }
  }
  return acc.harmonics(li.levels);
}

Harmonics thermal_harmonics(const SpectralDecomposition& sd, double beta, double degeneracy_tol) {
  if (!(beta >= 0.0)) throw std::invalid_argument(fmt::format("beta must be >= 0, got {}", beta));
  if (std::isinf(beta)) {
    const auto mz = mz_operator(sd.n());
    return ground_manifold_harmonics(sd, mz, mz, degeneracy_tol);
  }
  const LevelIndex li(sd);
  const Eigen::VectorXd& e = sd.eigenvalues();
  Eigen::VectorXd p = (-beta * (e.array() - e[0])).exp();
  p /= p.sum();

  const Eigen::MatrixXd strengths = sd.diagonal_transition_strengths(mz_diagonal(sd.n()));
  PairAccumulator acc(li.levels.size());
  std::vector<double> row(li.levels.size());
  for (Eigen::Index j = 0; j < sd.dim(); ++j) {
    if (p[j] == 0.0) continue;
    std::fill(row.begin(), row.end(), 0.0);
    // strengths is symmetric, so column j is row j and contiguous.
    for (Eigen::Index k = 0; k < sd.dim(); ++k) row[li.of[static_cast<std::size_t>(k)]] += strengths(k, j);
    const std::size_t a = li.of[static_cast<std::size_t>(j)];
    for (std::size_t bl = 0; bl < row.size(); ++bl) {
      if (row[bl] != 0.0) acc.add(a, bl, p[j] * row[bl]);
    }
  }
  return acc.harmonics(li.levels);
}

TimeSeries correlation_zero_t(const SpectralDecomposition& sd, const OperatorSum& op, const TimeGrid& grid,
                              double degeneracy_tol) {
  grid.validate();
  if (const int m = gs_degeneracy(sd, degeneracy_tol); m != 1) throw DegenerateGroundStateError(m);
  return evaluate(ground_manifold_harmonics(sd, op, op, degeneracy_tol), grid);
}

TimeSeries correlation_local_zz(const SpectralDecomposition& sd, int i, int j, const TimeGrid& grid,
                                double degeneracy_tol) {
  grid.validate();
  const auto zi = sigma_z(sd.n(), i);
  const auto zj = sigma_z(sd.n(), j);
  if (const int m = gs_degeneracy(sd, degeneracy_tol); m != 1) throw DegenerateGroundStateError(m);
  return evaluate(ground_manifold_harmonics(sd, zi, zj, degeneracy_tol), grid);
}

TimeSeries correlation_mixed_gs(const SpectralDecomposition& sd, const OperatorSum& a, const OperatorSum& b,
                                double degeneracy_tol, const TimeGrid& grid) {
  grid.validate();
  return evaluate(ground_manifold_harmonics(sd, a, b, degeneracy_tol), grid);
}

TimeSeries correlation_mixed_gs(const SpectralDecomposition& sd, double degeneracy_tol, const TimeGrid& grid) {
  const auto mz = mz_operator(sd.n());
  return correlation_mixed_gs(sd, mz, mz, degeneracy_tol, grid);
}

TimeSeries correlation_thermal(const SpectralDecomposition& sd, double beta, const TimeGrid& grid) {
  grid.validate();
  return evaluate(thermal_harmonics(sd, beta), grid);
}

Harmonics merge_harmonics(Harmonics h, double tol) {
  std::sort(h.begin(), h.end(), [](const Harmonic& x, const Harmonic& y) { return x.omega < y.omega; });
  Harmonics out;
  double last = 0.0;
  for (const auto& item : h) {
    if (!out.empty() && item.omega - last <= tol) {
      // Keep the weight-averaged frequency as the representative.
      auto& cur = out.back();
      const double wc = std::abs(cur.weight), wi = std::abs(item.weight);
      if (wc + wi > 0.0) cur.omega = (cur.omega * wc + item.omega * wi) / (wc + wi);
      cur.weight += item.weight;
    } else {
      out.push_back(item);
    }
    last = item.omega;
  }
  return out;
}

int count_bohr_harmonics(const SpectralDecomposition& sd, double beta, double weight_tol) {
  return count_significant_harmonics(thermal_harmonics(sd, beta), weight_tol);
}

int count_significant_harmonics(const Harmonics& h, double weight_tol) {
  const Harmonics merged = merge_harmonics(h);
  double total = 0.0;
  for (const auto& h : merged) total += std::abs(h.weight);
  int count = 0;
  for (const auto& h : merged) {
    if (std::abs(h.weight) > weight_tol * total) ++count;
  }
  return count;
}

Harmonic dominant_harmonic(const Harmonics& h) {
  if (h.empty()) throw std::invalid_argument("no harmonics");
  return *std::max_element(h.begin(), h.end(), [](const Harmonic& x, const Harmonic& y) {
    return std::abs(x.weight) < std::abs(y.weight);
  });
}

}  // namespace tcrystal
