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

#include "tcrystal/hilbert.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace tcrystal {
namespace {

void require_length(int n, Eigen::Index size) {
  require_dense_capacity(n);
  if (size != (Eigen::Index{1} << n)) {
    throw std::invalid_argument(fmt::format("state has {} amplitudes, expected 2^{}", size, n));
  }
}

void require_same_n(int a, int b) {
  if (a != b) throw std::invalid_argument(fmt::format("qubit count mismatch ({} vs {})", a, b));
}

}  // namespace

StateVector::StateVector(int n, Eigen::VectorXcd amps) : n_(n), amps_(std::move(amps)) {
  require_length(n, amps_.size());
  if (std::abs(amps_.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument(fmt::format("state norm {:.3e} differs from 1", amps_.norm()));
  }
}

StateVector StateVector::normalized(int n, Eigen::VectorXcd amps) {
  const double norm = amps.norm();
  if (norm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  amps /= norm;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  require_dense_capacity(n);
  const auto dim = Eigen::Index{1} << n;
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw std::out_of_range(fmt::format("basis index {} outside 2^{}", index, n));
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector make_ghz(GhzSign sign, int n) {
  require_dense_capacity(n);
  const auto dim = Eigen::Index{1} << n;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  const double a = 1.0 / std::sqrt(2.0);
  amps[0] = a;
  amps[dim - 1] = sign == GhzSign::Plus ? a : -a;
  return StateVector(n, std::move(amps));
}

Eigen::VectorXd mz_diagonal(int n) {
  require_dense_capacity(n);
  const auto dim = Eigen::Index{1} << n;
  Eigen::VectorXd d(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    d[b] = static_cast<double>(n - 2 * std::popcount(static_cast<std::uint64_t>(b))) / n;
  }
  return d;
}

Eigen::VectorXcd apply_mz(int n, const Eigen::VectorXcd& amps) {
  require_length(n, amps.size());
  return mz_diagonal(n).cwiseProduct(amps);
}

OperatorSum mz_operator(int n) {
  OperatorSum s(n);
  for (int j = 0; j < n; ++j) s.add(1.0 / n, PauliString::single(n, j, Pauli::Z));
  return s;
}

double mz_expectation(const StateVector& s) {
  return mz_diagonal(s.n()).dot(s.amplitudes().cwiseAbs2());
}

double order_parameter(const StateVector& s) {
  return mz_diagonal(s.n()).cwiseAbs2().dot(s.amplitudes().cwiseAbs2());
}

MagnetizationTable mz_eigendata(int n) {
  if (n < 1) throw std::invalid_argument("mz_eigendata: n must be >= 1");
  MagnetizationTable table{n, {}};
  std::uint64_t binom = 1;
  for (int k = 0; k <= n; ++k) {
    table.levels.push_back({k, static_cast<double>(n - 2 * k) / n, binom});
    binom = binom * static_cast<std::uint64_t>(n - k) / static_cast<std::uint64_t>(k + 1);
  }
  return table;
}

bool check_flip_symmetry(const StateVector& s, double tol) {
  const auto dim = s.dim();
  const auto flip = dim - 1;
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (std::abs(std::abs(s.amplitudes()[b]) - std::abs(s.amplitudes()[b ^ flip])) > tol) return false;
  }
  return true;
}

complex inner(const StateVector& a, const StateVector& b) {
  require_same_n(a.n(), b.n());
  return a.amplitudes().dot(b.amplitudes());
}

complex expectation(const OperatorSum& op, const StateVector& s) {
  require_same_n(op.n(), s.n());
  return s.amplitudes().dot(apply(op, s.amplitudes()));
}

std::string to_csv(const StateVector& s) {
  std::string out = "index,re,im\n";
  for (Eigen::Index b = 0; b < s.dim(); ++b) {
    out += fmt::format("{},{:.17g},{:.17g}\n", b, s.amplitudes()[b].real(), s.amplitudes()[b].imag());
  }
  return out;
}

StateVector state_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::map<std::uint64_t, complex> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (header) {
      header = false;
      if (line.rfind("index", 0) == 0) continue;
    }
    std::uint64_t idx = 0;
    double re = 0, im = 0;
    char c1 = 0, c2 = 0;
    std::istringstream fields(line);
    if (!(fields >> idx >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
      throw std::invalid_argument(fmt::format("bad state CSV row '{}'", line));
    }
    rows[idx] = {re, im};
  }
  const auto dim = static_cast<std::uint64_t>(rows.size());
  if (dim < 2 || !std::has_single_bit(dim) || rows.rbegin()->first != dim - 1) {
    throw std::invalid_argument("state CSV must list every index 0..2^n-1");
  }
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim));
  for (const auto& [b, a] : rows) amps[static_cast<Eigen::Index>(b)] = a;
  return StateVector(std::countr_zero(dim), std::move(amps));
}

}  // namespace tcrystal
