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

#include "tcrystal/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace tcrystal {
namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

std::uint32_t site_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

void require_same_size(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(fmt::format("{}: qubit count mismatch ({} vs {})", what, a, b));
  }
}

}  // namespace

void require_dense_capacity(int n) {
  if (n < 1) throw std::invalid_argument(fmt::format("qubit count must be >= 1, got {}", n));
  if (n > kMaxQubits) {
    throw CapacityError(fmt::format("n = {} exceeds the dense limit of {} qubits (2^{} x 2^{} matrices)", n,
                                    kMaxQubits, kMaxQubits, kMaxQubits));
  }
}

complex QuarterPhase::value() const {
  switch (quarter_turns) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(int n, std::uint32_t x_mask, std::uint32_t z_mask, QuarterPhase phase)
    : n_(n), x_(x_mask), z_(z_mask), phase_(phase) {
  require_dense_capacity(n);
  if ((x_mask | z_mask) & ~site_mask(n)) {
    throw std::invalid_argument(fmt::format("Pauli masks exceed {} sites", n));
  }
}

PauliString PauliString::single(int n, int site, Pauli p) {
  if (site < 0 || site >= n) throw std::out_of_range(fmt::format("site {} outside [0, {})", site, n));
  const auto bits = static_cast<std::uint32_t>(p);
  return PauliString(n, (bits & 1u) << site, ((bits >> 1) & 1u) << site);
}

PauliString PauliString::from_word(std::string_view word) {
  QuarterPhase phase;
  if (word.starts_with("+i")) {
    phase = QuarterPhase(1), word.remove_prefix(2);
  } else if (word.starts_with("-i")) {
    phase = QuarterPhase(3), word.remove_prefix(2);
  } else if (word.starts_with('+')) {
    word.remove_prefix(1);
  } else if (word.starts_with('-')) {
    phase = QuarterPhase(2), word.remove_prefix(1);
  }
  const int n = static_cast<int>(word.size());
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument(fmt::format("Pauli word length {} outside [1, {}]", n, kMaxQubits));
  }
  std::uint32_t x = 0, z = 0;
  for (int j = 0; j < n; ++j) {
    switch (word[j]) {
      case 'I': case '_': break;
      case 'X': x |= 1u << j; break;
      case 'Z': z |= 1u << j; break;
      case 'Y': x |= 1u << j, z |= 1u << j; break;
      default: throw std::invalid_argument(fmt::format("bad Pauli character '{}' in word", word[j]));
    }
  }
  return PauliString(n, x, z, phase);
}

Pauli PauliString::at(int site) const {
  return static_cast<Pauli>(((x_ >> site) & 1u) | (((z_ >> site) & 1u) << 1));
}

int PauliString::weight() const { return popcount(x_ | z_); }

std::string PauliString::word() const {
  std::string w(static_cast<std::size_t>(n_), 'I');
  for (int j = 0; j < n_; ++j) w[j] = "IXZY"[static_cast<int>(at(j))];
  return w;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a.n(), b.n(), "multiply");
  // With P = i^{|x&z|} X^x Z^z, moving Z^{za} past X^{xb} costs (-1)^{|za & xb|}.
  const std::uint32_t x = a.x_mask() ^ b.x_mask();
  const std::uint32_t z = a.z_mask() ^ b.z_mask();
  const int k = popcount(a.x_mask() & a.z_mask()) + popcount(b.x_mask() & b.z_mask()) +
                2 * popcount(a.z_mask() & b.x_mask()) - popcount(x & z);
  return PauliString(a.n(), x, z, a.phase() * b.phase() * QuarterPhase(k));
}

BasisImage apply(const PauliString& p, std::uint64_t b) {
  if (b >> p.n()) throw std::out_of_range(fmt::format("basis index {} outside 2^{}", b, p.n()));
  const int k = p.phase().quarter_turns + popcount(p.x_mask() & p.z_mask()) + 2 * popcount(p.z_mask() & b);
  return {b ^ p.x_mask(), QuarterPhase(k).value()};
}

OperatorSum::OperatorSum(int n) : n_(n) { require_dense_capacity(n); }

OperatorSum& OperatorSum::add(complex coeff, const PauliString& p) {
  require_same_size(n_, p.n(), "OperatorSum::add");
  if (coeff == complex{}) return *this;
  coeff *= p.phase().value();
  const auto k = key(p.x_mask(), p.z_mask());
  if (auto it = index_.find(k); it != index_.end()) {
    terms_[it->second].coeff += coeff;
    if (terms_[it->second].coeff == complex{}) {
      terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(it->second));
      index_.clear();
      for (std::size_t i = 0; i < terms_.size(); ++i) {
        index_[key(terms_[i].string.x_mask(), terms_[i].string.z_mask())] = i;
      }
    }
    return *this;
  }
  index_.emplace(k, terms_.size());
  terms_.push_back({coeff, p.with_phase(QuarterPhase{})});
  return *this;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  require_same_size(n_, other.n_, "OperatorSum::operator+=");
  for (const auto& t : other.terms_) add(t.coeff, t.string);
  return *this;
}

OperatorSum& OperatorSum::operator*=(complex scale) {
  if (scale == complex{}) {
    terms_.clear();
    index_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scale;
  return *this;
}

complex OperatorSum::coefficient(std::uint32_t x_mask, std::uint32_t z_mask) const {
  const auto it = index_.find(key(x_mask, z_mask));
  return it == index_.end() ? complex{} : terms_[it->second].coeff;
}

bool is_hermitian(const OperatorSum& s) {
  for (const auto& t : s.terms()) {
    if (t.coeff.imag() != 0.0) return false;
  }
  return true;
}

bool is_real(const OperatorSum& s) {
  // Matrix entries of a phase-free string are i^{|x&z|} times a sign.
  for (const auto& t : s.terms()) {
    const complex c = t.coeff * QuarterPhase(popcount(t.string.x_mask() & t.string.z_mask())).value();
    if (c.imag() != 0.0) return false;
  }
  return true;
}

Eigen::VectorXcd apply(const OperatorSum& s, const Eigen::VectorXcd& v) {
  const std::uint64_t dim = std::uint64_t{1} << s.n();
  if (static_cast<std::uint64_t>(v.size()) != dim) {
    throw std::invalid_argument(fmt::format("vector length {} does not match 2^{}", v.size(), s.n()));
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const auto& t : s.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const auto img = apply(t.string, b);
      out[static_cast<Eigen::Index>(img.index)] += t.coeff * img.phase * v[static_cast<Eigen::Index>(b)];
    }
  }
  return out;
}

Eigen::MatrixXcd to_dense(const OperatorSum& s) {
  require_dense_capacity(s.n());
  const std::uint64_t dim = std::uint64_t{1} << s.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : s.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const auto img = apply(t.string, b);
      m(static_cast<Eigen::Index>(img.index), static_cast<Eigen::Index>(b)) += t.coeff * img.phase;
    }
  }
  return m;
}

Eigen::MatrixXd to_dense_real(const OperatorSum& s) {
  require_dense_capacity(s.n());
  if (!is_real(s)) throw std::invalid_argument("operator has complex matrix entries");
  const std::uint64_t dim = std::uint64_t{1} << s.n();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : s.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const auto img = apply(t.string, b);
      m(static_cast<Eigen::Index>(img.index), static_cast<Eigen::Index>(b)) += (t.coeff * img.phase).real();
    }
  }
  return m;
}

OperatorSum pauli_decompose(const Eigen::MatrixXcd& m, int n, double drop_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pauli_decompose: matrix is not square");
  const auto dim = static_cast<std::uint64_t>(m.rows());
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument(fmt::format("pauli_decompose: dimension {} is not a power of two", dim));
  }
  if (dim != (std::uint64_t{1} << n)) {
    throw std::invalid_argument(fmt::format("pauli_decompose: dimension {} does not match n = {}", dim, n));
  }
  require_dense_capacity(n);

  // For fixed x, Tr(P^dagger m) = conj(i^{|x&z|}) * sum_b (-1)^{|z&b|} m[b^x, b],
  // which is a Walsh-Hadamard transform over z of g_x(b) = m[b^x, b].
  OperatorSum out(n);
  std::vector<complex> g(dim);
  const double norm = 1.0 / static_cast<double>(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      g[b] = m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b));
    }
    for (std::uint64_t h = 1; h < dim; h <<= 1) {
      for (std::uint64_t i = 0; i < dim; i += 2 * h) {
        for (std::uint64_t j = i; j < i + h; ++j) {
          const complex u = g[j], v = g[j + h];
          g[j] = u + v;
          g[j + h] = u - v;
        }
      }
    }
    for (std::uint64_t z = 0; z < dim; ++z) {
      const complex coeff = std::conj(QuarterPhase(popcount(x & z)).value()) * g[z] * norm;
      if (std::abs(coeff) < drop_tol) continue;
      out.add(coeff, PauliString(n, static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(z)));
    }
  }
  return out;
}

std::string serialize(const OperatorSum& s) {
  std::string out;
  for (const auto& t : s.terms()) {
    out += fmt::format("{:.17g} {:.17g} {}\n", t.coeff.real(), t.coeff.imag(), t.string.word());
  }
  return out;
}

OperatorSum parse_operator_sum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<complex, PauliString>> terms;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    std::istringstream fields(line);
    double re = 0, im = 0;
    std::string word;
    if (!(fields >> re >> im >> word)) {
      throw std::invalid_argument(fmt::format("operator sum line {}: expected 're im word'", line_no));
    }
    terms.emplace_back(complex{re, im}, PauliString::from_word(word));
  }
  if (terms.empty()) throw std::invalid_argument("operator sum text has no terms");
  OperatorSum s(terms.front().second.n());
  for (const auto& [c, p] : terms) s.add(c, p);
  return s;
}

}  // namespace tcrystal
