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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tcrystal {

using complex = std::complex<double>;

/// Largest qubit count for which dense 2^n x 2^n matrices are built.
inline constexpr int kMaxQubits = 14;

/// Thrown when a request would exceed the dense-matrix capacity.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Throws CapacityError above kMaxQubits and std::invalid_argument below 1.
void require_dense_capacity(int n);

/// Single-site Pauli label. The numeric value is the (x, z) bit pair.
enum class Pauli : std::uint8_t { I = 0b00, X = 0b01, Z = 0b10, Y = 0b11 };

/// Phase of a Pauli string as a power of i, stored mod 4.
struct QuarterPhase {
  std::uint8_t quarter_turns = 0;

  constexpr QuarterPhase() = default;
  constexpr explicit QuarterPhase(int k) : quarter_turns(static_cast<std::uint8_t>(((k % 4) + 4) % 4)) {}

  complex value() const;
  friend constexpr QuarterPhase operator*(QuarterPhase a, QuarterPhase b) {
    return QuarterPhase(a.quarter_turns + b.quarter_turns);
  }
  friend constexpr bool operator==(QuarterPhase, QuarterPhase) = default;
};

/// A phased tensor product of single-qubit Pauli operators on n qubits.
///
/// Site j (0-based, bit j) carries I/X/Z/Y for (x, z) bits (0,0)/(1,0)/(0,1)/(1,1).
/// Y is the Hermitian Pauli matrix, so a string equals
/// phase * i^{|x & z|} * X^x Z^z.
class PauliString {
 public:
  PauliString(int n, std::uint32_t x_mask, std::uint32_t z_mask, QuarterPhase phase = {});

  static PauliString identity(int n) { return PauliString(n, 0, 0); }
  /// One non-identity operator at `site`, identity elsewhere.
  static PauliString single(int n, int site, Pauli p);
  /// Parses a word over {I,X,Y,Z}, site 1 leftmost. An optional leading
  /// sign prefix (+, -, +i, -i) sets the phase.
  static PauliString from_word(std::string_view word);

  int n() const { return n_; }
  std::uint32_t x_mask() const { return x_; }
  std::uint32_t z_mask() const { return z_; }
  QuarterPhase phase() const { return phase_; }
  Pauli at(int site) const;
  /// Number of non-identity sites.
  int weight() const;

  /// The unsigned word, site 1 leftmost.
  std::string word() const;

  PauliString with_phase(QuarterPhase p) const { return PauliString(n_, x_, z_, p); }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_;
  std::uint32_t x_;
  std::uint32_t z_;
  QuarterPhase phase_;
};

/// Pauli group product a * b with exact phase tracking.
PauliString multiply(const PauliString& a, const PauliString& b);

/// Image of a basis state: P|b> = phase * |b'>.
struct BasisImage {
  std::uint64_t index;
  complex phase;
};

/// Action of a Pauli string on basis index b (bit j = 1 means site j down).
BasisImage apply(const PauliString& p, std::uint64_t b);

/// Canonical weighted sum of Pauli strings.
///
/// Every stored string has phase +1 and a distinct (x, z) pair; phases of
/// added strings are folded into their coefficients. Terms keep first-insertion
/// order.
class OperatorSum {
 public:
  struct Term {
    complex coeff;
    PauliString string;
  };

  explicit OperatorSum(int n);

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds coeff * p. An exactly zero coefficient is ignored; a term whose
  /// merged coefficient cancels to exactly zero is removed.
  OperatorSum& add(complex coeff, const PauliString& p);
  OperatorSum& operator+=(const OperatorSum& other);
  OperatorSum& operator*=(complex scale);

  /// Coefficient of the phase-free string (x, z); zero if absent.
  complex coefficient(std::uint32_t x_mask, std::uint32_t z_mask) const;

  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator*(complex s, OperatorSum a) { return a *= s; }

 private:
  static std::uint64_t key(std::uint32_t x, std::uint32_t z) { return (std::uint64_t{x} << 32) | z; }

  int n_;
  std::vector<Term> terms_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// True iff every coefficient is real, i.e. the operator is Hermitian.
bool is_hermitian(const OperatorSum& s);

/// True iff the dense matrix of `s` has only real entries.
bool is_real(const OperatorSum& s);

/// y = s * v for a vector of length 2^n.
Eigen::VectorXcd apply(const OperatorSum& s, const Eigen::VectorXcd& v);

/// Dense 2^n x 2^n matrix. Throws CapacityError above kMaxQubits.
Eigen::MatrixXcd to_dense(const OperatorSum& s);

/// Dense real matrix; throws std::invalid_argument if `s` has complex entries.
Eigen::MatrixXd to_dense_real(const OperatorSum& s);

/// Expands a 2^n x 2^n matrix over all 4^n Pauli strings,
/// m = sum_P Tr(P^dagger m) / 2^n * P, dropping |coefficient| < drop_tol.
OperatorSum pauli_decompose(const Eigen::MatrixXcd& m, int n, double drop_tol = 1e-12);

/// One `coeff_re coeff_im word` line per term.
std::string serialize(const OperatorSum& s);
OperatorSum parse_operator_sum(std::string_view text);

}  // namespace tcrystal
