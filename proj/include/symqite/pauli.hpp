// Copyright 2026 The symqite authors
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
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace symqite {

using cplx = std::complex<double>;

/// Number of qubits above which dense 2^n x 2^n construction is refused.
inline constexpr uint32_t kDenseQubitCap = 12;
/// Default qubit cap for Hilbert-Schmidt decomposition of dense operators.
inline constexpr uint32_t kDecomposeQubitCap = 6;
/// Coefficients below this magnitude are dropped when canonicalizing sums.
inline constexpr double kCoeffPruneTol = 1e-12;

enum class Letter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);

/// Tensor product of single-qubit Pauli operators on a fixed number of
/// qubits. Letters are packed two bits each into a single word: qubit 0 is
/// the leftmost letter in text form and the most significant pair of bits,
/// so the packed word is the base-4 value of the string and compares in
/// lexicographic (I < X < Y < Z) order.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(uint32_t n);
  static PauliString from_code(uint32_t n, uint64_t code);
  /// Parses "ZYIZ" style text. Throws std::invalid_argument on bad letters.
  static PauliString from_text(std::string_view text);

  uint32_t n_qubits() const { return n_; }
  uint64_t code() const { return code_; }
  Letter letter(uint32_t q) const;
  PauliString with_letter(uint32_t q, Letter l) const;

  uint32_t weight() const;
  uint32_t y_count() const;
  bool y_parity_odd() const { return (y_count() & 1u) != 0; }
  bool is_identity() const { return code_ == 0; }
  std::string text() const;

  /// Bit (n-1-q) is set iff the letter on qubit q flips that qubit (X or Y).
  uint64_t x_mask() const;
  /// Bit (n-1-q) is set iff the letter on qubit q is Y or Z.
  uint64_t yz_mask() const;
  /// Phase f(s) in sigma|s> = f(s)|s ^ x_mask()>, for a basis state index s.
  cplx basis_phase(uint64_t s) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  uint32_t n_ = 0;
  uint64_t code_ = 0;

  uint32_t shift(uint32_t q) const { return 2 * (n_ - 1 - q); }
};

/// Product of two equal-length strings: p*q == phase * result, with phase in
/// {1, i, -1, -i} (exactly representable). Throws on length mismatch.
std::pair<cplx, PauliString> multiply(const PauliString& p,
                                      const PauliString& q);

/// True iff p and q commute: the number of positions where both letters are
/// non-identity and different is even.
bool commutes(const PauliString& p, const PauliString& q);

/// All 4^n strings on n qubits in canonical (lexicographic) order.
std::vector<PauliString> full_basis(uint32_t n);

/// Real- or complex-weighted sum of Pauli strings, kept canonical: terms
/// sorted by string, like terms merged, coefficients below kCoeffPruneTol
/// dropped.
class PauliSum {
 public:
  using Term = std::pair<cplx, PauliString>;

  PauliSum() = default;
  static PauliSum zero(uint32_t n);
  PauliSum(uint32_t n, std::vector<Term> terms);
  explicit PauliSum(const PauliString& s, cplx coeff = 1.0);
  /// Parses the textual format produced by text(): "S1 + 0.5*S2 - S3".
  static PauliSum from_text(std::string_view text);

  uint32_t n_qubits() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  cplx coefficient(const PauliString& s) const;
  /// All coefficients real within tolerance; for a Pauli sum this is the
  /// same as being Hermitian.
  bool is_real(double tol = 1e-10) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(cplx scale);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

  bool operator==(const PauliSum&) const = default;

  std::string text() const;

 private:
  uint32_t n_ = 0;
  std::vector<Term> terms_;

  void canonicalize();
};

Eigen::MatrixXcd dense_matrix(const PauliString& s,
                              uint32_t cap = kDenseQubitCap);
Eigen::MatrixXcd dense_matrix(const PauliSum& s,
                              uint32_t cap = kDenseQubitCap);

/// Hilbert-Schmidt decomposition c_i = tr(sigma_i op) / 2^k of a dense
/// 2^k x 2^k operator. Throws if the dimension is not a power of two or k
/// exceeds the cap.
PauliSum decompose(const Eigen::MatrixXcd& op,
                   uint32_t cap = kDecomposeQubitCap,
                   double prune = kCoeffPruneTol);

}  // namespace symqite
