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

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "symqite/pauli.hpp"

namespace symqite {

/// Dense 2^n amplitude vector. Qubit 0 is the most significant bit of the
/// basis index, matching the leftmost-letter convention of PauliString.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(uint32_t n);
  static StateVector plus_state(uint32_t n);
  static StateVector basis_state(uint32_t n, uint64_t index);

  uint32_t n_qubits() const { return n_; }
  uint64_t dim() const { return uint64_t{1} << n_; }
  cplx* data() { return amp_.data(); }
  const cplx* data() const { return amp_.data(); }
  cplx& operator[](uint64_t i) { return amp_[i]; }
  const cplx& operator[](uint64_t i) const { return amp_[i]; }

  double norm() const;
  /// Throws std::logic_error if the norm has drifted from 1 beyond tol.
  void assert_normalized(double tol = 1e-10) const;
  void normalize();

  bool all_finite() const;

 private:
  uint32_t n_ = 0;
  std::vector<cplx> amp_;
};

cplx inner_product(const StateVector& a, const StateVector& b);
double state_distance(const StateVector& a, const StateVector& b);
/// 1 - |<a|b>|^2.
double infidelity(const StateVector& a, const StateVector& b);

/// A Pauli string on a few local qubits, embedded into the global register as
/// precomputed bit masks so it can be applied in one pass.
struct EmbeddedString {
  uint64_t x_mask = 0;
  uint64_t yz_mask = 0;
  uint32_t y_count = 0;
  cplx basis_phase(uint64_t s) const;
};

/// Embeds `local` onto global qubits `qubits[k]` (one per local letter).
EmbeddedString embed_string(const PauliString& local,
                            const std::vector<int>& qubits, uint32_t n_total);

/// out = sigma * in (out must be a distinct, same-size state).
void apply_embedded(const EmbeddedString& s, const StateVector& in,
                    StateVector& out);

/// psi <- cos(theta) psi - i sin(theta) sigma psi, the exponential of a
/// single Pauli string.
void apply_string_exponential(StateVector& psi, const EmbeddedString& s,
                              double theta);

/// Gather/scatter plumbing for applying a small dense operator on a subset of
/// qubits without materializing anything of size 2^n x 2^n.
struct LocalSupport {
  uint32_t n_total = 0;
  std::vector<int> qubits;          // global indices, local order
  std::vector<uint64_t> offset;     // local pattern -> OR of global bits
  std::vector<uint64_t> comp_bits;  // non-support bit values, descending
  LocalSupport() = default;
  LocalSupport(const std::vector<int>& qs, uint32_t n_total);
  uint32_t width() const { return static_cast<uint32_t>(qubits.size()); }
};

void apply_local_unitary(StateVector& psi, const Eigen::MatrixXcd& u,
                         const LocalSupport& sup);

/// Expectation of a real-Hermitian local operator: <psi|O|psi>. The imaginary
/// part is asserted to be below tol and discarded. Throws if O is not real.
double expectation(const StateVector& psi, const PauliSum& local,
                   const std::vector<int>& qubits, double tol = 1e-10);
double expectation(const StateVector& psi, const PauliSum& global,
                   double tol = 1e-10);

/// out (+)= coeff * G * psi for a local Pauli sum G.
void accumulate_pauli_sum(const PauliSum& local, const std::vector<int>& qubits,
                          const StateVector& psi, cplx coeff, StateVector& out);

/// Exponential exp(-i theta G) of a real-Hermitian generator supported on at
/// most kExpSupportCap qubits. Single strings use the rotation formula;
/// multi-string generators use an exact eigendecomposition on the support.
inline constexpr uint32_t kExpSupportCap = 6;
void apply_exponential(StateVector& psi, const PauliSum& generator,
                       const std::vector<int>& qubits, double theta);

}  // namespace symqite
