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

#include "symqite/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace symqite {

namespace {
constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
}

StateVector::StateVector(uint32_t n) : n_(n), amp_(uint64_t{1} << n, cplx{0, 0}) {
  if (n > kDenseQubitCap)
    throw std::invalid_argument("StateVector: qubit cap exceeded");
}

StateVector StateVector::plus_state(uint32_t n) {
  StateVector s(n);
  const double a = std::pow(2.0, -0.5 * n);
  for (auto& v : s.amp_) v = a;
  return s;
}

StateVector StateVector::basis_state(uint32_t n, uint64_t index) {
  StateVector s(n);
  s.amp_.at(index) = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& v : amp_) acc += std::norm(v);
  return std::sqrt(acc);
}

void StateVector::assert_normalized(double tol) const {
  if (std::abs(norm() - 1.0) > tol)
    throw std::logic_error("StateVector: norm drifted from 1");
}

void StateVector::normalize() {
  double n = norm();
  if (n == 0) throw std::logic_error("StateVector: cannot normalize zero");
  for (auto& v : amp_) v /= n;
}

bool StateVector::all_finite() const {
  for (const auto& v : amp_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("inner_product: size mismatch");
  cplx acc = 0;
  for (uint64_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double state_distance(const StateVector& a, const StateVector& b) {
  double acc = 0;
  for (uint64_t i = 0; i < a.dim(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

double infidelity(const StateVector& a, const StateVector& b) {
  return 1.0 - std::norm(inner_product(a, b));
}

cplx EmbeddedString::basis_phase(uint64_t s) const {
  int k = static_cast<int>(y_count & 3u);
  if (std::popcount(s & yz_mask) & 1) k += 2;
  return kIPow[k & 3];
}

EmbeddedString embed_string(const PauliString& local,
                            const std::vector<int>& qubits, uint32_t n_total) {
  if (local.n_qubits() != qubits.size())
    throw std::invalid_argument("embed_string: support size mismatch");
  EmbeddedString e;
  for (uint32_t k = 0; k < local.n_qubits(); ++k) {
    int q = qubits[k];
    if (q < 0 || static_cast<uint32_t>(q) >= n_total)
      throw std::invalid_argument("embed_string: qubit index out of range");
    uint64_t bit = uint64_t{1} << (n_total - 1 - q);
    switch (local.letter(k)) {
      case Letter::I: break;
      case Letter::X: e.x_mask |= bit; break;
      case Letter::Y: e.x_mask |= bit; e.yz_mask |= bit; ++e.y_count; break;
      case Letter::Z: e.yz_mask |= bit; break;
    }
  }
  return e;
}

void apply_embedded(const EmbeddedString& s, const StateVector& in,
                    StateVector& out) {
  const uint64_t dim = in.dim();
  const uint64_t xm = s.x_mask;
  for (uint64_t i = 0; i < dim; ++i) out[i ^ xm] = s.basis_phase(i) * in[i];
}

void apply_string_exponential(StateVector& psi, const EmbeddedString& s,
                              double theta) {
  const double c = std::cos(theta);
  const cplx ms = cplx{0, -1} * std::sin(theta);
  const uint64_t dim = psi.dim();
  const uint64_t xm = s.x_mask;
  if (xm == 0) {
    // diagonal string: psi[i] *= (c - i sin * phase(i))
    for (uint64_t i = 0; i < dim; ++i) psi[i] *= c + ms * s.basis_phase(i);
    return;
  }
  for (uint64_t i = 0; i < dim; ++i) {
    uint64_t j = i ^ xm;
    if (j < i) continue;
    cplx ai = psi[i], aj = psi[j];
    psi[j] = c * aj + ms * s.basis_phase(i) * ai;
    psi[i] = c * ai + ms * s.basis_phase(j) * aj;
  }
}

LocalSupport::LocalSupport(const std::vector<int>& qs, uint32_t n)
    : n_total(n), qubits(qs) {
  const uint32_t w = static_cast<uint32_t>(qs.size());
  if (w > kExpSupportCap)
    throw std::invalid_argument("LocalSupport: support cap exceeded");
  uint64_t support_mask = 0;
  std::vector<uint64_t> bit(w);
  for (uint32_t k = 0; k < w; ++k) {
    bit[k] = uint64_t{1} << (n - 1 - qs[k]);
    if (bit[k] & support_mask)
      throw std::invalid_argument("LocalSupport: duplicate qubit");
    support_mask |= bit[k];
  }
  offset.resize(uint64_t{1} << w);
  for (uint64_t p = 0; p < offset.size(); ++p) {
    uint64_t o = 0;
    for (uint32_t k = 0; k < w; ++k)
      if (p & (uint64_t{1} << (w - 1 - k))) o |= bit[k];
    offset[p] = o;
  }
  for (uint32_t b = 0; b < n; ++b) {
    uint64_t v = uint64_t{1} << b;
    if (!(v & support_mask)) comp_bits.push_back(v);
  }
}

void apply_local_unitary(StateVector& psi, const Eigen::MatrixXcd& u,
                         const LocalSupport& sup) {
  const uint32_t w = sup.width();
  const uint64_t m = uint64_t{1} << w;
  if (static_cast<uint64_t>(u.rows()) != m || static_cast<uint64_t>(u.cols()) != m)
    throw std::invalid_argument("apply_local_unitary: dimension mismatch");
  const uint64_t groups = uint64_t{1} << sup.comp_bits.size();
  Eigen::VectorXcd in(m), out(m);
  for (uint64_t g = 0; g < groups; ++g) {
    uint64_t base = 0;
    for (size_t b = 0; b < sup.comp_bits.size(); ++b)
      if (g & (uint64_t{1} << b)) base |= sup.comp_bits[b];
    for (uint64_t p = 0; p < m; ++p) in[p] = psi[base | sup.offset[p]];
    out.noalias() = u * in;
    for (uint64_t p = 0; p < m; ++p) psi[base | sup.offset[p]] = out[p];
  }
}

void accumulate_pauli_sum(const PauliSum& local, const std::vector<int>& qubits,
                          const StateVector& psi, cplx coeff, StateVector& out) {
  for (const auto& [c, s] : local.terms()) {
    EmbeddedString e = embed_string(s, qubits, psi.n_qubits());
    const uint64_t xm = e.x_mask;
    const cplx cc = coeff * c;
    for (uint64_t i = 0; i < psi.dim(); ++i)
      out[i ^ xm] += cc * e.basis_phase(i) * psi[i];
  }
}

double expectation(const StateVector& psi, const PauliSum& local,
                   const std::vector<int>& qubits, double tol) {
  if (!local.is_real(tol))
    throw std::invalid_argument("expectation: operator is not real-Hermitian");
  cplx acc = 0;
  for (const auto& [c, s] : local.terms()) {
    EmbeddedString e = embed_string(s, qubits, psi.n_qubits());
    const uint64_t xm = e.x_mask;
    cplx t = 0;
    for (uint64_t i = 0; i < psi.dim(); ++i)
      t += std::conj(psi[i ^ xm]) * e.basis_phase(i) * psi[i];
    acc += c * t;
  }
  if (std::abs(acc.imag()) > tol)
    throw std::logic_error("expectation: imaginary part above tolerance");
  return acc.real();
}

double expectation(const StateVector& psi, const PauliSum& global, double tol) {
  std::vector<int> qubits(global.n_qubits());
  for (uint32_t q = 0; q < global.n_qubits(); ++q) qubits[q] = q;
  return expectation(psi, global, qubits, tol);
}

void apply_exponential(StateVector& psi, const PauliSum& generator,
                       const std::vector<int>& qubits, double theta) {
  if (!generator.is_real())
    throw std::invalid_argument("apply_exponential: generator must be real");
  if (qubits.size() > kExpSupportCap)
    throw std::invalid_argument("apply_exponential: support cap exceeded");
  if (generator.empty() || theta == 0.0) return;
  if (generator.size() == 1) {
    const auto& [c, s] = generator.terms()[0];
    EmbeddedString e = embed_string(s, qubits, psi.n_qubits());
    apply_string_exponential(psi, e, theta * c.real());
    return;
  }
  LocalSupport sup(qubits, psi.n_qubits());
  Eigen::MatrixXcd g = dense_matrix(generator, kExpSupportCap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  Eigen::VectorXcd phases =
      (cplx{0, -1} * theta * es.eigenvalues().array()).exp();
  Eigen::MatrixXcd u = es.eigenvectors() * phases.asDiagonal() *
                       es.eigenvectors().adjoint();
  apply_local_unitary(psi, u, sup);
}

}  // namespace symqite
