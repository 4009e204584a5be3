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

#include "symqite/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace symqite {

CompiledAnsatz::CompiledAnsatz(const Ansatz& a) : ansatz_(&a) {
  blocks_.reserve(a.blocks.size());
  const uint32_t n = static_cast<uint32_t>(a.n_qubits);
  for (const auto& ab : a.blocks) {
    Block b;
    if (!ab.generator.is_real())
      throw std::invalid_argument("CompiledAnsatz: generator must be real");
    for (const auto& [c, s] : ab.generator.terms())
      b.terms.emplace_back(c, embed_string(s, ab.qubits, n));
    if (ab.generator.size() == 1) {
      b.single = true;
      b.coeff = ab.generator.terms()[0].first.real();
      b.str = b.terms[0].second;
    } else {
      b.support = LocalSupport(ab.qubits, n);
      Eigen::MatrixXcd g = dense_matrix(ab.generator, kExpSupportCap);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
      b.evecs = es.eigenvectors();
      b.evals = es.eigenvalues();
    }
    blocks_.push_back(std::move(b));
  }
}

void CompiledAnsatz::apply_block(int k, double theta, StateVector& psi) const {
  const Block& b = blocks_[k];
  if (b.single) {
    apply_string_exponential(psi, b.str, theta * b.coeff);
    return;
  }
  Eigen::VectorXcd phases =
      (cplx{0, -1} * theta * b.evals.array()).exp();
  Eigen::MatrixXcd u = b.evecs * phases.asDiagonal() * b.evecs.adjoint();
  apply_local_unitary(psi, u, b.support);
}

void CompiledAnsatz::apply_generator(int k, const StateVector& psi,
                                     StateVector& out) const {
  const Block& b = blocks_[k];
  for (uint64_t i = 0; i < out.dim(); ++i) out[i] = 0;
  for (const auto& [c, e] : b.terms) {
    const uint64_t xm = e.x_mask;
    for (uint64_t i = 0; i < psi.dim(); ++i)
      out[i ^ xm] += c * e.basis_phase(i) * psi[i];
  }
}

StateVector CompiledAnsatz::run(const Eigen::VectorXd& theta,
                                const StateVector& psi0) const {
  if (theta.size() != ansatz_->n_params)
    throw std::invalid_argument("run: parameter count mismatch");
  StateVector psi = psi0;
  for (size_t k = 0; k < blocks_.size(); ++k)
    apply_block(static_cast<int>(k), theta[ansatz_->blocks[k].param], psi);
  return psi;
}

void CompiledAnsatz::derivatives(const Eigen::VectorXd& theta,
                                 const StateVector& psi0, StateVector& phi,
                                 std::vector<StateVector>& dphi) const {
  if (theta.size() != ansatz_->n_params)
    throw std::invalid_argument("derivatives: parameter count mismatch");
  const size_t nb = blocks_.size();
  // Forward states after each block.
  std::vector<StateVector> fwd(nb + 1);
  fwd[0] = psi0;
  for (size_t k = 0; k < nb; ++k) {
    fwd[k + 1] = fwd[k];
    apply_block(static_cast<int>(k), theta[ansatz_->blocks[k].param],
                fwd[k + 1]);
  }
  phi = fwd[nb];

  dphi.assign(ansatz_->n_params, StateVector());
  StateVector work(psi0.n_qubits());
  for (size_t k = 0; k < nb; ++k) {
    apply_generator(static_cast<int>(k), fwd[k + 1], work);
    StateVector d = work;
    for (uint64_t i = 0; i < d.dim(); ++i) d[i] *= cplx{0, -1};
    for (size_t j = k + 1; j < nb; ++j)
      apply_block(static_cast<int>(j), theta[ansatz_->blocks[j].param], d);
    dphi[ansatz_->blocks[k].param] = std::move(d);
  }
}

StateVector run_ansatz(const Ansatz& a, const Eigen::VectorXd& theta,
                       const StateVector& psi0) {
  return CompiledAnsatz(a).run(theta, psi0);
}

StateVector derivative_state(const Ansatz& a, const Eigen::VectorXd& theta,
                             int k, const StateVector& psi0) {
  if (k < 0 || k >= a.n_params)
    throw std::out_of_range("derivative_state: parameter index");
  CompiledAnsatz ca(a);
  StateVector phi;
  std::vector<StateVector> dphi;
  ca.derivatives(theta, psi0, phi, dphi);
  return dphi[k];
}

void apply_gate_list(const GateList& gl, const Eigen::VectorXd& theta,
                     StateVector& psi) {
  const uint32_t n = psi.n_qubits();
  for (const auto& g : gl.gates) {
    double angle = g.angle;
    if (g.param >= 0) {
      if (g.param >= theta.size())
        throw std::invalid_argument("apply_gate_list: missing parameter");
      angle += g.scale * theta[g.param];
    }
    if (g.type == Gate::Type::CNOT) {
      const uint64_t cb = uint64_t{1} << (n - 1 - g.q0);
      const uint64_t tb = uint64_t{1} << (n - 1 - g.q1);
      for (uint64_t i = 0; i < psi.dim(); ++i)
        if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
      continue;
    }
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const uint64_t qb = uint64_t{1} << (n - 1 - g.q0);
    switch (g.type) {
      case Gate::Type::RX:
        for (uint64_t i = 0; i < psi.dim(); ++i) {
          if (i & qb) continue;
          cplx a0 = psi[i], a1 = psi[i | qb];
          psi[i] = c * a0 + cplx{0, -s} * a1;
          psi[i | qb] = cplx{0, -s} * a0 + c * a1;
        }
        break;
      case Gate::Type::RY:
        for (uint64_t i = 0; i < psi.dim(); ++i) {
          if (i & qb) continue;
          cplx a0 = psi[i], a1 = psi[i | qb];
          psi[i] = c * a0 - s * a1;
          psi[i | qb] = s * a0 + c * a1;
        }
        break;
      case Gate::Type::RZ:
        for (uint64_t i = 0; i < psi.dim(); ++i)
          psi[i] *= (i & qb) ? cplx{c, s} : cplx{c, -s};
        break;
      case Gate::Type::CNOT:
        break;
    }
  }
}

}  // namespace symqite
