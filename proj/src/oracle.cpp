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

#include "symqite/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "symqite/linear_solve.hpp"

namespace symqite {

PinvSolution pinv_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                        double rel_cutoff) {
  if (m.rows() != m.cols() || m.rows() != v.size())
    throw std::invalid_argument("pinv_solve: shape mismatch");
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  const auto& d = es.eigenvalues();
  const double dmax = d.size() ? d[d.size() - 1] : 0.0;
  const double cutoff = rel_cutoff * dmax;

  PinvSolution out;
  out.x = Eigen::VectorXd::Zero(v.size());
  if (dmax <= 0.0) {
    out.all_truncated = true;
    out.residual = v.norm();
    return out;
  }
  for (Eigen::Index j = 0; j < d.size(); ++j) {
    if (d[j] > cutoff) {
      out.x += (es.eigenvectors().col(j).dot(v) / d[j]) *
               es.eigenvectors().col(j);
      ++out.rank;
    }
  }
  out.all_truncated = (out.rank == 0);
  out.residual = (sym * out.x - v).norm();
  return out;
}

ExactHamiltonian::ExactHamiltonian(const PauliSum& h_global, uint32_t cap)
    : n_(h_global.n_qubits()) {
  if (n_ > cap)
    throw std::invalid_argument("ExactHamiltonian: qubit cap exceeded");
  if (!h_global.is_real())
    throw std::invalid_argument("ExactHamiltonian: H must be real-Hermitian");
  Eigen::MatrixXcd h = dense_matrix(h_global, cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();
}

StateVector ExactHamiltonian::exact_qite(const StateVector& psi0,
                                         double tau) const {
  if (psi0.n_qubits() != n_)
    throw std::invalid_argument("exact_qite: qubit count mismatch");
  if (tau < 0) throw std::invalid_argument("exact_qite: tau must be >= 0");
  const uint64_t dim = psi0.dim();
  Eigen::Map<const Eigen::VectorXcd> v0(psi0.data(), dim);
  Eigen::VectorXcd coords = evecs_.adjoint() * v0;
  const double e0 = evals_[0];
  for (Eigen::Index j = 0; j < coords.size(); ++j)
    coords[j] *= std::exp(-tau * (evals_[j] - e0));
  Eigen::VectorXcd res = evecs_ * coords;
  StateVector out(n_);
  for (uint64_t i = 0; i < dim; ++i) out[i] = res[i];
  out.normalize();
  return out;
}

double ExactHamiltonian::gibbs_expectation(const PauliSum& o,
                                           double beta) const {
  if (beta < 0) throw std::invalid_argument("gibbs_expectation: beta >= 0");
  if (o.n_qubits() != n_)
    throw std::invalid_argument("gibbs_expectation: qubit count mismatch");
  Eigen::MatrixXcd od = dense_matrix(o);
  const double e0 = evals_[0];
  double z = 0.0, acc = 0.0;
  for (Eigen::Index j = 0; j < evals_.size(); ++j) {
    const double w = std::exp(-beta * (evals_[j] - e0));
    z += w;
    acc += w * std::real(evecs_.col(j).dot(od * evecs_.col(j)));
  }
  return acc / z;
}

GeneratorBasis full_string_pool(const LocalTerm& term) {
  GeneratorBasis gb;
  gb.provenance = "full";
  for (const auto& s : full_basis(static_cast<uint32_t>(term.qubits.size())))
    gb.elements.emplace_back(s);
  return gb;
}

DetQiteStep detqite_step(const LocalTerm& term, const StateVector& psi,
                         double dtau, const GeneratorBasis& pool,
                         double svd_cutoff) {
  const size_t np = pool.elements.size();
  if (np == 0) throw std::invalid_argument("detqite_step: empty pool");
  const uint32_t n = psi.n_qubits();

  // G_i |psi> for every pool element.
  std::vector<StateVector> gp(np, StateVector(n));
  for (size_t i = 0; i < np; ++i)
    accumulate_pauli_sum(pool.elements[i], term.qubits, psi, 1.0, gp[i]);
  StateVector hp(n);
  accumulate_pauli_sum(term.op_local, term.qubits, psi, 1.0, hp);

  Eigen::MatrixXd m(np, np);
  Eigen::VectorXd v(np);
  for (size_t i = 0; i < np; ++i) {
    for (size_t j = i; j < np; ++j) {
      double re = inner_product(gp[i], gp[j]).real();
      m(i, j) = re;
      m(j, i) = re;
    }
    v[i] = inner_product(gp[i], hp).imag();
  }

  PinvSolution sol = pinv_solve(m, v, svd_cutoff);
  DetQiteStep out;
  out.a = sol.x;
  out.rank = sol.rank;
  out.psi = psi;
  for (size_t i = 0; i < np; ++i) {
    if (out.a[i] != 0.0)
      apply_exponential(out.psi, pool.elements[i], term.qubits,
                        dtau * out.a[i]);
  }
  return out;
}

DetQiteRun detqite_run(const std::vector<LocalTerm>& terms,
                       const StateVector& psi0, double tau, double dtau,
                       const std::vector<GeneratorBasis>& pools,
                       double svd_cutoff) {
  if (terms.size() != pools.size())
    throw std::invalid_argument("detqite_run: terms/pools size mismatch");
  if (dtau <= 0) throw std::invalid_argument("detqite_run: dtau must be > 0");
  const double raw = tau / dtau;
  const int sweeps = static_cast<int>(std::llround(raw));

  DetQiteRun out;
  out.sweeps = sweeps;
  out.rounded = std::abs(raw - sweeps) > 1e-9;
  out.psi = psi0;
  out.coefficients.reserve(sweeps);
  for (int s = 0; s < sweeps; ++s) {
    std::vector<Eigen::VectorXd> per_term;
    per_term.reserve(terms.size());
    for (size_t t = 0; t < terms.size(); ++t) {
      DetQiteStep step = detqite_step(terms[t], out.psi, dtau, pools[t],
                                      svd_cutoff);
      out.psi = std::move(step.psi);
      per_term.push_back(std::move(step.a));
    }
    out.coefficients.push_back(std::move(per_term));
  }
  return out;
}

}  // namespace symqite
