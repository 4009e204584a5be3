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

#include "symqite/varqite.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace symqite {

void EvolutionConfig::validate() const {
  if (delta_tau <= 0)
    throw std::invalid_argument("EvolutionConfig: delta_tau must be > 0");
  if (tau_max < 0)
    throw std::invalid_argument("EvolutionConfig: tau_max must be >= 0");
  if (noise_sigma < 0)
    throw std::invalid_argument("EvolutionConfig: noise_sigma must be >= 0");
  if (svd_cutoff < 0)
    throw std::invalid_argument("EvolutionConfig: svd_cutoff must be >= 0");
}

MVPair compute_M_V(const CompiledAnsatz& ca, const Eigen::VectorXd& theta,
                   const PauliSum& h_global, const StateVector& psi0) {
  StateVector phi;
  std::vector<StateVector> dphi;
  ca.derivatives(theta, psi0, phi, dphi);
  const int np = ca.n_params();
  const uint64_t dim = phi.dim();

  Eigen::MatrixXcd d(dim, np);
  for (int k = 0; k < np; ++k)
    d.col(k) = Eigen::Map<const Eigen::VectorXcd>(dphi[k].data(), dim);

  StateVector hphi(phi.n_qubits());
  std::vector<int> all_qubits(phi.n_qubits());
  for (uint32_t q = 0; q < phi.n_qubits(); ++q) all_qubits[q] = q;
  accumulate_pauli_sum(h_global, all_qubits, phi, 1.0, hphi);
  Eigen::Map<const Eigen::VectorXcd> hv(hphi.data(), dim);

  MVPair mv;
  mv.m = (d.adjoint() * d).real();
  mv.m = 0.5 * (mv.m + mv.m.transpose()).eval();
  mv.v = -(d.adjoint() * hv).real();
  return mv;
}

MVPair compute_M_V(const Ansatz& a, const Eigen::VectorXd& theta,
                   const PauliSum& h_global, const StateVector& psi0) {
  return compute_M_V(CompiledAnsatz(a), theta, h_global, psi0);
}

void add_noise(MVPair& mv, double sigma, std::mt19937_64& rng) {
  if (sigma < 0) throw std::invalid_argument("add_noise: sigma must be >= 0");
  if (sigma == 0) return;
  std::normal_distribution<double> gauss(0.0, sigma);
  for (Eigen::Index i = 0; i < mv.m.rows(); ++i)
    for (Eigen::Index j = 0; j < mv.m.cols(); ++j) mv.m(i, j) += gauss(rng);
  mv.m = 0.5 * (mv.m + mv.m.transpose()).eval();
  for (Eigen::Index i = 0; i < mv.v.size(); ++i) mv.v[i] += gauss(rng);
}

SolveResult solve_step(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                       double svd_cutoff) {
  PinvSolution sol = pinv_solve(m, v, svd_cutoff);
  return {std::move(sol.x), sol.rank, sol.residual, sol.all_truncated};
}

EvolutionTrace evolve(const Ansatz& a, const EvolutionConfig& cfg,
                      const PauliSum& h_global) {
  cfg.validate();
  if (a.initial_state != "plus")
    throw std::invalid_argument("evolve: unsupported initial state tag");
  const int steps = static_cast<int>(std::llround(cfg.tau_max / cfg.delta_tau));

  CompiledAnsatz ca(a);
  StateVector psi0 = StateVector::plus_state(a.n_qubits);
  std::mt19937_64 rng(cfg.rng_seed);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(a.n_params);

  std::vector<int> all_qubits(a.n_qubits);
  for (int q = 0; q < a.n_qubits; ++q) all_qubits[q] = q;

  EvolutionTrace trace;
  trace.n_observables = cfg.observables.size();
  trace.rows.reserve(steps + 1);

  for (int k = 0; k <= steps; ++k) {
    if (!theta.allFinite()) {
      trace.aborted = true;
      break;
    }
    MVPair mv = compute_M_V(ca, theta, h_global, psi0);
    if (cfg.noise_sigma > 0) add_noise(mv, cfg.noise_sigma, rng);
    SolveResult sol = solve_step(mv.m, mv.v, cfg.svd_cutoff);

    StateVector phi = ca.run(theta, psi0);
    phi.assert_normalized(1e-9);
    TraceRow row;
    row.tau = k * cfg.delta_tau;
    row.beta = 2.0 * row.tau;
    row.energy = expectation(phi, h_global);
    row.residual = sol.residual;
    row.rank = sol.rank;
    for (const auto& o : cfg.observables)
      row.observables.push_back(expectation(phi, o));
    row.theta = theta;
    trace.rows.push_back(std::move(row));

    if (k < steps) theta += cfg.delta_tau * sol.theta_dot;
  }
  return trace;
}

namespace {
std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}
}  // namespace

void write_trace_csv(const EvolutionTrace& trace, std::ostream& os) {
  os << "tau,beta,energy,residual,rank";
  for (size_t i = 0; i < trace.n_observables; ++i) os << ",obs" << i;
  const size_t np =
      trace.rows.empty() ? 0 : static_cast<size_t>(trace.rows[0].theta.size());
  for (size_t i = 0; i < np; ++i) os << ",theta" << i;
  os << "\n";
  for (const auto& r : trace.rows) {
    os << fmt12(r.tau) << ',' << fmt12(r.beta) << ',' << fmt12(r.energy) << ','
       << fmt12(r.residual) << ',' << r.rank;
    for (double o : r.observables) os << ',' << fmt12(o);
    for (Eigen::Index i = 0; i < r.theta.size(); ++i)
      os << ',' << fmt12(r.theta[i]);
    os << "\n";
  }
}

std::string trace_csv(const EvolutionTrace& trace) {
  std::ostringstream ss;
  write_trace_csv(trace, ss);
  return ss.str();
}

}  // namespace symqite
