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

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symqite/ansatz.hpp"
#include "symqite/linear_solve.hpp"
#include "symqite/simulate.hpp"
#include "symqite/statevector.hpp"

namespace symqite {

struct EvolutionConfig {
  double delta_tau = 0.01;
  double tau_max = 1.0;
  double svd_cutoff = 1e-8;   // relative eigenvalue threshold
  double noise_sigma = 0.0;   // stddev of per-entry Gaussian noise
  uint64_t rng_seed = 0;
  std::vector<PauliSum> observables;  // global operators traced per step

  void validate() const;
};

struct TraceRow {
  double tau = 0.0;
  double beta = 0.0;  // 2 * tau
  double energy = 0.0;
  double residual = 0.0;
  int rank = 0;
  std::vector<double> observables;
  Eigen::VectorXd theta;
};

struct EvolutionTrace {
  std::vector<TraceRow> rows;
  size_t n_observables = 0;
  bool aborted = false;  // non-finite parameters encountered
};

struct MVPair {
  Eigen::MatrixXd m;
  Eigen::VectorXd v;
};

/// McLachlan system at theta: M_ij = Re<d_i phi|d_j phi>,
/// V_i = -Re<d_i phi|H|phi>, from exact statevector derivatives.
MVPair compute_M_V(const CompiledAnsatz& ca, const Eigen::VectorXd& theta,
                   const PauliSum& h_global, const StateVector& psi0);
MVPair compute_M_V(const Ansatz& a, const Eigen::VectorXd& theta,
                   const PauliSum& h_global, const StateVector& psi0);

/// Adds independent N(0, sigma^2) to every entry; M is re-symmetrized as
/// (A + A^T)/2. Draw order is fixed (M row-major, then V).
void add_noise(MVPair& mv, double sigma, std::mt19937_64& rng);

struct SolveResult {
  Eigen::VectorXd theta_dot;
  int rank = 0;
  double residual = 0.0;
  bool all_truncated = false;
};

/// theta_dot from the rank-truncated pseudo-inverse of M.
SolveResult solve_step(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                       double svd_cutoff);

/// Euler integration theta(tau + dtau) = theta(tau) + theta_dot * dtau from
/// theta(0) = 0, recording a trace row at every tau including tau_max.
EvolutionTrace evolve(const Ansatz& a, const EvolutionConfig& cfg,
                      const PauliSum& h_global);

/// Fixed-header CSV: tau, beta, energy, residual, rank, observables, theta.
void write_trace_csv(const EvolutionTrace& trace, std::ostream& os);
std::string trace_csv(const EvolutionTrace& trace);

}  // namespace symqite
