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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "symqite/lattice.hpp"
#include "symqite/pauli.hpp"
#include "symqite/statevector.hpp"
#include "symqite/symmetry.hpp"

namespace symqite {

/// Cached dense eigendecomposition of a Hamiltonian, the workhorse behind
/// exact imaginary-time propagation and Gibbs traces.
class ExactHamiltonian {
 public:
  explicit ExactHamiltonian(const PauliSum& h_global,
                            uint32_t cap = kDenseQubitCap);

  uint32_t n_qubits() const { return n_; }
  const Eigen::VectorXd& eigenvalues() const { return evals_; }
  double ground_energy() const { return evals_[0]; }

  /// e^{-tau H} psi0, normalized. Spectrum-shifted so large tau is stable.
  StateVector exact_qite(const StateVector& psi0, double tau) const;

  /// Tr(O e^{-beta H}) / Tr(e^{-beta H}).
  double gibbs_expectation(const PauliSum& o, double beta) const;

 private:
  uint32_t n_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
};

struct DetQiteStep {
  Eigen::VectorXd a;  // solved coefficients, one per pool element
  StateVector psi;    // state after applying the pool exponentials
  int rank = 0;
};

/// One deterministic QITE step for a local term: build M_ij = Re<psi|G_i
/// G_j|psi> and V_i = Im<psi|G_i H_m|psi> exactly, solve by pseudo-inverse,
/// and apply prod_i exp(-i dtau a_i G_i) in pool order.
DetQiteStep detqite_step(const LocalTerm& term, const StateVector& psi,
                         double dtau, const GeneratorBasis& pool,
                         double svd_cutoff = 1e-8);

struct DetQiteRun {
  StateVector psi;
  int sweeps = 0;
  bool rounded = false;  // tau/dtau was not near-integer
  /// Solved coefficient vectors per (sweep, term), for symmetry checks.
  std::vector<std::vector<Eigen::VectorXd>> coefficients;
};

/// Trotter sweeps of detqite_step over all terms, tau/dtau times.
DetQiteRun detqite_run(const std::vector<LocalTerm>& terms,
                       const StateVector& psi0, double tau, double dtau,
                       const std::vector<GeneratorBasis>& pools,
                       double svd_cutoff = 1e-8);

/// Full single-term pool: every string on the term's support (identity
/// included; its coefficient is zero for symmetric states, and it only
/// shifts the global phase).
GeneratorBasis full_string_pool(const LocalTerm& term);

}  // namespace symqite
