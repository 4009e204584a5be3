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

#include <Eigen/Dense>

#include "symqite/ansatz.hpp"
#include "symqite/statevector.hpp"

namespace symqite {

/// Ansatz with per-block application machinery precomputed: embedded string
/// masks for single-string generators and eigendecompositions of the local
/// dense generator for multi-string ones.
class CompiledAnsatz {
 public:
  explicit CompiledAnsatz(const Ansatz& a);

  const Ansatz& ansatz() const { return *ansatz_; }
  int n_params() const { return ansatz_->n_params; }

  /// psi <- exp(-i theta G_k) psi.
  void apply_block(int k, double theta, StateVector& psi) const;
  /// out = G_k * psi (out is overwritten).
  void apply_generator(int k, const StateVector& psi, StateVector& out) const;

  StateVector run(const Eigen::VectorXd& theta, const StateVector& psi0) const;

  /// phi(theta) and all unnormalized derivative states d|phi>/d theta_k.
  void derivatives(const Eigen::VectorXd& theta, const StateVector& psi0,
                   StateVector& phi, std::vector<StateVector>& dphi) const;

 private:
  struct Block {
    bool single = false;
    double coeff = 0.0;       // single-string: exp(-i theta coeff sigma)
    EmbeddedString str;       // single-string path
    LocalSupport support;     // multi-string path
    Eigen::MatrixXcd evecs;
    Eigen::VectorXd evals;
    std::vector<std::pair<cplx, EmbeddedString>> terms;  // generator action
  };
  const Ansatz* ansatz_;
  std::vector<Block> blocks_;
};

/// Applies the ansatz blocks in declared order. theta size must match.
StateVector run_ansatz(const Ansatz& a, const Eigen::VectorXd& theta,
                       const StateVector& psi0);

/// Unnormalized d|phi(theta)>/d theta_k, computed by inserting -i G_k right
/// after block k during a sweep.
StateVector derivative_state(const Ansatz& a, const Eigen::VectorXd& theta,
                             int k, const StateVector& psi0);

/// Gate-level simulation of a compiled circuit (rotations and CNOTs).
void apply_gate_list(const GateList& gl, const Eigen::VectorXd& theta,
                     StateVector& psi);

}  // namespace symqite
