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
#include <string>
#include <vector>

#include "symqite/lattice.hpp"
#include "symqite/pauli.hpp"
#include "symqite/symmetry.hpp"

namespace symqite {

/// One parameterized exponential exp(-i theta * G) on a local support.
struct AnsatzBlock {
  PauliSum generator;       // on qubits.size() local qubits, real-Hermitian
  std::vector<int> qubits;  // global support
  int param = 0;
  int term = 0;
  int layer = 0;
};

/// Layered ladder-ordered sequence of parameterized exponentials. Blocks are
/// applied first-to-last; each owns a distinct parameter.
struct Ansatz {
  int n_qubits = 0;
  int layers = 0;
  int n_params = 0;
  std::string initial_state = "plus";
  std::vector<AnsatzBlock> blocks;
};

/// Assembles L layers of per-term exponentials. Terms are laddered by
/// (min qubit, max qubit) of their support; within a term the canonical
/// GeneratorBasis order is kept. Throws if any term has an empty basis.
Ansatz build_ansatz(const std::vector<LocalTerm>& terms,
                    const std::vector<GeneratorBasis>& bases, int layers,
                    int n_qubits);

struct Gate {
  enum class Type { RX, RY, RZ, CNOT };
  Type type = Type::RZ;
  int q0 = 0;             // rotation qubit / control
  int q1 = 0;             // target (CNOT only)
  double angle = 0.0;     // fixed part
  int param = -1;         // parameter index, -1 for fixed gates
  double scale = 0.0;     // effective angle = angle + scale * theta[param]
};

struct GateList {
  std::vector<Gate> gates;
  int cnot_count = 0;
};

/// Thrown by compile_naive when a block generator is a multi-string
/// combination; those are applied as exact local exponentials by the
/// simulator instead of being compiled to gates.
struct NotNaiveCompilable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Textbook decomposition of each single-string exponential: basis-change
/// rotations, a CNOT ladder onto the last support qubit, RZ(2 theta), and the
/// mirrored ladder and basis changes. Costs 2(w-1) CNOTs per weight-w string.
GateList compile_naive(const Ansatz& a);

struct CountsReport {
  int n_params = 0;
  std::optional<int> naive_cnots;  // absent when not naive-compilable
};

CountsReport counts_report(const Ansatz& a);

}  // namespace symqite
