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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symqite/pauli.hpp"
#include "symqite/symmetry.hpp"

namespace symqite {

enum class Boundary { Open, Periodic };

/// Small 2d square lattice. Nodes are indexed row-major (node = y*Lx + x);
/// links are directed node -> node + mu_hat, listed horizontal-first then
/// vertical, each block row-major.
struct Lattice {
  int lx = 2;
  int ly = 2;
  Boundary boundary = Boundary::Open;

  int n_nodes() const { return lx * ly; }
  int node(int x, int y) const { return y * lx + x; }
  int neighbor(int n, int dir) const;  // dir 0 = +x, 1 = +y; -1 if open edge

  /// Unique unordered nearest-neighbor pairs, sorted by (min, max).
  std::vector<std::pair<int, int>> bonds() const;

  struct Link {
    int from = 0;
    int to = 0;
    int dir = 0;
  };
  std::vector<Link> links() const;
  int link_index(int node, int dir) const;  // -1 if absent

  /// Elementary 4-link cycles [mu(n), nu(n+x), mu(n+y), nu(n)]; the first two
  /// enter the plaquette angle with + sign, the last two with -.
  struct Plaquette {
    int base_node = 0;
    std::array<int, 4> links{};
  };
  std::vector<Plaquette> plaquettes() const;
};

enum class ModelKind { Ising, Potts, Clock, Gauge, Hopping };
enum class HoppingEncoding { Real, Imaginary };

/// Which statistical model to build, with Q = 2^P states per node (or link).
/// Hopping uses a 1d chain of single-qubit sites (ly must be 1).
struct ModelSpec {
  ModelKind kind = ModelKind::Ising;
  int q = 2;
  Lattice lattice;
  HoppingEncoding encoding = HoppingEncoding::Real;

  void validate() const;  // throws std::invalid_argument
  int qubits_per_register() const;
  int n_registers() const;
  int n_qubits() const;
  std::vector<int> register_qubits(int reg) const;
  std::string name() const;
};

ModelKind model_kind_from_string(const std::string& s);
std::string to_string(ModelKind k);

/// One local interaction term: a real-Hermitian operator on a few registers.
struct LocalTerm {
  PauliSum op_local;           // on qubits.size() local qubits
  std::vector<int> registers;  // node/link/site ids, term order
  std::vector<int> qubits;     // global qubit indices, term order
  std::string label;
};

std::vector<LocalTerm> build_hamiltonian(const ModelSpec& spec);

/// Sum of all local terms embedded on the full register.
PauliSum hamiltonian_sum(const ModelSpec& spec,
                         const std::vector<LocalTerm>& terms);
PauliString embed_to_global(const PauliString& local,
                            const std::vector<int>& qubits, uint32_t n_total);
PauliSum embed_to_global(const PauliSum& local, const std::vector<int>& qubits,
                         uint32_t n_total);

/// A symmetry of the full model, stored as its action per register so it can
/// be restricted to any term's support. Registers without an entry are acted
/// on trivially.
struct ModelSymmetry {
  enum class Kind { RegisterPermutation, Conjugation, U1 };
  Kind kind = Kind::RegisterPermutation;
  std::string label;
  std::map<int, std::vector<uint32_t>> register_perms;  // state relabelings
};

std::vector<ModelSymmetry> build_symmetry_generators(const ModelSpec& spec);

/// Restriction of a model symmetry to one term's registers, as a local
/// generator on the term's qubits.
SymmetryGenerator restrict_to_term(const ModelSymmetry& ms,
                                   const ModelSpec& spec,
                                   const LocalTerm& term);

/// Basis-state action of the full (unrestricted) symmetry operator:
/// U|s> = phase[s] |target[s]>. For U1 the angle must be supplied.
struct GlobalAction {
  std::vector<uint64_t> target;
  std::vector<cplx> phase;
};
GlobalAction global_action(const ModelSymmetry& ms, const ModelSpec& spec,
                           double alpha = 0.0);

enum class ReductionMode { None, TrOnly, InternalPlusTr, SymmetricCombo };

ReductionMode reduction_mode_from_string(const std::string& s);
std::string to_string(ReductionMode m);

/// Per-term generator bases for the requested reduction.
///
/// InternalPlusTr solves the full constraint set and keeps one single-string
/// element per relevant Pauli string (the strings not forced to zero), which
/// is the per-string parameterization the statistical models use; the hopping
/// model keeps the linear combinations themselves since its continuous
/// symmetry admits no string-aligned basis. SymmetricCombo keeps the
/// combinations for every model (each element then commutes with all internal
/// generators). TrOnly keeps all odd-Y strings; None keeps every non-identity
/// string (guarded to at most 4-qubit terms).
std::vector<GeneratorBasis> relevant_basis(const ModelSpec& spec,
                                           ReductionMode mode);

}  // namespace symqite
