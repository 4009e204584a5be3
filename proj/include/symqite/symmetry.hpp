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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symqite/pauli.hpp"

namespace symqite {

/// Angles at which a continuous U(1) family is sampled when intersecting
/// fixed spaces, and the disjoint sample used to verify the result.
inline constexpr std::array<double, 4> kU1SolveAngles = {
    2.0 * M_PI / 7.0, 4.0 * M_PI / 7.0, 6.0 * M_PI / 7.0, 1.0};
inline constexpr std::array<double, 4> kU1VerifyAngles = {
    2.0 * M_PI / 11.0, 6.0 * M_PI / 11.0, 10.0 * M_PI / 11.0, 0.37};

/// One symmetry group generator acting on a small qubit register, in one of
/// four shapes: a dense unitary, a basis permutation with per-state phases,
/// the anti-unitary complex conjugation, or the continuous diagonal family
/// alpha -> diag(e^{i |x| alpha}).
class SymmetryGenerator {
 public:
  enum class Kind { DenseUnitary, Permutation, Conjugation, U1Family };

  static SymmetryGenerator dense_unitary(Eigen::MatrixXcd u, std::string label);
  static SymmetryGenerator permutation(uint32_t n_qubits,
                                       std::vector<uint32_t> perm,
                                       std::vector<cplx> phase,
                                       std::string label);
  static SymmetryGenerator conjugation(uint32_t n_qubits);
  static SymmetryGenerator u1_family(uint32_t n_qubits);

  Kind kind() const { return kind_; }
  uint32_t n_qubits() const { return n_; }
  const std::string& label() const { return label_; }
  /// +1 for unitary kinds, -1 for the anti-unitary conjugation.
  double xi() const { return kind_ == Kind::Conjugation ? -1.0 : 1.0; }
  bool is_continuous() const { return kind_ == Kind::U1Family; }

  const Eigen::MatrixXcd& unitary() const { return dense_; }
  const std::vector<uint32_t>& perm() const { return perm_; }
  const std::vector<cplx>& phase() const { return phase_; }

  /// U|x> for basis index x (Permutation and U1Family kinds; the latter needs
  /// the angle).
  std::pair<uint64_t, cplx> map_basis(uint64_t x, double alpha = 0.0) const;

 private:
  Kind kind_;
  uint32_t n_ = 0;
  std::string label_;
  Eigen::MatrixXcd dense_;
  std::vector<uint32_t> perm_;
  std::vector<cplx> phase_;
};

/// Adjoint action of one generator expressed on an explicit Pauli basis:
/// row i holds the coefficients of U^-1 sigma_i U (or K sigma_i K^-1).
/// Real and orthogonal for unitary generators.
struct CMatrix {
  Eigen::MatrixXd entries;
  std::vector<PauliString> basis;
  double max_realness_error = 0.0;

  bool is_orthogonal(double tol = 1e-10) const;
};

/// Computes the c-matrix; `alpha` selects the angle for U1Family generators.
/// Throws std::runtime_error if the basis is not closed under the action.
CMatrix c_matrix(const SymmetryGenerator& g,
                 const std::vector<PauliString>& basis, double alpha = 0.0);

/// Canonical basis of a symmetry-constrained space of real Pauli
/// combinations. Elements are in reduced row echelon form over the
/// lexicographic string order: each has leading coefficient +1 on its pivot
/// string and zeros on all other pivots.
struct GeneratorBasis {
  std::vector<PauliSum> elements;
  std::string provenance;

  size_t size() const { return elements.size(); }
  /// Sorted union of the strings appearing across all elements ("relevant
  /// Pauli strings").
  std::vector<PauliString> support_strings() const;
  /// True iff v (coefficients over `basis`) lies in the span of the elements
  /// within tol, measured in the infinity norm of the residual.
  bool contains(const PauliSum& v, double tol = 1e-9) const;
};

/// Spanning set of the intersection of ker(c^(g) - xi_g I) over all
/// generators. U1Family generators contribute blocks at kU1SolveAngles and
/// the result is re-verified against kU1VerifyAngles. Throws on an empty
/// basis or a basis that is not closed under some generator.
GeneratorBasis solve_constraints(const std::vector<SymmetryGenerator>& gens,
                                 const std::vector<PauliString>& basis);

/// Strings with an odd number of Y letters (the time-reversal constraint).
std::vector<PauliString> tr_filter(const std::vector<PauliString>& basis);

/// Checks c^(g) a0 = xi_g a0 within tol (infinity norm) for every generator.
bool verify_fixed_point(const Eigen::VectorXd& a0,
                        const std::vector<SymmetryGenerator>& gens,
                        const std::vector<PauliString>& basis,
                        double tol = 1e-8);

/// Removes any component along the all-identity string and re-canonicalizes.
GeneratorBasis exclude_identity(const GeneratorBasis& gb);

/// Coefficient vector of a PauliSum over an explicit basis. Throws if the
/// sum has a term outside the basis.
Eigen::VectorXd coefficient_vector(const PauliSum& s,
                                   const std::vector<PauliString>& basis);

/// Unique RREF basis of the column span of an orthonormal matrix (columns =
/// nullspace vectors). Exposed for reuse by exclude_identity and tests.
std::vector<Eigen::VectorXd> rref_canonical_basis(const Eigen::MatrixXd& ns,
                                                  double pivot_tol = 1e-6,
                                                  double round_tol = 1e-9);

/// Orthonormal basis (columns) of the common nullspace of the stacked
/// blocks, with a relative singular-value cutoff.
Eigen::MatrixXd stacked_nullspace(const std::vector<Eigen::MatrixXd>& blocks,
                                  double cutoff = 1e-9);

}  // namespace symqite
