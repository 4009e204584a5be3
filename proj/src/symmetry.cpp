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

#include "symqite/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace symqite {

namespace {

constexpr double kRealnessTol = 1e-10;
constexpr double kClosureTol = 1e-8;
constexpr double kNullspaceCutoff = 1e-9;

// Column-sparse view of U^-1 sigma U for a permutation-with-phase U:
// column y has its single nonzero at row x(y) = perm^-1(perm(y) ^ xmask)
// with value phase[y] * f_sigma(perm(y)) * conj(phase[x(y)]).
struct SparseConjugation {
  std::vector<uint64_t> row;
  std::vector<cplx> val;
};

SparseConjugation conjugate_by_perm(const PauliString& sigma,
                                    const std::vector<uint32_t>& perm,
                                    const std::vector<cplx>& phase,
                                    const std::vector<uint32_t>& perm_inv) {
  const uint64_t dim = perm.size();
  const uint64_t xm = sigma.x_mask();
  SparseConjugation out;
  out.row.resize(dim);
  out.val.resize(dim);
  for (uint64_t y = 0; y < dim; ++y) {
    uint64_t py = perm[y];
    uint64_t x = perm_inv[py ^ xm];
    out.row[y] = x;
    out.val[y] = phase[y] * sigma.basis_phase(py) * std::conj(phase[x]);
  }
  return out;
}

}  // namespace

SymmetryGenerator SymmetryGenerator::dense_unitary(Eigen::MatrixXcd u,
                                                   std::string label) {
  SymmetryGenerator g;
  const uint64_t dim = static_cast<uint64_t>(u.rows());
  if (dim == 0 || u.cols() != u.rows() || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("dense_unitary: dimension not a power of two");
  Eigen::MatrixXcd defect =
      u * u.adjoint() - Eigen::MatrixXcd::Identity(dim, dim);
  if (defect.cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("dense_unitary: matrix is not unitary");
  g.kind_ = Kind::DenseUnitary;
  g.n_ = static_cast<uint32_t>(std::countr_zero(dim));
  g.dense_ = std::move(u);
  g.label_ = std::move(label);
  return g;
}

SymmetryGenerator SymmetryGenerator::permutation(uint32_t n_qubits,
                                                 std::vector<uint32_t> perm,
                                                 std::vector<cplx> phase,
                                                 std::string label) {
  SymmetryGenerator g;
  const uint64_t dim = uint64_t{1} << n_qubits;
  if (perm.size() != dim)
    throw std::invalid_argument("permutation: wrong table size");
  if (phase.empty()) phase.assign(dim, cplx{1.0, 0.0});
  if (phase.size() != dim)
    throw std::invalid_argument("permutation: wrong phase table size");
  std::vector<bool> seen(dim, false);
  for (uint32_t t : perm) {
    if (t >= dim || seen[t])
      throw std::invalid_argument("permutation: not a permutation");
    seen[t] = true;
  }
  for (const cplx& p : phase)
    if (std::abs(std::abs(p) - 1.0) > 1e-12)
      throw std::invalid_argument("permutation: phase not unimodular");
  g.kind_ = Kind::Permutation;
  g.n_ = n_qubits;
  g.perm_ = std::move(perm);
  g.phase_ = std::move(phase);
  g.label_ = std::move(label);
  return g;
}

SymmetryGenerator SymmetryGenerator::conjugation(uint32_t n_qubits) {
  SymmetryGenerator g;
  g.kind_ = Kind::Conjugation;
  g.n_ = n_qubits;
  g.label_ = "TR";
  return g;
}

SymmetryGenerator SymmetryGenerator::u1_family(uint32_t n_qubits) {
  SymmetryGenerator g;
  g.kind_ = Kind::U1Family;
  g.n_ = n_qubits;
  g.label_ = "U(1)";
  return g;
}

std::pair<uint64_t, cplx> SymmetryGenerator::map_basis(uint64_t x,
                                                       double alpha) const {
  switch (kind_) {
    case Kind::Permutation:
      return {perm_[x], phase_[x]};
    case Kind::U1Family: {
      double a = alpha * std::popcount(x);
      return {x, cplx{std::cos(a), std::sin(a)}};
    }
    default:
      throw std::logic_error("map_basis: not a basis-map generator");
  }
}

bool CMatrix::is_orthogonal(double tol) const {
  const auto& c = entries;
  Eigen::MatrixXd defect =
      c.transpose() * c - Eigen::MatrixXd::Identity(c.cols(), c.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

CMatrix c_matrix(const SymmetryGenerator& g,
                 const std::vector<PauliString>& basis, double alpha) {
  if (basis.empty()) throw std::invalid_argument("c_matrix: empty basis");
  const uint32_t w = basis[0].n_qubits();
  for (const auto& s : basis)
    if (s.n_qubits() != w)
      throw std::invalid_argument("c_matrix: mixed string lengths");
  if (g.n_qubits() != w)
    throw std::invalid_argument("c_matrix: generator/basis size mismatch");
  const size_t nb = basis.size();
  const uint64_t dim = uint64_t{1} << w;

  CMatrix out;
  out.basis = basis;
  out.entries.resize(nb, nb);

  if (g.kind() == SymmetryGenerator::Kind::Conjugation) {
    // K sigma K^-1 = conj(sigma): -sigma for odd Y count, +sigma otherwise.
    out.entries.setZero();
    for (size_t i = 0; i < nb; ++i)
      out.entries(i, i) = basis[i].y_parity_odd() ? -1.0 : 1.0;
    return out;
  }

  // Permutation-with-phase path (U1Family materializes at a given angle).
  if (g.kind() != SymmetryGenerator::Kind::DenseUnitary) {
    std::vector<uint32_t> perm(dim), perm_inv(dim);
    std::vector<cplx> phase(dim);
    for (uint64_t x = 0; x < dim; ++x) {
      auto [t, p] = g.map_basis(x, alpha);
      perm[x] = static_cast<uint32_t>(t);
      phase[x] = p;
    }
    for (uint64_t x = 0; x < dim; ++x) perm_inv[perm[x]] = x;

    std::vector<uint64_t> xmask(nb);
    for (size_t j = 0; j < nb; ++j) xmask[j] = basis[j].x_mask();

    for (size_t i = 0; i < nb; ++i) {
      SparseConjugation t =
          conjugate_by_perm(basis[i], perm, phase, perm_inv);
      double row_norm2 = 0.0;
      for (size_t j = 0; j < nb; ++j) {
        // tr(sigma_j T)/dim over the single nonzero of sigma_j per row.
        cplx acc = 0;
        const uint64_t xj = xmask[j];
        for (uint64_t y = 0; y < dim; ++y) {
          if ((t.row[y] ^ xj) == y)
            acc += basis[j].basis_phase(t.row[y]) * t.val[y];
        }
        acc /= static_cast<double>(dim);
        out.max_realness_error =
            std::max(out.max_realness_error, std::abs(acc.imag()));
        out.entries(i, j) = acc.real();
        row_norm2 += std::norm(acc);
      }
      if (out.max_realness_error > kRealnessTol)
        throw std::runtime_error("c_matrix: non-real entry for " +
                                 basis[i].text());
      if (std::abs(row_norm2 - 1.0) > kClosureTol)
        throw std::runtime_error(
            "c_matrix: basis not closed under the action of " + g.label() +
            " (row " + basis[i].text() + ")");
    }
    return out;
  }

  // Dense path: conjugate and project on the basis.
  const Eigen::MatrixXcd& u = g.unitary();
  for (size_t i = 0; i < nb; ++i) {
    Eigen::MatrixXcd t = u.adjoint() * dense_matrix(basis[i]) * u;
    double row_norm2 = 0.0;
    for (size_t j = 0; j < nb; ++j) {
      const uint64_t xj = basis[j].x_mask();
      cplx tr = 0;
      for (uint64_t col = 0; col < dim; ++col)
        tr += basis[j].basis_phase(col) * t(col, col ^ xj);
      cplx c = tr / static_cast<double>(dim);
      out.max_realness_error =
          std::max(out.max_realness_error, std::abs(c.imag()));
      out.entries(i, j) = c.real();
      row_norm2 += std::norm(c);
    }
    if (out.max_realness_error > kRealnessTol)
      throw std::runtime_error("c_matrix: non-real entry for " +
                               basis[i].text());
    if (std::abs(row_norm2 - 1.0) > kClosureTol)
      throw std::runtime_error(
          "c_matrix: basis not closed under the action of " + g.label() +
          " (row " + basis[i].text() + ")");
  }
  return out;
}

std::vector<Eigen::VectorXd> rref_canonical_basis(const Eigen::MatrixXd& ns,
                                                  double pivot_tol,
                                                  double round_tol) {
  const Eigen::Index d = ns.rows();
  const Eigen::Index k = ns.cols();
  std::vector<Eigen::VectorXd> out;
  if (k == 0) return out;

  // Pivot columns are the lexicographically first coordinates whose rows of
  // the (orthonormal) nullspace basis are linearly independent; detected by
  // re-orthogonalized Gram-Schmidt, which stays stable where plain
  // elimination underflows. The canonical vectors are then solved directly
  // from the original basis.
  std::vector<Eigen::Index> pivots;
  pivots.reserve(k);
  Eigen::MatrixXd ortho(k, k);  // orthonormal basis of collected rows
  Eigen::Index collected = 0;
  for (Eigen::Index c = 0; c < d && collected < k; ++c) {
    Eigen::VectorXd r = ns.row(c).transpose();
    for (int pass = 0; pass < 2; ++pass)
      if (collected > 0)
        r -= ortho.leftCols(collected) *
             (ortho.leftCols(collected).transpose() * r);
    if (r.norm() > pivot_tol) {
      pivots.push_back(c);
      ortho.col(collected++) = r / r.norm();
    }
  }
  if (std::ssize(pivots) != k)
    throw std::runtime_error("rref_canonical_basis: rank deficiency");

  Eigen::MatrixXd npiv(k, k);
  for (Eigen::Index i = 0; i < k; ++i) npiv.row(i) = ns.row(pivots[i]);
  Eigen::MatrixXd canon = ns * npiv.inverse();  // column i: e_i at pivots
  for (Eigen::Index i = 0; i < k; ++i) {
    Eigen::VectorXd v = canon.col(i);
    for (Eigen::Index r = 0; r < d; ++r)
      if (std::abs(v[r]) < round_tol) v[r] = 0.0;
    out.push_back(std::move(v));
  }
  // Rows sorted by pivot column = canonical order.
  std::vector<size_t> order(k);
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
  std::vector<Eigen::VectorXd> sorted;
  sorted.reserve(k);
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

namespace {

PauliSum vector_to_sum(const Eigen::VectorXd& v,
                       const std::vector<PauliString>& basis) {
  std::vector<PauliSum::Term> terms;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) terms.emplace_back(v[i], basis[i]);
  return PauliSum(basis[0].n_qubits(), std::move(terms));
}

}  // namespace

Eigen::MatrixXd stacked_nullspace(const std::vector<Eigen::MatrixXd>& blocks,
                                  double cutoff) {
  // Singular vectors of the stacked blocks via the Gram matrix sum A^T A;
  // the spectral gap between constrained and free directions is many orders
  // of magnitude, so squaring the singular values costs nothing here.
  const Eigen::Index d = blocks[0].cols();
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(d, d);
  for (const auto& b : blocks) gram.noalias() += b.transpose() * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const auto& ev = es.eigenvalues();  // ascending
  const double lmax = std::max(ev[d - 1], 0.0);
  const double thr = cutoff * std::max(1.0, std::sqrt(lmax));
  // Zero eigenvalues of the formed Gram matrix sit at the accumulation noise
  // floor (~d * eps * lmax), far below any genuine constraint direction.
  const double thr_lambda = std::max(thr * thr, lmax * 1e-12);
  Eigen::Index k = 0;
  while (k < d && std::max(ev[k], 0.0) <= thr_lambda) ++k;
  return es.eigenvectors().leftCols(k);
}

GeneratorBasis solve_constraints(const std::vector<SymmetryGenerator>& gens,
                                 const std::vector<PauliString>& basis) {
  if (basis.empty()) throw std::invalid_argument("solve_constraints: empty basis");
  const Eigen::Index d = static_cast<Eigen::Index>(basis.size());

  std::vector<Eigen::MatrixXd> blocks;
  std::string provenance;
  for (const auto& g : gens) {
    if (!provenance.empty()) provenance += "+";
    provenance += g.label();
    if (g.is_continuous()) {
      for (double a : kU1SolveAngles)
        blocks.push_back(c_matrix(g, basis, a).entries -
                         Eigen::MatrixXd::Identity(d, d));
    } else {
      blocks.push_back(c_matrix(g, basis).entries -
                       g.xi() * Eigen::MatrixXd::Identity(d, d));
    }
  }

  Eigen::MatrixXd ns = stacked_nullspace(blocks, kNullspaceCutoff);
  const Eigen::Index k = ns.cols();

  GeneratorBasis out;
  out.provenance = provenance;
  if (k == 0) return out;
  std::vector<Eigen::VectorXd> rows = rref_canonical_basis(ns);

  // A-posteriori check of continuous families on a disjoint angle sample.
  for (const auto& g : gens) {
    if (!g.is_continuous()) continue;
    for (double a : kU1VerifyAngles) {
      Eigen::MatrixXd c = c_matrix(g, basis, a).entries;
      for (const auto& v : rows) {
        double dev = (c * v - v).cwiseAbs().maxCoeff();
        if (dev > 1e-9 * v.cwiseAbs().maxCoeff())
          throw std::runtime_error(
              "solve_constraints: sampled-angle fixed space fails "
              "verification at a disjoint angle");
      }
    }
  }

  out.elements.reserve(rows.size());
  for (const auto& v : rows) out.elements.push_back(vector_to_sum(v, basis));
  return out;
}

std::vector<PauliString> tr_filter(const std::vector<PauliString>& basis) {
  std::vector<PauliString> out;
  for (const auto& s : basis)
    if (s.y_parity_odd()) out.push_back(s);
  return out;
}

bool verify_fixed_point(const Eigen::VectorXd& a0,
                        const std::vector<SymmetryGenerator>& gens,
                        const std::vector<PauliString>& basis, double tol) {
  if (a0.size() != static_cast<Eigen::Index>(basis.size()))
    throw std::invalid_argument("verify_fixed_point: size mismatch");
  for (const auto& g : gens) {
    std::vector<double> angles = {0.0};
    if (g.is_continuous()) {
      angles.assign(kU1SolveAngles.begin(), kU1SolveAngles.end());
      angles.insert(angles.end(), kU1VerifyAngles.begin(),
                    kU1VerifyAngles.end());
    }
    for (double a : angles) {
      Eigen::MatrixXd c = c_matrix(g, basis, a).entries;
      if ((c * a0 - g.xi() * a0).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

Eigen::VectorXd coefficient_vector(const PauliSum& s,
                                   const std::vector<PauliString>& basis) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(basis.size());
  std::map<PauliString, Eigen::Index> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  for (const auto& [c, str] : s.terms()) {
    auto it = index.find(str);
    if (it == index.end())
      throw std::invalid_argument("coefficient_vector: string not in basis: " +
                                  str.text());
    if (std::abs(c.imag()) > 1e-12)
      throw std::invalid_argument("coefficient_vector: complex coefficient");
    v[it->second] = c.real();
  }
  return v;
}

std::vector<PauliString> GeneratorBasis::support_strings() const {
  std::set<PauliString> strings;
  for (const auto& e : elements)
    for (const auto& [c, s] : e.terms()) strings.insert(s);
  return {strings.begin(), strings.end()};
}

bool GeneratorBasis::contains(const PauliSum& v, double tol) const {
  if (elements.empty()) return false;
  // Least-squares residual of v against the element span, in coordinates
  // over the union of strings involved.
  std::set<PauliString> strings;
  for (const auto& e : elements)
    for (const auto& [c, s] : e.terms()) strings.insert(s);
  for (const auto& [c, s] : v.terms()) strings.insert(s);
  std::vector<PauliString> basis(strings.begin(), strings.end());
  Eigen::MatrixXd b(basis.size(), elements.size());
  for (size_t j = 0; j < elements.size(); ++j)
    b.col(j) = coefficient_vector(elements[j], basis);
  Eigen::VectorXd t = coefficient_vector(v, basis);
  Eigen::VectorXd sol = b.colPivHouseholderQr().solve(t);
  return (b * sol - t).cwiseAbs().maxCoeff() <= tol * t.cwiseAbs().maxCoeff();
}

GeneratorBasis exclude_identity(const GeneratorBasis& gb) {
  if (gb.elements.empty()) return gb;
  std::set<PauliString> strings;
  for (const auto& e : gb.elements)
    for (const auto& [c, s] : e.terms()) strings.insert(s);
  std::vector<PauliString> basis(strings.begin(), strings.end());
  const uint32_t n = basis[0].n_qubits();
  const PauliString idn(n);

  std::vector<Eigen::VectorXd> rows;
  for (const auto& e : gb.elements) {
    Eigen::VectorXd v = coefficient_vector(e, basis);
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == idn) v[i] = 0.0;
    if (v.cwiseAbs().maxCoeff() > 1e-9) rows.push_back(v);
  }
  GeneratorBasis out;
  out.provenance = gb.provenance;
  if (rows.empty()) return out;

  Eigen::MatrixXd m(basis.size(), rows.size());
  for (size_t j = 0; j < rows.size(); ++j) m.col(j) = rows[j];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-9);
  const Eigen::Index rank = qr.rank();
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(
                                              basis.size(), rank);
  for (const auto& v : rref_canonical_basis(q))
    out.elements.push_back(vector_to_sum(v, basis));
  return out;
}

}  // namespace symqite
