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

#include "symqite/validate.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symqite/ansatz.hpp"
#include "symqite/lattice.hpp"
#include "symqite/linear_solve.hpp"
#include "symqite/oracle.hpp"
#include "symqite/pauli.hpp"
#include "symqite/statevector.hpp"
#include "symqite/symmetry.hpp"

namespace symqite {

namespace {

ModelSpec make_spec(ModelKind kind, int q) {
  ModelSpec spec;
  spec.kind = kind;
  spec.q = q;
  spec.lattice = {2, 2,
                  kind == ModelKind::Gauge ? Boundary::Periodic
                                           : Boundary::Open};
  if (kind == ModelKind::Hopping) spec.lattice = {2, 1, Boundary::Open};
  return spec;
}

std::set<std::string> string_set(const GeneratorBasis& gb) {
  std::set<std::string> out;
  for (const auto& s : gb.support_strings()) out.insert(s.text());
  return out;
}

Eigen::MatrixXd fixed_space_basis(const std::vector<Eigen::MatrixXd>& cs) {
  const Eigen::Index d = cs[0].rows();
  std::vector<Eigen::MatrixXd> blocks;
  for (const auto& c : cs)
    blocks.push_back(c - Eigen::MatrixXd::Identity(d, d));
  return stacked_nullspace(blocks);
}

struct Check {
  std::vector<CheckResult>& out;
  void operator()(const std::string& name, bool pass,
                  const std::string& detail) {
    out.push_back({name, pass, detail});
  }
};

}  // namespace

std::vector<CheckResult> run_validation_suite() {
  std::vector<CheckResult> results;
  Check check{results};

  // c-matrix realness + orthogonality over all model generators, restricted
  // per term.
  {
    bool pass = true;
    std::string detail;
    double worst = 0.0;
    for (auto [kind, q] : std::vector<std::pair<ModelKind, int>>{
             {ModelKind::Ising, 2},
             {ModelKind::Potts, 4},
             {ModelKind::Clock, 4},
             {ModelKind::Gauge, 2}}) {
      ModelSpec spec = make_spec(kind, q);
      auto terms = build_hamiltonian(spec);
      auto basis = full_basis(static_cast<uint32_t>(terms[0].qubits.size()));
      for (const auto& ms : build_symmetry_generators(spec)) {
        if (ms.kind == ModelSymmetry::Kind::Conjugation) continue;
        CMatrix c = c_matrix(restrict_to_term(ms, spec, terms[0]), basis);
        worst = std::max(worst, c.max_realness_error);
        if (!c.is_orthogonal(1e-10)) {
          pass = false;
          detail = spec.name() + "/" + ms.label + " not orthogonal";
        }
      }
    }
    if (pass) {
      std::ostringstream ss;
      ss << "max imaginary residue " << worst;
      detail = ss.str();
    }
    check("cmatrix_real_orthogonal", pass, detail);
  }

  // Negative control: a corrupted c-matrix must be flagged.
  {
    ModelSpec spec = make_spec(ModelKind::Ising, 2);
    auto terms = build_hamiltonian(spec);
    auto basis = full_basis(2);
    CMatrix c = c_matrix(
        restrict_to_term(build_symmetry_generators(spec)[0], spec, terms[0]),
        basis);
    bool before = c.is_orthogonal(1e-10);
    c.entries(0, 1) += 1e-3;
    bool after = c.is_orthogonal(1e-10);
    check("cmatrix_corruption_detected", before && !after,
          "orthogonality check flags a corrupted entry");
  }

  // Generating-set closure: adding the product of two generators does not
  // change the fixed space (equal dimension and mutual containment).
  {
    ModelSpec spec = make_spec(ModelKind::Potts, 4);
    auto terms = build_hamiltonian(spec);
    auto syms = build_symmetry_generators(spec);
    auto basis = full_basis(4);
    Eigen::MatrixXd cg =
        c_matrix(restrict_to_term(syms[0], spec, terms[0]), basis).entries;
    Eigen::MatrixXd ch =
        c_matrix(restrict_to_term(syms[1], spec, terms[0]), basis).entries;
    Eigen::MatrixXd fixed2 = fixed_space_basis({cg, ch});
    Eigen::MatrixXd fixed3 = fixed_space_basis({cg, ch, cg * ch});
    bool pass = fixed2.cols() == fixed3.cols();
    if (pass) {
      // containment both ways via projection residuals
      Eigen::MatrixXd p2 = fixed2 * fixed2.transpose();
      Eigen::MatrixXd p3 = fixed3 * fixed3.transpose();
      pass = (p2 * fixed3 - fixed3).cwiseAbs().maxCoeff() < 1e-9 &&
             (p3 * fixed2 - fixed2).cwiseAbs().maxCoeff() < 1e-9;
    }
    std::ostringstream ss;
    ss << "dim " << fixed2.cols() << " vs " << fixed3.cols();
    check("generating_set_closure", pass, ss.str());
  }

  // TR counting law (4^n - 2^n)/2 for n = 1..5.
  {
    bool pass = true;
    for (uint32_t n = 1; n <= 5; ++n) {
      size_t got = tr_filter(full_basis(n)).size();
      size_t want = ((size_t{1} << (2 * n)) - (size_t{1} << n)) / 2;
      if (got != want) pass = false;
    }
    check("tr_filter_count_law", pass, "(4^n - 2^n)/2 for n = 1..5");
  }

  // Reduced string sets per model.
  {
    auto sets = [&](ModelKind kind, int q) {
      return string_set(
          relevant_basis(make_spec(kind, q), ReductionMode::InternalPlusTr)[0]);
    };
    std::set<std::string> ising = sets(ModelKind::Ising, 2);
    std::set<std::string> potts = sets(ModelKind::Potts, 4);
    std::set<std::string> gauge = sets(ModelKind::Gauge, 2);
    std::set<std::string> clock = sets(ModelKind::Clock, 4);
    bool pass = ising == std::set<std::string>{"ZY", "YZ"} &&
                potts.size() == 24 && gauge.size() == 8 && clock.size() == 56;
    std::ostringstream ss;
    ss << "ising " << ising.size() << ", potts " << potts.size() << ", gauge "
       << gauge.size() << ", clock " << clock.size();
    check("reduced_string_sets", pass, ss.str());
  }

  // Particle-number-preserving generator counts on 2/3/4 qubits.
  {
    auto count = [](uint32_t n, bool with_tr) {
      std::vector<SymmetryGenerator> gens = {SymmetryGenerator::u1_family(n)};
      if (with_tr) gens.push_back(SymmetryGenerator::conjugation(n));
      return exclude_identity(solve_constraints(gens, full_basis(n))).size();
    };
    size_t c2 = count(2, false), c2t = count(2, true);
    size_t c3 = count(3, false), c3t = count(3, true);
    size_t c4 = count(4, false), c4t = count(4, true);
    bool pass = c2 == 5 && c2t == 1 && c3 == 19 && c3t == 6 && c4 == 69 &&
                c4t == 27;
    std::ostringstream ss;
    ss << "2q " << c2 << "/" << c2t << ", 3q " << c3 << "/" << c3t << ", 4q "
       << c4 << "/" << c4t;
    check("particle_number_counts", pass, ss.str());
  }

  // Every built Hamiltonian commutes with every internal symmetry operator.
  {
    bool pass = true;
    std::string detail = "commutators vanish";
    for (auto [kind, q] : std::vector<std::pair<ModelKind, int>>{
             {ModelKind::Ising, 2},
             {ModelKind::Potts, 4},
             {ModelKind::Clock, 4},
             {ModelKind::Gauge, 2},
             {ModelKind::Hopping, 2}}) {
      ModelSpec spec = make_spec(kind, q);
      auto terms = build_hamiltonian(spec);
      Eigen::MatrixXcd h = dense_matrix(hamiltonian_sum(spec, terms));
      for (const auto& ms : build_symmetry_generators(spec)) {
        if (ms.kind == ModelSymmetry::Kind::Conjugation) continue;
        GlobalAction ga = global_action(ms, spec, 0.7);
        Eigen::MatrixXcd u =
            Eigen::MatrixXcd::Zero(ga.target.size(), ga.target.size());
        for (size_t s = 0; s < ga.target.size(); ++s)
          u(ga.target[s], s) = ga.phase[s];
        double dev = (u * h - h * u).cwiseAbs().maxCoeff();
        if (dev > 1e-10) {
          pass = false;
          detail = spec.name() + "/" + ms.label + " commutator " +
                   std::to_string(dev);
        }
      }
    }
    check("hamiltonian_symmetry_commutation", pass, detail);
  }

  // Real encodings have purely real dense Hamiltonians; the imaginary
  // hopping variant does not.
  {
    bool pass = true;
    for (auto [kind, q] : std::vector<std::pair<ModelKind, int>>{
             {ModelKind::Ising, 2},
             {ModelKind::Potts, 4},
             {ModelKind::Clock, 4},
             {ModelKind::Gauge, 2},
             {ModelKind::Hopping, 2}}) {
      ModelSpec spec = make_spec(kind, q);
      Eigen::MatrixXcd h =
          dense_matrix(hamiltonian_sum(spec, build_hamiltonian(spec)));
      if (h.imag().cwiseAbs().maxCoeff() > 1e-12) pass = false;
    }
    ModelSpec im = make_spec(ModelKind::Hopping, 2);
    im.encoding = HoppingEncoding::Imaginary;
    Eigen::MatrixXcd h =
        dense_matrix(hamiltonian_sum(im, build_hamiltonian(im)));
    bool imag_present = h.imag().cwiseAbs().maxCoeff() > 1e-3;
    check("real_encoding_matrices", pass && imag_present,
          "real models real, imaginary variant not");
  }

  // Parameter counting identity against the reported ansatz sizes.
  {
    auto params = [&](ModelKind kind, int q, ReductionMode mode) {
      ModelSpec spec = make_spec(kind, q);
      auto terms = build_hamiltonian(spec);
      auto bases = relevant_basis(spec, mode);
      Ansatz a = build_ansatz(terms, bases, 1, spec.n_qubits());
      size_t sum = 0;
      for (const auto& b : bases) sum += b.size();
      return std::pair<int, size_t>(a.n_params, sum);
    };
    auto [p1, s1] = params(ModelKind::Potts, 4, ReductionMode::TrOnly);
    auto [p2, s2] = params(ModelKind::Potts, 4, ReductionMode::InternalPlusTr);
    auto [p3, s3] = params(ModelKind::Clock, 4, ReductionMode::InternalPlusTr);
    auto [p4, s4] = params(ModelKind::Gauge, 2, ReductionMode::InternalPlusTr);
    auto [p5, s5] = params(ModelKind::Ising, 2, ReductionMode::InternalPlusTr);
    bool pass = p1 == 480 && p2 == 96 && p3 == 224 && p4 == 32 && p5 == 8 &&
                static_cast<size_t>(p1) == s1 &&
                static_cast<size_t>(p2) == s2 &&
                static_cast<size_t>(p3) == s3 &&
                static_cast<size_t>(p4) == s4 && static_cast<size_t>(p5) == s5;
    std::ostringstream ss;
    ss << "tr 480 -> " << p1 << "; potts 96 -> " << p2 << "; clock 224 -> "
       << p3 << "; gauge 32 -> " << p4 << "; ising 8 -> " << p5;
    check("parameter_count_identity", pass, ss.str());
  }

  // U(1) family at alpha = 0 acts as the identity.
  {
    auto basis = full_basis(2);
    Eigen::MatrixXd c =
        c_matrix(SymmetryGenerator::u1_family(2), basis, 0.0).entries;
    bool pass =
        (c - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12;
    check("u1_identity_at_zero", pass, "c-matrix at alpha = 0 is identity");
  }

  // Pseudo-inverse residual is monotone non-increasing as the cutoff drops.
  {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd g(6, 4);
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = gauss(rng);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(6, 6);
    m.topLeftCorner(6, 6) = g * g.transpose();  // rank 4 PSD
    Eigen::VectorXd v(6);
    for (Eigen::Index i = 0; i < 6; ++i) v[i] = gauss(rng);
    double prev = -1.0;
    bool pass = true;
    for (double cutoff : {0.5, 0.1, 1e-2, 1e-4, 1e-8, 1e-12}) {
      double r = pinv_solve(m, v, cutoff).residual;
      if (prev >= 0 && r > prev + 1e-12) pass = false;
      prev = r;
    }
    check("pinv_residual_monotone", pass, "residual non-increasing in cutoff");
  }

  // Symmetry-excluded strings get strictly zero DetQITE coefficients on the
  // symmetric initial state.
  {
    ModelSpec spec = make_spec(ModelKind::Ising, 2);
    auto terms = build_hamiltonian(spec);
    StateVector plus = StateVector::plus_state(spec.n_qubits());
    GeneratorBasis pool = full_string_pool(terms[0]);
    DetQiteStep step = detqite_step(terms[0], plus, 0.01, pool);
    auto reduced =
        relevant_basis(spec, ReductionMode::InternalPlusTr)[0].support_strings();
    std::set<std::string> keep;
    for (const auto& s : reduced) keep.insert(s.text());
    double worst = 0.0;
    for (size_t i = 0; i < pool.elements.size(); ++i) {
      const auto& s = pool.elements[i].terms()[0].second;
      if (!keep.count(s.text())) worst = std::max(worst, std::abs(step.a[i]));
    }
    std::ostringstream ss;
    ss << "max excluded |a_i| = " << worst;
    check("detqite_excluded_coefficients_vanish", worst <= 1e-8, ss.str());
  }

  return results;
}

std::string validation_report_json(const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  int failures = 0;
  for (const auto& r : results) {
    j["checks"].push_back(
        {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) ++failures;
  }
  j["total"] = results.size();
  j["failures"] = failures;
  j["pass"] = failures == 0;
  return j.dump(2) + "\n";
}

}  // namespace symqite
