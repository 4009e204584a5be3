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

#include "symqite/lattice.hpp"

#include <doctest.h>

#include <set>

#include "symqite/oracle.hpp"

using namespace symqite;

namespace {

PauliString ps(const char* t) { return PauliString::from_text(t); }

ModelSpec spec_2x2(ModelKind kind, int q) {
  ModelSpec s;
  s.kind = kind;
  s.q = q;
  s.lattice = {2, 2,
               kind == ModelKind::Gauge ? Boundary::Periodic : Boundary::Open};
  return s;
}

std::set<std::string> support_texts(const GeneratorBasis& gb) {
  std::set<std::string> out;
  for (const auto& s : gb.support_strings()) out.insert(s.text());
  return out;
}

const std::set<std::string> kPottsStrings = {
    "IYIZ", "IZIY", "YIZI", "ZIYI", "IYXZ", "IZXY", "XYIZ", "XZIY",
    "YIZX", "YXZI", "ZIYX", "ZXYI", "XYXZ", "XZXY", "YXZX", "ZXYX",
    "ZZZY", "ZZYZ", "ZYZZ", "YZZZ", "YYYZ", "YYZY", "YZYY", "ZYYY"};

const std::set<std::string> kGaugeStrings = {"ZZZY", "ZZYZ", "ZYZZ", "YZZZ",
                                             "YYYZ", "YYZY", "YZYY", "ZYYY"};

}  // namespace

TEST_CASE("2x2 periodic lattice layout") {
  Lattice lat{2, 2, Boundary::Periodic};
  CHECK(lat.n_nodes() == 4);
  CHECK(lat.links().size() == 8);
  CHECK(lat.plaquettes().size() == 4);
  CHECK(lat.bonds().size() == 4);  // no periodic doubling

  // horizontal links first, row-major, then vertical
  auto links = lat.links();
  for (int i = 0; i < 4; ++i) {
    CHECK(links[i].from == i);
    CHECK(links[i].dir == 0);
    CHECK(links[4 + i].from == i);
    CHECK(links[4 + i].dir == 1);
  }
  // each link sits on exactly two plaquettes
  std::map<int, int> uses;
  for (const auto& p : lat.plaquettes())
    for (int l : p.links) ++uses[l];
  for (const auto& [l, c] : uses) CHECK(c == 2);
}

TEST_CASE("open 2x2 lattice has four unique bonds") {
  Lattice lat{2, 2, Boundary::Open};
  auto bonds = lat.bonds();
  REQUIRE(bonds.size() == 4);
  CHECK(bonds[0] == std::pair{0, 1});
  CHECK(bonds[1] == std::pair{0, 2});
  CHECK(bonds[2] == std::pair{1, 3});
  CHECK(bonds[3] == std::pair{2, 3});
}

TEST_CASE("hamiltonian building blocks") {
  // Potts Q=4 single bond
  ModelSpec potts = spec_2x2(ModelKind::Potts, 4);
  auto terms = build_hamiltonian(potts);
  REQUIRE(terms.size() == 4);
  std::set<std::string> strings;
  for (const auto& [c, s] : terms[0].op_local.terms()) {
    strings.insert(s.text());
    CHECK(c == cplx{-0.25, 0.0});
  }
  CHECK(strings == std::set<std::string>{"IIII", "ZIZI", "IZIZ", "ZZZZ"});

  // Gauge Q=2 plaquette
  ModelSpec gauge = spec_2x2(ModelKind::Gauge, 2);
  auto gterms = build_hamiltonian(gauge);
  REQUIRE(gterms.size() == 4);
  REQUIRE(gterms[0].op_local.size() == 1);
  CHECK(gterms[0].op_local.terms()[0].second == ps("ZZZZ"));
  CHECK(gterms[0].op_local.terms()[0].first == cplx{-1.0, 0.0});

  // Clock Q=2 reduces to Ising
  ModelSpec clock2 = spec_2x2(ModelKind::Clock, 2);
  auto cterms = build_hamiltonian(clock2);
  REQUIRE(cterms[0].op_local.size() == 1);
  CHECK(cterms[0].op_local.terms()[0].second == ps("ZZ"));
  CHECK(cterms[0].op_local.terms()[0].first == cplx{-1.0, 0.0});

  // Hopping encodings
  ModelSpec hop;
  hop.kind = ModelKind::Hopping;
  hop.lattice = {3, 1, Boundary::Open};
  auto hterms = build_hamiltonian(hop);
  REQUIRE(hterms.size() == 2);
  CHECK(hterms[0].op_local ==
        PauliSum(2, {{0.5, ps("XX")}, {0.5, ps("YY")}}));
  hop.encoding = HoppingEncoding::Imaginary;
  auto iterms = build_hamiltonian(hop);
  CHECK(iterms[0].op_local ==
        PauliSum(2, {{0.5, ps("YX")}, {-0.5, ps("XY")}}));
}

TEST_CASE("ising ground energy on the 2x2 lattice") {
  ModelSpec ising = spec_2x2(ModelKind::Ising, 2);
  auto terms = build_hamiltonian(ising);
  ExactHamiltonian exact(hamiltonian_sum(ising, terms));
  CHECK(exact.ground_energy() == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("symmetry generators per model") {
  ModelSpec ising = spec_2x2(ModelKind::Ising, 2);
  auto syms = build_symmetry_generators(ising);
  REQUIRE(syms.size() == 2);
  CHECK(syms[0].kind == ModelSymmetry::Kind::RegisterPermutation);
  CHECK(syms[0].register_perms.size() == 4);  // flip on every node
  CHECK(syms[1].kind == ModelSymmetry::Kind::Conjugation);

  ModelSpec potts = spec_2x2(ModelKind::Potts, 4);
  CHECK(build_symmetry_generators(potts).size() == 5);  // 4 swaps + TR

  // clock shift on one node matches |k> -> |k+1 mod 4>
  ModelSpec clock = spec_2x2(ModelKind::Clock, 4);
  auto csyms = build_symmetry_generators(clock);
  const auto& shift = csyms[0].register_perms.at(0);
  CHECK(shift == std::vector<uint32_t>{1, 2, 3, 0});

  ModelSpec gauge = spec_2x2(ModelKind::Gauge, 2);
  auto gsyms = build_symmetry_generators(gauge);
  REQUIRE(gsyms.size() == 5);  // one per node + TR
  for (int n = 0; n < 4; ++n)
    CHECK(gsyms[n].register_perms.size() == 4);  // 4 links touch each node
}

TEST_CASE("u1 action phases a two-particle state") {
  ModelSpec hop;
  hop.kind = ModelKind::Hopping;
  hop.lattice = {4, 1, Boundary::Open};
  auto syms = build_symmetry_generators(hop);
  REQUIRE(syms[0].kind == ModelSymmetry::Kind::U1);
  const double alpha = 0.71;
  GlobalAction ga = global_action(syms[0], hop, alpha);
  CHECK(ga.target[0b0011] == 0b0011);
  CHECK(std::abs(ga.phase[0b0011] -
                 cplx{std::cos(2 * alpha), std::sin(2 * alpha)}) < 1e-14);
}

TEST_CASE("relevant bases match the reduced string sets") {
  auto strings = [&](ModelKind kind, int q) {
    return support_texts(
        relevant_basis(spec_2x2(kind, q), ReductionMode::InternalPlusTr)[0]);
  };
  CHECK(strings(ModelKind::Ising, 2) == std::set<std::string>{"ZY", "YZ"});
  CHECK(strings(ModelKind::Potts, 4) == kPottsStrings);
  CHECK(strings(ModelKind::Gauge, 2) == kGaugeStrings);
  CHECK(strings(ModelKind::Clock, 4).size() == 56);

  // all four bonds reduce identically
  auto bases = relevant_basis(spec_2x2(ModelKind::Potts, 4),
                              ReductionMode::InternalPlusTr);
  for (const auto& b : bases) CHECK(support_texts(b) == kPottsStrings);
}

TEST_CASE("hopping relevant basis keeps the combination") {
  ModelSpec hop;
  hop.kind = ModelKind::Hopping;
  hop.lattice = {2, 1, Boundary::Open};
  auto bases = relevant_basis(hop, ReductionMode::InternalPlusTr);
  REQUIRE(bases.size() == 1);
  REQUIRE(bases[0].size() == 1);
  CHECK(bases[0].elements[0].text() == "XY - YX");
}

TEST_CASE("symmetric combo elements commute with restricted generators") {
  ModelSpec potts = spec_2x2(ModelKind::Potts, 4);
  auto terms = build_hamiltonian(potts);
  auto bases = relevant_basis(potts, ReductionMode::SymmetricCombo);
  REQUIRE(bases[0].size() == 4);
  auto syms = build_symmetry_generators(potts);
  for (const auto& ms : syms) {
    if (ms.kind != ModelSymmetry::Kind::RegisterPermutation) continue;
    SymmetryGenerator g = restrict_to_term(ms, potts, terms[0]);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(16, 16);
    for (uint64_t s = 0; s < 16; ++s) {
      auto [t, phase] = g.map_basis(s);
      u(t, s) = phase;
    }
    for (const auto& e : bases[0].elements) {
      Eigen::MatrixXcd m = dense_matrix(e);
      CHECK((u * m - m * u).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("tr_only and none modes") {
  ModelSpec potts = spec_2x2(ModelKind::Potts, 4);
  auto tr = relevant_basis(potts, ReductionMode::TrOnly);
  CHECK(tr[0].size() == 120);
  auto none = relevant_basis(potts, ReductionMode::None);
  CHECK(none[0].size() == 255);
}

TEST_CASE("model validation") {
  ModelSpec bad = spec_2x2(ModelKind::Potts, 3);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ModelSpec ising5 = spec_2x2(ModelKind::Ising, 4);
  CHECK_THROWS_AS(ising5.validate(), std::invalid_argument);
}

TEST_CASE("Z4 gauge plaquette builds as diagonal Z strings") {
  ModelSpec spec;
  spec.kind = ModelKind::Gauge;
  spec.q = 4;
  spec.lattice = {2, 2, Boundary::Periodic};
  auto terms = build_hamiltonian(spec);
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].qubits.size() == 8);
  for (const auto& [c, s] : terms[0].op_local.terms()) {
    CHECK(std::abs(c.imag()) < 1e-12);
    for (uint32_t k = 0; k < s.n_qubits(); ++k) {
      Letter l = s.letter(k);
      CHECK((l == Letter::I || l == Letter::Z));
    }
  }
  // the 8-qubit term support rules out the constraint solve but not the
  // time-reversal filter
  CHECK_THROWS_AS(relevant_basis(spec, ReductionMode::InternalPlusTr),
                  std::invalid_argument);
  auto tr = relevant_basis(spec, ReductionMode::TrOnly);
  CHECK(tr[0].size() == (65536 - 256) / 2);
}
