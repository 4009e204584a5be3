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

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace symqite {

int Lattice::neighbor(int n, int dir) const {
  int x = n % lx, y = n / lx;
  if (dir == 0) {
    if (x + 1 < lx) return node(x + 1, y);
    return boundary == Boundary::Periodic ? node(0, y) : -1;
  }
  if (y + 1 < ly) return node(x, y + 1);
  return boundary == Boundary::Periodic ? node(x, 0) : -1;
}

std::vector<std::pair<int, int>> Lattice::bonds() const {
  std::set<std::pair<int, int>> uniq;
  for (int n = 0; n < n_nodes(); ++n) {
    for (int dir = 0; dir < 2; ++dir) {
      if ((dir == 0 && lx < 2) || (dir == 1 && ly < 2)) continue;
      int m = neighbor(n, dir);
      if (m >= 0 && m != n) uniq.insert({std::min(n, m), std::max(n, m)});
    }
  }
  return {uniq.begin(), uniq.end()};
}

std::vector<Lattice::Link> Lattice::links() const {
  std::vector<Link> out;
  for (int dir = 0; dir < 2; ++dir) {
    for (int n = 0; n < n_nodes(); ++n) {
      int m = neighbor(n, dir);
      if (m >= 0 && m != n) out.push_back({n, m, dir});
    }
  }
  return out;
}

int Lattice::link_index(int node, int dir) const {
  auto ls = links();
  for (size_t i = 0; i < ls.size(); ++i)
    if (ls[i].from == node && ls[i].dir == dir) return static_cast<int>(i);
  return -1;
}

std::vector<Lattice::Plaquette> Lattice::plaquettes() const {
  std::vector<Plaquette> out;
  for (int n = 0; n < n_nodes(); ++n) {
    int nx = neighbor(n, 0), ny = neighbor(n, 1);
    if (nx < 0 || ny < 0) continue;
    int l0 = link_index(n, 0);   // mu(n)
    int l1 = link_index(nx, 1);  // nu(n + x)
    int l2 = link_index(ny, 0);  // mu(n + y)
    int l3 = link_index(n, 1);   // nu(n)
    if (l0 < 0 || l1 < 0 || l2 < 0 || l3 < 0) continue;
    out.push_back({n, {l0, l1, l2, l3}});
  }
  return out;
}

void ModelSpec::validate() const {
  if (q < 2 || (q & (q - 1)) != 0)
    throw std::invalid_argument("ModelSpec: Q must be a power of two >= 2");
  if (kind == ModelKind::Ising && q != 2)
    throw std::invalid_argument("ModelSpec: Ising requires Q = 2");
  if (kind == ModelKind::Hopping) {
    if (lattice.ly != 1 || lattice.boundary != Boundary::Open)
      throw std::invalid_argument("ModelSpec: hopping uses an open 1d chain");
    if (lattice.lx < 2)
      throw std::invalid_argument("ModelSpec: hopping chain needs >= 2 sites");
  }
  if (lattice.lx < 1 || lattice.ly < 1)
    throw std::invalid_argument("ModelSpec: empty lattice");
  if (n_qubits() > static_cast<int>(kDenseQubitCap) + 4)
    throw std::invalid_argument("ModelSpec: lattice too large");
}

int ModelSpec::qubits_per_register() const {
  if (kind == ModelKind::Hopping) return 1;
  return std::countr_zero(static_cast<unsigned>(q));
}

int ModelSpec::n_registers() const {
  switch (kind) {
    case ModelKind::Gauge:
      return static_cast<int>(lattice.links().size());
    case ModelKind::Hopping:
      return lattice.lx;
    default:
      return lattice.n_nodes();
  }
}

int ModelSpec::n_qubits() const { return n_registers() * qubits_per_register(); }

std::vector<int> ModelSpec::register_qubits(int reg) const {
  const int p = qubits_per_register();
  std::vector<int> qs(p);
  for (int i = 0; i < p; ++i) qs[i] = reg * p + i;
  return qs;
}

std::string ModelSpec::name() const {
  switch (kind) {
    case ModelKind::Ising: return "ising";
    case ModelKind::Potts: return "potts" + std::to_string(q);
    case ModelKind::Clock: return "clock" + std::to_string(q);
    case ModelKind::Gauge: return "gauge-z" + std::to_string(q);
    case ModelKind::Hopping: return "hopping";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "ising") return ModelKind::Ising;
  if (s == "potts") return ModelKind::Potts;
  if (s == "clock") return ModelKind::Clock;
  if (s == "gauge") return ModelKind::Gauge;
  if (s == "hopping") return ModelKind::Hopping;
  throw std::invalid_argument("unknown model kind: " + s);
}

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Ising: return "ising";
    case ModelKind::Potts: return "potts";
    case ModelKind::Clock: return "clock";
    case ModelKind::Gauge: return "gauge";
    case ModelKind::Hopping: return "hopping";
  }
  return "?";
}

namespace {

std::vector<int> term_qubits(const ModelSpec& spec,
                             const std::vector<int>& registers) {
  std::vector<int> qs;
  for (int r : registers)
    for (int q : spec.register_qubits(r)) qs.push_back(q);
  return qs;
}

// Phase operator of one register in the binary encoding:
// A = diag(e^{2 pi i k / Q}), k read MSB-first from the register's qubits.
Eigen::VectorXcd phase_operator(int q_states) {
  Eigen::VectorXcd a(q_states);
  for (int k = 0; k < q_states; ++k) {
    double th = 2.0 * M_PI * k / q_states;
    a[k] = cplx{std::cos(th), std::sin(th)};
  }
  return a;
}

PauliSum potts_bond_term(int p_qubits) {
  // minus prod_p (1 + Z_{n,p} Z_{n',p}) / 2, expanded over subsets.
  const int w = 2 * p_qubits;
  std::vector<PauliSum::Term> terms;
  const double scale = -std::pow(0.5, p_qubits);
  for (uint32_t sub = 0; sub < (1u << p_qubits); ++sub) {
    PauliString s(static_cast<uint32_t>(w));
    for (int p = 0; p < p_qubits; ++p) {
      if (sub & (1u << p)) {
        s = s.with_letter(p, Letter::Z);
        s = s.with_letter(p_qubits + p, Letter::Z);
      }
    }
    terms.emplace_back(scale, s);
  }
  return PauliSum(static_cast<uint32_t>(w), std::move(terms));
}

PauliSum clock_bond_term(int q_states, int p_qubits) {
  // minus Re[A_n (x) A†_n'] built dense, then decomposed to Z strings.
  Eigen::VectorXcd a = phase_operator(q_states);
  const int dim = q_states * q_states;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < q_states; ++k)
    for (int l = 0; l < q_states; ++l)
      op(k * q_states + l, k * q_states + l) =
          -std::real(a[k] * std::conj(a[l]));
  return decompose(op, static_cast<uint32_t>(2 * p_qubits));
}

PauliSum gauge_plaquette_term(int q_states, int p_qubits) {
  // minus Re[A (x) A (x) A† (x) A†] on the four links in plaquette order.
  Eigen::VectorXcd a = phase_operator(q_states);
  const int w = 4 * p_qubits;
  const uint64_t dim = uint64_t{1} << w;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint64_t s = 0; s < dim; ++s) {
    int k0 = static_cast<int>((s >> (3 * p_qubits)) & (q_states - 1));
    int k1 = static_cast<int>((s >> (2 * p_qubits)) & (q_states - 1));
    int k2 = static_cast<int>((s >> p_qubits) & (q_states - 1));
    int k3 = static_cast<int>(s & (q_states - 1));
    op(s, s) = -std::real(a[k0] * a[k1] * std::conj(a[k2]) * std::conj(a[k3]));
  }
  return decompose(op, static_cast<uint32_t>(w));
}

}  // namespace

std::vector<LocalTerm> build_hamiltonian(const ModelSpec& spec) {
  spec.validate();
  const int p = spec.qubits_per_register();
  std::vector<LocalTerm> out;

  switch (spec.kind) {
    case ModelKind::Ising: {
      PauliSum zz(PauliString::from_text("ZZ"), -1.0);
      for (auto [n, m] : spec.lattice.bonds()) {
        LocalTerm t{zz, {n, m}, {}, "bond(" + std::to_string(n) + "," +
                                         std::to_string(m) + ")"};
        t.qubits = term_qubits(spec, t.registers);
        out.push_back(std::move(t));
      }
      break;
    }
    case ModelKind::Potts: {
      PauliSum op = potts_bond_term(p);
      for (auto [n, m] : spec.lattice.bonds()) {
        LocalTerm t{op, {n, m}, {}, "bond(" + std::to_string(n) + "," +
                                        std::to_string(m) + ")"};
        t.qubits = term_qubits(spec, t.registers);
        out.push_back(std::move(t));
      }
      break;
    }
    case ModelKind::Clock: {
      PauliSum op = clock_bond_term(spec.q, p);
      for (auto [n, m] : spec.lattice.bonds()) {
        LocalTerm t{op, {n, m}, {}, "bond(" + std::to_string(n) + "," +
                                        std::to_string(m) + ")"};
        t.qubits = term_qubits(spec, t.registers);
        out.push_back(std::move(t));
      }
      break;
    }
    case ModelKind::Gauge: {
      PauliSum op = gauge_plaquette_term(spec.q, p);
      for (const auto& pl : spec.lattice.plaquettes()) {
        LocalTerm t{op,
                    {pl.links[0], pl.links[1], pl.links[2], pl.links[3]},
                    {},
                    "plaquette(" + std::to_string(pl.base_node) + ")"};
        t.qubits = term_qubits(spec, t.registers);
        out.push_back(std::move(t));
      }
      break;
    }
    case ModelKind::Hopping: {
      PauliSum op =
          spec.encoding == HoppingEncoding::Real
              ? PauliSum(2, {{0.5, PauliString::from_text("XX")},
                             {0.5, PauliString::from_text("YY")}})
              : PauliSum(2, {{0.5, PauliString::from_text("YX")},
                             {-0.5, PauliString::from_text("XY")}});
      for (int i = 0; i + 1 < spec.lattice.lx; ++i) {
        LocalTerm t{op, {i, i + 1}, {}, "hop(" + std::to_string(i) + ")"};
        t.qubits = term_qubits(spec, t.registers);
        out.push_back(std::move(t));
      }
      break;
    }
  }
  return out;
}

PauliString embed_to_global(const PauliString& local,
                            const std::vector<int>& qubits, uint32_t n_total) {
  if (local.n_qubits() != qubits.size())
    throw std::invalid_argument("embed_to_global: support size mismatch");
  PauliString g(n_total);
  for (uint32_t k = 0; k < local.n_qubits(); ++k)
    g = g.with_letter(static_cast<uint32_t>(qubits[k]), local.letter(k));
  return g;
}

PauliSum embed_to_global(const PauliSum& local, const std::vector<int>& qubits,
                         uint32_t n_total) {
  std::vector<PauliSum::Term> terms;
  for (const auto& [c, s] : local.terms())
    terms.emplace_back(c, embed_to_global(s, qubits, n_total));
  return PauliSum(n_total, std::move(terms));
}

PauliSum hamiltonian_sum(const ModelSpec& spec,
                         const std::vector<LocalTerm>& terms) {
  PauliSum h = PauliSum::zero(spec.n_qubits());
  for (const auto& t : terms)
    h += embed_to_global(t.op_local, t.qubits, spec.n_qubits());
  return h;
}

namespace {

std::vector<uint32_t> transposition_perm(int q, int a, int b) {
  std::vector<uint32_t> perm(q);
  for (int k = 0; k < q; ++k) perm[k] = k;
  std::swap(perm[a], perm[b]);
  return perm;
}

std::vector<uint32_t> shift_perm(int q, int by) {
  std::vector<uint32_t> perm(q);
  for (int k = 0; k < q; ++k) perm[k] = ((k + by) % q + q) % q;
  return perm;
}

}  // namespace

std::vector<ModelSymmetry> build_symmetry_generators(const ModelSpec& spec) {
  spec.validate();
  std::vector<ModelSymmetry> out;
  auto all_nodes_perm = [&](std::vector<uint32_t> perm, std::string label) {
    ModelSymmetry ms;
    ms.kind = ModelSymmetry::Kind::RegisterPermutation;
    ms.label = std::move(label);
    for (int n = 0; n < spec.n_registers(); ++n) ms.register_perms[n] = perm;
    return ms;
  };

  switch (spec.kind) {
    case ModelKind::Ising:
      out.push_back(all_nodes_perm(transposition_perm(2, 0, 1), "flip"));
      break;
    case ModelKind::Potts:
      for (int j = 0; j < spec.q; ++j) {
        int a = j, b = (j + 1) % spec.q;
        out.push_back(all_nodes_perm(
            transposition_perm(spec.q, a, b),
            "swap(" + std::to_string(a) + "," + std::to_string(b) + ")"));
      }
      break;
    case ModelKind::Clock:
      out.push_back(all_nodes_perm(shift_perm(spec.q, 1), "shift"));
      break;
    case ModelKind::Gauge: {
      const auto& lat = spec.lattice;
      for (int n = 0; n < lat.n_nodes(); ++n) {
        ModelSymmetry ms;
        ms.kind = ModelSymmetry::Kind::RegisterPermutation;
        ms.label = "gauge(" + std::to_string(n) + ")";
        // +1 on links leaving n, -1 on links entering n.
        for (int dir = 0; dir < 2; ++dir) {
          int lo = lat.link_index(n, dir);
          if (lo >= 0) ms.register_perms[lo] = shift_perm(spec.q, 1);
        }
        auto ls = lat.links();
        for (size_t i = 0; i < ls.size(); ++i) {
          if (ls[i].to == n && ls[i].from != n)
            ms.register_perms[static_cast<int>(i)] = shift_perm(spec.q, -1);
        }
        if (!ms.register_perms.empty()) out.push_back(std::move(ms));
      }
      break;
    }
    case ModelKind::Hopping: {
      ModelSymmetry u1;
      u1.kind = ModelSymmetry::Kind::U1;
      u1.label = "U(1)";
      out.push_back(std::move(u1));
      if (spec.encoding == HoppingEncoding::Imaginary) return out;
      break;
    }
  }

  ModelSymmetry tr;
  tr.kind = ModelSymmetry::Kind::Conjugation;
  tr.label = "TR";
  out.push_back(std::move(tr));
  return out;
}

SymmetryGenerator restrict_to_term(const ModelSymmetry& ms,
                                   const ModelSpec& spec,
                                   const LocalTerm& term) {
  const uint32_t w = static_cast<uint32_t>(term.qubits.size());
  switch (ms.kind) {
    case ModelSymmetry::Kind::Conjugation:
      return SymmetryGenerator::conjugation(w);
    case ModelSymmetry::Kind::U1:
      return SymmetryGenerator::u1_family(w);
    case ModelSymmetry::Kind::RegisterPermutation: {
      const int p = spec.qubits_per_register();
      const int nr = static_cast<int>(term.registers.size());
      const uint64_t dim = uint64_t{1} << w;
      std::vector<uint32_t> perm(dim);
      for (uint64_t x = 0; x < dim; ++x) {
        uint64_t y = 0;
        for (int k = 0; k < nr; ++k) {
          uint32_t v = static_cast<uint32_t>(
              (x >> (p * (nr - 1 - k))) & ((uint64_t{1} << p) - 1));
          auto it = ms.register_perms.find(term.registers[k]);
          if (it != ms.register_perms.end()) v = it->second[v];
          y |= uint64_t{v} << (p * (nr - 1 - k));
        }
        perm[x] = static_cast<uint32_t>(y);
      }
      return SymmetryGenerator::permutation(w, std::move(perm), {}, ms.label);
    }
  }
  throw std::logic_error("restrict_to_term: unknown kind");
}

GlobalAction global_action(const ModelSymmetry& ms, const ModelSpec& spec,
                           double alpha) {
  const int n = spec.n_qubits();
  const uint64_t dim = uint64_t{1} << n;
  GlobalAction ga;
  ga.target.resize(dim);
  ga.phase.assign(dim, cplx{1.0, 0.0});
  switch (ms.kind) {
    case ModelSymmetry::Kind::U1:
      for (uint64_t s = 0; s < dim; ++s) {
        ga.target[s] = s;
        double a = alpha * std::popcount(s);
        ga.phase[s] = cplx{std::cos(a), std::sin(a)};
      }
      break;
    case ModelSymmetry::Kind::RegisterPermutation: {
      const int p = spec.qubits_per_register();
      const int nr = spec.n_registers();
      for (uint64_t s = 0; s < dim; ++s) {
        uint64_t t = 0;
        for (int k = 0; k < nr; ++k) {
          uint32_t v = static_cast<uint32_t>((s >> (p * (nr - 1 - k))) &
                                             ((uint64_t{1} << p) - 1));
          auto it = ms.register_perms.find(k);
          if (it != ms.register_perms.end()) v = it->second[v];
          t |= uint64_t{v} << (p * (nr - 1 - k));
        }
        ga.target[s] = t;
      }
      break;
    }
    case ModelSymmetry::Kind::Conjugation:
      throw std::invalid_argument(
          "global_action: conjugation has no basis-map representation");
  }
  return ga;
}

ReductionMode reduction_mode_from_string(const std::string& s) {
  if (s == "none") return ReductionMode::None;
  if (s == "tr_only") return ReductionMode::TrOnly;
  if (s == "internal_plus_tr") return ReductionMode::InternalPlusTr;
  if (s == "symmetric_combo") return ReductionMode::SymmetricCombo;
  throw std::invalid_argument("unknown reduction mode: " + s);
}

std::string to_string(ReductionMode m) {
  switch (m) {
    case ReductionMode::None: return "none";
    case ReductionMode::TrOnly: return "tr_only";
    case ReductionMode::InternalPlusTr: return "internal_plus_tr";
    case ReductionMode::SymmetricCombo: return "symmetric_combo";
  }
  return "?";
}

std::vector<GeneratorBasis> relevant_basis(const ModelSpec& spec,
                                           ReductionMode mode) {
  spec.validate();
  auto terms = build_hamiltonian(spec);
  auto syms = build_symmetry_generators(spec);
  std::vector<GeneratorBasis> out;
  out.reserve(terms.size());

  for (const auto& term : terms) {
    const uint32_t w = static_cast<uint32_t>(term.qubits.size());
    if (mode == ReductionMode::None && w > 4)
      throw std::invalid_argument(
          "relevant_basis: mode none limited to 4-qubit terms");
    if (w > 8)
      throw std::invalid_argument("relevant_basis: term support too large");
    auto basis = full_basis(w);

    GeneratorBasis gb;
    switch (mode) {
      case ReductionMode::None: {
        for (const auto& s : basis)
          if (!s.is_identity()) gb.elements.emplace_back(s);
        gb.provenance = "none";
        break;
      }
      case ReductionMode::TrOnly: {
        for (const auto& s : tr_filter(basis)) gb.elements.emplace_back(s);
        gb.provenance = "TR";
        break;
      }
      case ReductionMode::InternalPlusTr:
      case ReductionMode::SymmetricCombo: {
        if (w > 6)
          throw std::invalid_argument(
              "relevant_basis: constraint solve limited to 6-qubit terms");
        std::vector<SymmetryGenerator> gens;
        for (const auto& ms : syms)
          gens.push_back(restrict_to_term(ms, spec, term));
        GeneratorBasis combos =
            exclude_identity(solve_constraints(gens, basis));
        if (mode == ReductionMode::SymmetricCombo ||
            spec.kind == ModelKind::Hopping) {
          gb = std::move(combos);
        } else {
          for (const auto& s : combos.support_strings())
            gb.elements.emplace_back(s);
          gb.provenance = combos.provenance;
        }
        break;
      }
    }
    out.push_back(std::move(gb));
  }
  return out;
}

}  // namespace symqite
