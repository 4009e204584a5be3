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

#include "symqite/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symqite {

Ansatz build_ansatz(const std::vector<LocalTerm>& terms,
                    const std::vector<GeneratorBasis>& bases, int layers,
                    int n_qubits) {
  if (terms.size() != bases.size())
    throw std::invalid_argument("build_ansatz: terms/bases size mismatch");
  if (layers < 1) throw std::invalid_argument("build_ansatz: layers < 1");
  for (size_t t = 0; t < terms.size(); ++t)
    if (bases[t].elements.empty())
      throw std::invalid_argument("build_ansatz: empty basis for term " +
                                  terms[t].label);

  // Ladder arrangement: terms ordered by (min qubit, max qubit).
  std::vector<size_t> order(terms.size());
  std::iota(order.begin(), order.end(), size_t{0});
  auto key = [&](size_t t) {
    auto [lo, hi] = std::minmax_element(terms[t].qubits.begin(),
                                        terms[t].qubits.end());
    return std::pair<int, int>(*lo, *hi);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return key(a) < key(b); });

  Ansatz a;
  a.n_qubits = n_qubits;
  a.layers = layers;
  for (int l = 0; l < layers; ++l) {
    for (size_t t : order) {
      for (const auto& g : bases[t].elements) {
        AnsatzBlock b;
        b.generator = g;
        b.qubits = terms[t].qubits;
        b.param = a.n_params++;
        b.term = static_cast<int>(t);
        b.layer = l;
        a.blocks.push_back(std::move(b));
      }
    }
  }
  return a;
}

namespace {

// Basis-change rotations taking the letter to Z: Ry(-pi/2) for X,
// Rx(pi/2) for Y.
void push_basis_change(std::vector<Gate>& gates, Letter l, int qubit,
                       bool inverse) {
  const double half_pi = M_PI / 2.0;
  if (l == Letter::X)
    gates.push_back({Gate::Type::RY, qubit, 0, inverse ? half_pi : -half_pi,
                     -1, 0.0});
  else if (l == Letter::Y)
    gates.push_back({Gate::Type::RX, qubit, 0, inverse ? -half_pi : half_pi,
                     -1, 0.0});
}

}  // namespace

GateList compile_naive(const Ansatz& a) {
  GateList out;
  for (const auto& b : a.blocks) {
    if (b.generator.size() != 1)
      throw NotNaiveCompilable("block " + std::to_string(b.param) +
                               " is not naive-compilable: generator " +
                               b.generator.text());
    const auto& [coeff, local] = b.generator.terms()[0];
    if (std::abs(coeff.imag()) > 1e-12)
      throw NotNaiveCompilable("block generator has complex coefficient");

    std::vector<std::pair<int, Letter>> support;  // (global qubit, letter)
    for (uint32_t k = 0; k < local.n_qubits(); ++k)
      if (local.letter(k) != Letter::I)
        support.emplace_back(b.qubits[k], local.letter(k));
    if (support.empty()) continue;  // identity: global phase only

    for (auto [q, l] : support) push_basis_change(out.gates, l, q, false);
    for (size_t k = 0; k + 1 < support.size(); ++k)
      out.gates.push_back({Gate::Type::CNOT, support[k].first,
                           support[k + 1].first, 0.0, -1, 0.0});
    out.gates.push_back({Gate::Type::RZ, support.back().first, 0, 0.0, b.param,
                         2.0 * coeff.real()});
    for (size_t k = support.size() - 1; k-- > 0;)
      out.gates.push_back({Gate::Type::CNOT, support[k].first,
                           support[k + 1].first, 0.0, -1, 0.0});
    for (auto it = support.rbegin(); it != support.rend(); ++it)
      push_basis_change(out.gates, it->second, it->first, true);
  }
  for (const auto& g : out.gates)
    if (g.type == Gate::Type::CNOT) ++out.cnot_count;
  return out;
}

CountsReport counts_report(const Ansatz& a) {
  CountsReport r;
  r.n_params = a.n_params;
  try {
    r.naive_cnots = compile_naive(a).cnot_count;
  } catch (const NotNaiveCompilable&) {
    r.naive_cnots.reset();
  }
  return r;
}

}  // namespace symqite
