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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "symqite/ansatz.hpp"
#include "symqite/config.hpp"
#include "symqite/lattice.hpp"
#include "symqite/oracle.hpp"
#include "symqite/validate.hpp"
#include "symqite/varqite.hpp"

namespace {

using namespace symqite;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

struct CommonArgs {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<std::string> out_dir;
};

ExperimentConfig load_config(const CommonArgs& args) {
  ExperimentConfig cfg = args.config_path.empty()
                             ? ExperimentConfig::from_text("")
                             : ExperimentConfig::from_file(args.config_path);
  if (args.seed) {
    cfg.evolution.rng_seed = *args.seed;
    cfg.resolved["evolution.rng_seed"] = std::to_string(*args.seed);
  }
  if (args.out_dir) {
    cfg.out_dir = *args.out_dir;
    cfg.resolved["outputs.dir"] = *args.out_dir;
  }
  return cfg;
}

int cmd_reduce(const ExperimentConfig& cfg) {
  auto terms = build_hamiltonian(cfg.model);
  auto bases = relevant_basis(cfg.model, cfg.reduction);
  for (size_t t = 0; t < terms.size(); ++t) {
    std::cout << "# " << terms[t].label << " [" << bases[t].provenance
              << "]\n";
    for (const auto& e : bases[t].elements) std::cout << e.text() << "\n";
  }
  return kExitOk;
}

int cmd_counts(const ExperimentConfig& cfg) {
  auto terms = build_hamiltonian(cfg.model);
  auto bases = relevant_basis(cfg.model, cfg.reduction);
  Ansatz a = build_ansatz(terms, bases, cfg.layers, cfg.model.n_qubits());
  CountsReport r = counts_report(a);
  std::cout << "model " << cfg.model.name() << "\n"
            << "mode " << to_string(cfg.reduction) << "\n"
            << "layers " << cfg.layers << "\n"
            << "n_params " << r.n_params << "\n"
            << "naive_cnots "
            << (r.naive_cnots ? std::to_string(*r.naive_cnots) : "n/a")
            << "\n";
  return kExitOk;
}

void write_manifest(const ExperimentConfig& cfg, const std::string& command,
                    const std::vector<std::string>& outputs,
                    const std::filesystem::path& path) {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = nlohmann::json::object();
  for (const auto& [k, v] : cfg.resolved) j["config"][k] = v;
  j["seed"] = cfg.evolution.rng_seed;
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(
                    content_hash(cfg.canonical_text())));
  j["content_hash"] = hash;
  j["outputs"] = outputs;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

int cmd_evolve(const ExperimentConfig& cfg) {
  auto terms = build_hamiltonian(cfg.model);
  auto bases = relevant_basis(cfg.model, cfg.reduction);
  Ansatz a = build_ansatz(terms, bases, cfg.layers, cfg.model.n_qubits());
  PauliSum h = hamiltonian_sum(cfg.model, terms);
  EvolutionTrace trace = evolve(a, cfg.evolution, h);

  std::filesystem::create_directories(cfg.out_dir);
  std::vector<std::string> outputs;
  bool csv = std::count(cfg.formats.begin(), cfg.formats.end(), "csv");
  bool json = std::count(cfg.formats.begin(), cfg.formats.end(), "json");
  if (csv) {
    std::filesystem::path p = std::filesystem::path(cfg.out_dir) / "trace.csv";
    std::ofstream out(p);
    write_trace_csv(trace, out);
    outputs.push_back(p.string());
  }
  if (json) {
    std::filesystem::path p =
        std::filesystem::path(cfg.out_dir) / "manifest.json";
    write_manifest(cfg, "evolve", outputs, p);
    outputs.push_back(p.string());
  }
  std::cout << "rows " << trace.rows.size() << "\n";
  if (!trace.rows.empty()) {
    const auto& last = trace.rows.back();
    std::cout << "final beta " << last.beta << " energy " << last.energy
              << "\n";
  }
  for (const auto& o : outputs) std::cout << "wrote " << o << "\n";
  if (trace.aborted) {
    std::cerr << "evolution aborted: non-finite parameters\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_oracle(const ExperimentConfig& cfg) {
  auto terms = build_hamiltonian(cfg.model);
  PauliSum h = hamiltonian_sum(cfg.model, terms);
  ExactHamiltonian exact(h);
  const double beta_max = cfg.oracle_beta_max >= 0
                              ? cfg.oracle_beta_max
                              : 2.0 * cfg.evolution.tau_max;
  const double beta_step = cfg.oracle_beta_step > 0
                               ? cfg.oracle_beta_step
                               : 2.0 * cfg.evolution.delta_tau;
  const int steps = static_cast<int>(std::llround(beta_max / beta_step));

  std::filesystem::create_directories(cfg.out_dir);
  std::filesystem::path p = std::filesystem::path(cfg.out_dir) / "oracle.csv";
  std::ofstream out(p);
  out << "beta,energy";
  for (size_t i = 0; i < cfg.evolution.observables.size(); ++i)
    out << ",obs" << i;
  out << "\n";
  char buf[40];
  for (int k = 0; k <= steps; ++k) {
    const double beta = k * beta_step;
    std::snprintf(buf, sizeof buf, "%.12g", beta);
    out << buf;
    std::snprintf(buf, sizeof buf, "%.12g", exact.gibbs_expectation(h, beta));
    out << ',' << buf;
    for (const auto& o : cfg.evolution.observables) {
      std::snprintf(buf, sizeof buf, "%.12g", exact.gibbs_expectation(o, beta));
      out << ',' << buf;
    }
    out << "\n";
  }
  std::cout << "wrote " << p.string() << "\n";
  return kExitOk;
}

int cmd_validate(const ExperimentConfig& cfg) {
  auto results = run_validation_suite();
  std::string report = validation_report_json(results);
  std::filesystem::create_directories(cfg.out_dir);
  std::filesystem::path p =
      std::filesystem::path(cfg.out_dir) / "validation.json";
  std::ofstream out(p);
  out << report;
  std::cout << report;
  for (const auto& r : results)
    if (!r.pass) return kExitValidation;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry-reduced variational imaginary-time evolution"};
  app.require_subcommand(1);

  CommonArgs args;
  app.add_option("--config", args.config_path, "experiment config file");
  uint64_t seed_value = 0;
  auto* seed_opt =
      app.add_option("--seed", seed_value, "override evolution.rng_seed");
  std::string out_value;
  auto* out_opt = app.add_option("--out", out_value, "override outputs.dir");

  auto* reduce = app.add_subcommand(
      "reduce", "print the reduced generator basis per local term");
  auto* counts = app.add_subcommand(
      "counts", "print ansatz parameter and naive CNOT counts");
  auto* evolve = app.add_subcommand(
      "evolve", "run the parameter evolution and write the trace");
  auto* oracle = app.add_subcommand(
      "oracle", "write exact thermal expectations over a beta grid");
  auto* validate =
      app.add_subcommand("validate", "run the property-check suite");
  for (auto* sub : {reduce, counts, evolve, oracle, validate})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) args.seed = seed_value;
  if (*out_opt) args.out_dir = out_value;

  try {
    ExperimentConfig cfg = load_config(args);
    if (reduce->parsed()) return cmd_reduce(cfg);
    if (counts->parsed()) return cmd_counts(cfg);
    if (evolve->parsed()) return cmd_evolve(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (validate->parsed()) return cmd_validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitConfig;
}
