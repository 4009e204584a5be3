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

#include "symqite/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symqite {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

void flatten_json(const nlohmann::json& j, const std::string& prefix,
                  std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten_json(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_string())
    out[prefix] = j.get<std::string>();
  else
    out[prefix] = j.dump();
}

std::map<std::string, std::string> parse_flat(const std::string& text) {
  std::map<std::string, std::string> keys;
  std::string t = trim(text);
  if (!t.empty() && (t[0] == '{' || t[0] == '[')) {
    flatten_json(nlohmann::json::parse(t), "", keys);
    return keys;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config: empty key");
    keys[key] = value;
  }
  return keys;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
  return from_keys(parse_flat(text));
}

ExperimentConfig ExperimentConfig::from_keys(
    std::map<std::string, std::string> keys) {
  ExperimentConfig cfg;
  auto take = [&](const std::string& key, const std::string& fallback) {
    auto it = keys.find(key);
    return it == keys.end() ? fallback : it->second;
  };
  auto take_double = [&](const std::string& key, double fallback) {
    auto it = keys.find(key);
    if (it == keys.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: bad number for " + key);
    }
  };
  auto take_int = [&](const std::string& key, int fallback) {
    auto it = keys.find(key);
    if (it == keys.end()) return fallback;
    try {
      return std::stoi(it->second);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: bad integer for " + key);
    }
  };

  cfg.model.kind = model_kind_from_string(take("model.kind", "ising"));
  cfg.model.q = take_int("model.Q", cfg.model.kind == ModelKind::Ising ? 2 : 4);
  cfg.model.lattice.lx = take_int("model.Lx", 2);
  cfg.model.lattice.ly =
      take_int("model.Ly", cfg.model.kind == ModelKind::Hopping ? 1 : 2);
  std::string boundary = take(
      "model.boundary",
      cfg.model.kind == ModelKind::Gauge ? "periodic" : "open");
  if (boundary == "open")
    cfg.model.lattice.boundary = Boundary::Open;
  else if (boundary == "periodic")
    cfg.model.lattice.boundary = Boundary::Periodic;
  else
    throw std::invalid_argument("config: bad model.boundary " + boundary);
  std::string enc = take("model.encoding_variant", "real");
  if (enc == "real")
    cfg.model.encoding = HoppingEncoding::Real;
  else if (enc == "imaginary")
    cfg.model.encoding = HoppingEncoding::Imaginary;
  else
    throw std::invalid_argument("config: bad model.encoding_variant " + enc);

  cfg.reduction =
      reduction_mode_from_string(take("reduction_mode", "internal_plus_tr"));
  cfg.layers = take_int("ansatz.L", 1);
  if (cfg.layers < 1) throw std::invalid_argument("config: ansatz.L >= 1");

  cfg.evolution.delta_tau = take_double("evolution.delta_tau", 0.01);
  cfg.evolution.tau_max = take_double("evolution.tau_max", 1.0);
  cfg.evolution.svd_cutoff = take_double("evolution.svd_cutoff", 1e-8);
  cfg.evolution.noise_sigma = take_double("evolution.noise_sigma", 0.0);
  cfg.evolution.rng_seed =
      static_cast<uint64_t>(take_double("evolution.rng_seed", 0));
  std::string obs = take("evolution.observables", "");
  if (!obs.empty()) {
    std::istringstream ss(obs);
    std::string item;
    while (std::getline(ss, item, ';')) {
      item = trim(item);
      if (!item.empty())
        cfg.evolution.observables.push_back(PauliSum::from_text(item));
    }
  }
  cfg.evolution.validate();

  cfg.oracle_beta_max = take_double("oracle.beta_max", -1.0);
  cfg.oracle_beta_step = take_double("oracle.beta_step", -1.0);
  cfg.out_dir = take("outputs.dir", "out");
  std::string formats = take("outputs.formats", "csv,json");
  cfg.formats.clear();
  std::istringstream fs(formats);
  std::string f;
  while (std::getline(fs, f, ',')) {
    f = trim(f);
    if (f != "csv" && f != "json")
      throw std::invalid_argument("config: unknown output format " + f);
    cfg.formats.push_back(f);
  }

  cfg.model.validate();
  // reduction_mode none keeps the full 4^w pool per term; guard the width.
  if (cfg.reduction == ReductionMode::None) {
    for (const auto& t : build_hamiltonian(cfg.model))
      if (t.qubits.size() > 4)
        throw std::invalid_argument(
            "config: reduction_mode none requires terms on <= 4 qubits");
  }

  char buf[64];
  auto put_double = [&](const std::string& k, double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    cfg.resolved[k] = buf;
  };
  cfg.resolved["model.kind"] = to_string(cfg.model.kind);
  cfg.resolved["model.Q"] = std::to_string(cfg.model.q);
  cfg.resolved["model.Lx"] = std::to_string(cfg.model.lattice.lx);
  cfg.resolved["model.Ly"] = std::to_string(cfg.model.lattice.ly);
  cfg.resolved["model.boundary"] =
      cfg.model.lattice.boundary == Boundary::Open ? "open" : "periodic";
  cfg.resolved["model.encoding_variant"] =
      cfg.model.encoding == HoppingEncoding::Real ? "real" : "imaginary";
  cfg.resolved["reduction_mode"] = to_string(cfg.reduction);
  cfg.resolved["ansatz.L"] = std::to_string(cfg.layers);
  put_double("evolution.delta_tau", cfg.evolution.delta_tau);
  put_double("evolution.tau_max", cfg.evolution.tau_max);
  put_double("evolution.svd_cutoff", cfg.evolution.svd_cutoff);
  put_double("evolution.noise_sigma", cfg.evolution.noise_sigma);
  cfg.resolved["evolution.rng_seed"] = std::to_string(cfg.evolution.rng_seed);
  std::string obs_echo;
  for (const auto& o : cfg.evolution.observables) {
    if (!obs_echo.empty()) obs_echo += "; ";
    obs_echo += o.text();
  }
  cfg.resolved["evolution.observables"] = obs_echo;
  put_double("oracle.beta_max", cfg.oracle_beta_max);
  put_double("oracle.beta_step", cfg.oracle_beta_step);
  cfg.resolved["outputs.dir"] = cfg.out_dir;
  std::string fmts;
  for (const auto& fm : cfg.formats) {
    if (!fmts.empty()) fmts += ",";
    fmts += fm;
  }
  cfg.resolved["outputs.formats"] = fmts;

  for (const auto& [k, v] : keys)
    if (!cfg.resolved.count(k))
      throw std::invalid_argument("config: unknown key " + k);
  return cfg;
}

std::string ExperimentConfig::canonical_text() const {
  std::string out;
  for (const auto& [k, v] : resolved) out += k + " = " + v + "\n";
  return out;
}

uint64_t content_hash(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace symqite
