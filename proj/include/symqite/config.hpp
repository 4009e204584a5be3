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

#include <map>
#include <string>
#include <vector>

#include "symqite/lattice.hpp"
#include "symqite/varqite.hpp"

namespace symqite {

/// Experiment description: a flat dotted-key map resolved into typed pieces.
/// Accepts either "key = value" text (one per line, '#' comments) or a nested
/// JSON object with the same key structure.
struct ExperimentConfig {
  ModelSpec model;
  ReductionMode reduction = ReductionMode::InternalPlusTr;
  int layers = 1;
  EvolutionConfig evolution;
  double oracle_beta_max = -1.0;   // < 0: defaults to 2 * tau_max
  double oracle_beta_step = -1.0;  // < 0: defaults to 2 * delta_tau
  std::string out_dir = "out";
  std::vector<std::string> formats = {"csv", "json"};

  /// Every key after defaulting, in sorted order; echoed into manifests.
  std::map<std::string, std::string> resolved;

  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig from_text(const std::string& text);
  static ExperimentConfig from_keys(std::map<std::string, std::string> keys);

  std::string canonical_text() const;
};

/// FNV-1a 64-bit over the canonical config text; stamped into run manifests.
uint64_t content_hash(const std::string& text);

}  // namespace symqite
