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

#include <string>
#include <vector>

namespace symqite {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Property suite behind the `validate` subcommand: c-matrix realness and
/// orthogonality (with a corrupted-matrix negative control), generating-set
/// closure, the TR counting law, reduced string sets and generator-count
/// tables, Hamiltonian/symmetry commutation, encoding realness, parameter
/// count identities, and pseudo-inverse residual monotonicity.
std::vector<CheckResult> run_validation_suite();

std::string validation_report_json(const std::vector<CheckResult>& results);

}  // namespace symqite
