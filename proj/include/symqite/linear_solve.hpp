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

#include <Eigen/Dense>

namespace symqite {

struct PinvSolution {
  Eigen::VectorXd x;
  int rank = 0;
  bool all_truncated = false;  // every eigenvalue fell below the cutoff
  double residual = 0.0;       // ||M x - v||_2
};

/// Rank-truncated spectral solve of the symmetric system M x = v:
/// x = sum_{d_j > cutoff * d_max} <j|v>/d_j |j> over eigenpairs of M.
PinvSolution pinv_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                        double rel_cutoff);

}  // namespace symqite
