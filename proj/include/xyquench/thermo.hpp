// Copyright 2026 The xyquench Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>

#include "xyquench/model.hpp"

namespace xyq {

/// Occupation states of a (k, -k) block, ordered (n_k, n_{-k}):
/// |00>, |10>, |01>, |11>.
inline constexpr std::array<std::array<int, 2>, 4> kBlockOccupations{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

/// E(n_k, n_-k) = 2 eps (n_k + n_-k - 1) + 4 D sin k (n_k - n_-k)
inline double block_energy(double eps, double dsin, int n_k, int n_mk) {
  return 2.0 * eps * (n_k + n_mk - 1) + 4.0 * dsin * (n_k - n_mk);
}

/// ln[2 cosh(2 beta eps) + 2 cosh(4 beta D sin k)], the log partition function
/// of one (k, -k) block.
double mode_log_partition(double eps, double dsin, double beta);

struct ModeGibbs {
  double k;
  std::array<double, 4> logw;  // -beta * E, same order as kBlockOccupations
  double logz_mode;

  double probability(std::size_t state) const;
  double log_probability(std::size_t state) const { return logw[state] - logz_mode; }
};

/// Pre-quench Gibbs weights of the block at wave vector k.
ModeGibbs mode_gibbs(const QuenchSetup& setup, double k);
ModeGibbs mode_gibbs(double k, double h, double gamma, double D, double beta);

struct LogPartitionRoutes {
  double single_particle;  // L ln 2 + sum over +-k of ln cosh(beta zeta)
  double block_sum;        // sum over k > 0 of the four-state block sums
};

LogPartitionRoutes log_partition_routes(const ModelParams& params, double h, double beta);

/// ln Z(h). Both routes are evaluated and must agree to 1e-10 (relative to
/// max(1, |ln Z|)); a mismatch throws NumericError.
double log_partition(const ModelParams& params, double h, double beta);

/// Delta F = -(ln Z(hf) - ln Z(h0)) / beta.
double delta_free_energy(const QuenchSetup& setup);

}  // namespace xyq
