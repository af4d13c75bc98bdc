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

#include <optional>
#include <vector>

#include "xyquench/model.hpp"

namespace xyq {

struct EntropyReport {
  double s_irr = 0.0;         // beta <W> + sum_k ln[Z_k(hf) / Z_k(h0)]
  std::optional<double> s_irr_relent;  // S(rho_eq(h0) || rho_eq(hf)), block by block
  std::vector<double> per_mode;  // filled when requested, grid order

  /// Irreversible work <W_irr> = s_irr / beta.
  double irreversible_work(double beta) const { return s_irr / beta; }
};

/// Per-mode contribution beta <w>_k + ln[(cosh 2b eps~ + cosh 4b D sin k) /
/// (cosh 2b eps + cosh 4b D sin k)], with the log ratio formed without
/// cancellation for small quenches.
double mode_irr_entropy(const ModeEntry& mode, double h0, double hf, double beta);

struct EntropyOptions {
  bool per_mode = false;
  bool relative_route = true;  // also evaluate irr_entropy_relative
};

/// Entropy production from mean work and free-energy change. Unless disabled,
/// the relative-entropy route is evaluated alongside and stored in the report.
EntropyReport irr_entropy(const QuenchSetup& setup, const EntropyOptions& options = {});

/// Relative entropy between the initial and post-quench Gibbs states, built
/// from explicit 4x4 density matrices of each (k, -k) block.
double irr_entropy_relative(const QuenchSetup& setup);

/// Delta S_irr / L for each chain length in `lengths`.
std::vector<double> extensivity_check(const ModelParams& params, double h0, double hf, double beta,
                                      const std::vector<int>& lengths);

}  // namespace xyq
