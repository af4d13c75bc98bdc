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

// Parameter sweeps over (L, gamma, beta, D, h0) and detection of the critical
// line from minima of d<W>/dh0 and dSigma^2/dh0.

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "xyquench/config.hpp"

namespace xyq {

inline constexpr int kDefaultL = 2000;

struct SweepConfig {
  std::vector<int> L{kDefaultL};
  std::vector<double> gamma{0.5};
  std::vector<double> beta{100.0};
  std::vector<double> D{0.0};
  std::vector<double> h0{1.0};
  double dh = 0.01;
  bool delta_f = false;  // emit the delta_F column
  unsigned workers = 0;  // 0 = hardware concurrency

  /// Reads keys L, gamma, beta, D, h0, dh, delta_F, workers.
  static SweepConfig from(const KeyValueConfig& cfg);
  std::size_t point_count() const;
};

struct SweepRow {
  double h0;
  double hf;
  double D;
  double gamma;
  double beta;
  int L;
  double mean_work;
  double variance;
  double s_irr;
  std::optional<double> d_mean_dh0;
  std::optional<double> d_var_dh0;
  std::optional<double> delta_F;
};

/// One row per grid point in (L, gamma, beta, D, h0) order, h0 fastest.
/// Derivatives are filled at interior h0 points when h0 has >= 3 values.
/// Output does not depend on the worker count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, const SweepConfig& config,
                     const std::string& header_comments = {});

/// h_c = 1 for |D| < |gamma|/2, else sqrt(4 D^2 - gamma^2 + 1).
double critical_field(double gamma, double D);

struct LocalMinimum {
  double h0;      // refined by a parabola through the three grid points
  double value;   // derivative value at the refined point
  std::size_t grid_index;
};

/// Strict interior local minima of y(x), deepest first.
std::vector<LocalMinimum> find_local_minima(std::span<const double> x, std::span<const double> y);

/// Central differences dy/dx on the interior of the grid (size n - 2).
std::vector<double> central_derivative(std::span<const double> x, std::span<const double> y);

struct CriticalEstimate {
  double D;
  std::optional<double> h_star_mean;
  std::optional<double> h_star_var;
  double h_theory;
  std::vector<LocalMinimum> mean_minima;  // all, deepest first
  std::vector<LocalMinimum> var_minima;
};

/// For each D: derivatives of <W> and Sigma^2 along the h0 grid and their
/// deepest local minima. gamma, beta and L must be single values.
std::vector<CriticalEstimate> critical_scan(const SweepConfig& config);

void write_critical_csv(std::ostream& os, std::span<const CriticalEstimate> estimates, bool verbose,
                        const std::string& header_comments = {});

}  // namespace xyq
