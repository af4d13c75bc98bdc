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

// Self-verification suites: fluctuation theorems, two-route identities,
// brute-force oracle agreement and the angle-branch guard.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xyquench/model.hpp"

namespace xyq {

/// Random quench setups over the documented parameter box.
class SetupSampler {
 public:
  explicit SetupSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  /// Log-uniform on [lo, hi].
  double log_uniform(double lo, double hi);
  int even_L(int lo, int hi);
  /// L in [L_lo, L_hi] even, gamma, D in [-1, 1], beta log-uniform in
  /// [0.01, 100], h0 and hf in [0, 2.5].
  QuenchSetup setup(int L_lo, int L_hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// |a - b| / max(|b|, scale)
double relative_error(double a, double b, double scale = 0.0);

struct SuiteResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed deviation
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Build the branch-guard mode tables with the single-argument arctan.
  bool inject_naive_arctan = false;
};

SuiteResult suite_jarzynski(std::uint64_t seed);
SuiteResult suite_crooks(std::uint64_t seed);
SuiteResult suite_entropy_routes(std::uint64_t seed);
SuiteResult suite_oracle_moments(std::uint64_t seed);
SuiteResult suite_eigenstate_map(std::uint64_t seed);
SuiteResult suite_branch_guard(std::uint64_t seed, AngleConvention convention);
SuiteResult suite_extensivity();

std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// Fixed-width table, one line per suite.
std::string format_verification_table(const std::vector<SuiteResult>& results);
/// Machine-readable summary (JSON object with a "suites" array and "passed").
std::string verification_json(const std::vector<SuiteResult>& results, const VerifyOptions& options);

}  // namespace xyq
