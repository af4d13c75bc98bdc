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

// Work statistics of the sudden quench under the two-point measurement
// scheme: characteristic function, closed-form mean and variance, and
// numerically differentiated cumulants.

#include <array>
#include <complex>
#include <vector>

#include "xyquench/model.hpp"

namespace xyq {

using cplx = std::complex<double>;

struct CharFnValue {
  cplx u;
  cplx value;      // chi(u)
  cplx log_value;  // sum over modes of the principal log of each mode factor
  bool beyond_strip = false;  // |Im u| > beta
};

/// One term of a mode's characteristic-function bracket, already divided by
/// the mode partition function: exp(log_weight + i u work).
struct CharFnTerm {
  double log_weight;
  double work;
};

/// The six terms of a (k, -k) bracket: the |00> and |11> initial states each
/// split over cos^2(theta) / sin^2(theta) final states; the two cross states
/// contribute u-independent weights e^{+-4 beta D sin k}.
std::array<CharFnTerm, 6> char_fn_terms(const ModeEntry& mode, double beta);

/// Evaluates chi(u) repeatedly for one setup without rebuilding the mode table.
class CharacteristicFunction {
 public:
  explicit CharacteristicFunction(const QuenchSetup& setup);
  CharacteristicFunction(const QuenchSetup& setup, const ModeTable& table);

  /// Throws NumericError naming the offending mode if a term is not finite.
  CharFnValue operator()(cplx u) const;
  /// ln chi(u) only; skips the final exponential.
  cplx log_at(cplx u) const;

  double beta() const { return beta_; }

 private:
  double beta_;
  std::vector<std::array<CharFnTerm, 6>> modes_;
};

CharFnValue char_fn(const QuenchSetup& setup, cplx u);

struct WorkMoments {
  double mean;
  double variance;
};

/// Per-mode closed-form <w>_k and sigma_k^2.
WorkMoments mode_moments(const ModeEntry& mode, double h0, double hf, double beta);

/// <W> = sum_k <w>_k and Sigma^2 = sum_k sigma_k^2, summed in grid order.
WorkMoments mean_and_variance(const QuenchSetup& setup);
WorkMoments mean_and_variance(const QuenchSetup& setup, const ModeTable& table);

struct CumulantEstimate {
  int order;
  double value;
  double error;  // Richardson error estimate
};

/// K_n = (-i)^n d^n/du^n ln chi(u) at u = 0 for n = 1..n_max (n_max <= 4),
/// by central differences with Richardson extrapolation.
std::vector<CumulantEstimate> cumulants_numeric(const QuenchSetup& setup, int n_max);

}  // namespace xyq
