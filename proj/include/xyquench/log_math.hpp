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

// Overflow-safe hyperbolic and log-sum-exp helpers. Arguments of order
// 2*beta*eps reach several hundred at beta=100, far past where cosh overflows.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>

namespace xyq::logmath {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// ln cosh x = |x| + ln(1 + e^{-2|x|}) - ln 2
inline double log_cosh(double x) {
  const double a = std::fabs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

/// ln sinh x for x > 0.
inline double log_sinh(double x) {
  return x + std::log(-std::expm1(-2.0 * x)) - std::numbers::ln2;
}

/// ln(e^a + e^b)
inline double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// ln(cosh a + cosh b)
inline double log_cosh_sum(double a, double b) {
  return log_add_exp(log_cosh(a), log_cosh(b));
}

inline double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return kNegInf;
  const double m = *std::max_element(xs.begin(), xs.end());
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace xyq::logmath
