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

#include "xyquench/entropy.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "xyquench/errors.hpp"
#include "xyquench/log_math.hpp"
#include "xyquench/thermo.hpp"
#include "xyquench/work_stats.hpp"

namespace xyq {

double mode_irr_entropy(const ModeEntry& m, double h0, double hf, double beta) {
  using namespace logmath;
  const double a = 2.0 * beta * m.eps0;
  const double af = 2.0 * beta * m.epsf;
  const double b = 4.0 * beta * m.dsin;
  const double den = log_cosh_sum(a, b);

  // eps~ - eps = (hf - h0)(hf + h0 - 2 cos k) / (eps~ + eps)
  const double eps_sum = m.epsf + m.eps0;
  const double deps = eps_sum > 0.0 ? (hf - h0) * (hf + h0 - 2.0 * std::cos(m.k)) / eps_sum : 0.0;
  const double half_diff = beta * deps;
  const double half_sum = 0.5 * (a + af);

  double log_ratio = 0.0;
  if (half_diff != 0.0 && half_sum > 0.0) {
    // ratio - 1 = 2 sinh(half_sum) sinh(half_diff) / (cosh a + cosh b)
    const double log_x = std::numbers::ln2 + log_sinh(half_sum) + log_sinh(std::fabs(half_diff)) - den;
    if (log_x < -std::numbers::ln2) {
      log_ratio = std::log1p(std::copysign(std::exp(log_x), half_diff));
    } else {
      log_ratio = log_cosh_sum(af, b) - den;
    }
  }
  return beta * mode_moments(m, h0, hf, beta).mean + log_ratio;
}

namespace {

double mode_relative_entropy(const ModeEntry& m, double beta) {
  using Mat = Eigen::Matrix4cd;
  const double lz0 = mode_log_partition(m.eps0, m.dsin, beta);
  const double lzf = mode_log_partition(m.epsf, m.dsin, beta);

  Eigen::Vector4d log_p0;
  Eigen::Vector4d log_pf;
  for (std::size_t s = 0; s < kBlockOccupations.size(); ++s) {
    const auto [nk, nmk] = kBlockOccupations[s];
    log_p0[s] = -beta * block_energy(m.eps0, m.dsin, nk, nmk) - lz0;
    log_pf[s] = -beta * block_energy(m.epsf, m.dsin, nk, nmk) - lzf;
  }

  // overlap(m, n) = <m~|n>: post-quench states (rows) against pre-quench
  // states (columns). |00> and |11> mix through theta, cross states map 1:1.
  const double c = std::cos(m.theta);
  const double s = std::sin(m.theta);
  const std::complex<double> is{0.0, s};
  Mat overlap = Mat::Identity();
  overlap(0, 0) = c;
  overlap(0, 3) = is;
  overlap(3, 0) = is;
  overlap(3, 3) = c;

  Mat rho0 = Mat::Zero();
  Mat log_rho0 = Mat::Zero();
  for (int i = 0; i < 4; ++i) {
    rho0(i, i) = std::exp(log_p0[i]);
    log_rho0(i, i) = log_p0[i];
  }
  // ln rho_f expressed in the pre-quench basis
  const Mat log_rhof = overlap.adjoint() * log_pf.cast<std::complex<double>>().asDiagonal() * overlap;

  const std::complex<double> s_rel = (rho0 * log_rho0).trace() - (rho0 * log_rhof).trace();
  return s_rel.real();
}

}  // namespace

double irr_entropy_relative(const QuenchSetup& setup) {
  double total = 0.0;
  for (const auto& m : build_mode_table(setup)) total += mode_relative_entropy(m, setup.beta);
  return total;
}

EntropyReport irr_entropy(const QuenchSetup& setup, const EntropyOptions& options) {
  const auto table = build_mode_table(setup);
  EntropyReport report;
  if (options.per_mode) report.per_mode.reserve(table.size());
  for (const auto& m : table) {
    const double s = mode_irr_entropy(m, setup.h0, setup.hf, setup.beta);
    report.s_irr += s;
    if (options.per_mode) report.per_mode.push_back(s);
  }
  if (options.relative_route) {
    double rel = 0.0;
    for (const auto& m : table) rel += mode_relative_entropy(m, setup.beta);
    report.s_irr_relent = rel;
  }
  return report;
}

std::vector<double> extensivity_check(const ModelParams& params, double h0, double hf, double beta,
                                      const std::vector<int>& lengths) {
  std::vector<double> out;
  out.reserve(lengths.size());
  for (int L : lengths) {
    const QuenchSetup setup(params.with_L(L), h0, hf, beta);
    out.push_back(irr_entropy(setup, {.per_mode = false, .relative_route = false}).s_irr / L);
  }
  return out;
}

}  // namespace xyq
