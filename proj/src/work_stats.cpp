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

#include "xyquench/work_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "xyquench/errors.hpp"
#include "xyquench/log_math.hpp"
#include "xyquench/thermo.hpp"

namespace xyq {

namespace {

double log_square(double x) {
  return x == 0.0 ? logmath::kNegInf : 2.0 * std::log(std::fabs(x));
}

}  // namespace

std::array<CharFnTerm, 6> char_fn_terms(const ModeEntry& m, double beta) {
  const double lz = mode_log_partition(m.eps0, m.dsin, beta);
  const double log_cos2 = log_square(std::cos(m.theta));
  const double log_sin2 = log_square(std::sin(m.theta));
  const double log_p00 = 2.0 * beta * m.eps0 - lz;
  const double log_p11 = -2.0 * beta * m.eps0 - lz;
  return {{
      {log_p00 + log_cos2, 2.0 * m.eps0 - 2.0 * m.epsf},
      {log_p00 + log_sin2, 2.0 * m.eps0 + 2.0 * m.epsf},
      {log_p11 + log_sin2, -2.0 * m.eps0 - 2.0 * m.epsf},
      {log_p11 + log_cos2, -2.0 * m.eps0 + 2.0 * m.epsf},
      // e^{4 D sin k (iu + beta)} e^{-iu 4 D sin k}: the iu parts cancel
      {4.0 * beta * m.dsin - lz, 0.0},
      {-4.0 * beta * m.dsin - lz, 0.0},
  }};
}

CharacteristicFunction::CharacteristicFunction(const QuenchSetup& setup)
    : CharacteristicFunction(setup, build_mode_table(setup)) {}

CharacteristicFunction::CharacteristicFunction(const QuenchSetup& setup, const ModeTable& table)
    : beta_(setup.beta) {
  modes_.reserve(table.size());
  for (const auto& m : table) modes_.push_back(char_fn_terms(m, setup.beta));
}

cplx CharacteristicFunction::log_at(cplx u) const {
  const cplx iu{-u.imag(), u.real()};
  cplx total{0.0, 0.0};
  std::array<cplx, 6> expo;
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    double max_re = logmath::kNegInf;
    for (std::size_t j = 0; j < 6; ++j) {
      const auto& t = modes_[k][j];
      expo[j] = t.log_weight + iu * t.work;
      if (t.log_weight == logmath::kNegInf) continue;
      if (!std::isfinite(expo[j].real()) || !std::isfinite(expo[j].imag())) {
        std::ostringstream os;
        os << "characteristic function overflow in mode " << k << " at u=" << u;
        throw NumericError(os.str());
      }
      max_re = std::max(max_re, expo[j].real());
    }
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < 6; ++j) {
      if (modes_[k][j].log_weight == logmath::kNegInf) continue;
      s += std::exp(expo[j] - max_re);
    }
    total += std::log(s) + max_re;
  }
  return total;
}

CharFnValue CharacteristicFunction::operator()(cplx u) const {
  CharFnValue v;
  v.u = u;
  v.log_value = log_at(u);
  v.value = std::exp(v.log_value);
  v.beyond_strip = std::fabs(u.imag()) > beta_;
  return v;
}

CharFnValue char_fn(const QuenchSetup& setup, cplx u) {
  return CharacteristicFunction(setup)(u);
}

WorkMoments mode_moments(const ModeEntry& m, double h0, double hf, double beta) {
  using namespace logmath;
  const double a = 2.0 * beta * m.eps0;
  const double b = 4.0 * beta * m.dsin;
  const double den = log_cosh_sum(a, b);
  // r = cosh a / (cosh a + cosh b), q = 1 - r, both evaluated without overflow
  const double r = std::exp(log_cosh(a) - den);
  const double q = std::exp(log_cosh(b) - den);
  const double sech2 = std::exp(-2.0 * log_cosh(a));
  const double c = std::cos(m.phi0);
  const double s = std::sin(m.phi0);
  const double dh = h0 - hf;
  WorkMoments w;
  w.mean = 2.0 * dh * c * std::tanh(a) * r;
  // 4 dh^2 r - mean^2 rewritten as a sum of nonnegative terms
  w.variance = 4.0 * dh * dh * r * (s * s + c * c * (q + r * sech2));
  return w;
}

WorkMoments mean_and_variance(const QuenchSetup& setup, const ModeTable& table) {
  WorkMoments total{0.0, 0.0};
  for (const auto& m : table) {
    const auto w = mode_moments(m, setup.h0, setup.hf, setup.beta);
    total.mean += w.mean;
    total.variance += w.variance;
  }
  return total;
}

WorkMoments mean_and_variance(const QuenchSetup& setup) {
  return mean_and_variance(setup, build_mode_table(setup));
}

namespace {

// Central-difference estimate of the n-th derivative of f at 0 with step h.
cplx central_difference(const CharacteristicFunction& chi, int n, double h) {
  auto f = [&](double u) { return chi.log_at(cplx{u, 0.0}); };
  switch (n) {
    case 1:
      return (f(h) - f(-h)) / (2.0 * h);
    case 2:
      return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    case 3:
      return (f(2 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2 * h)) / (2.0 * h * h * h);
    case 4:
      return (f(2 * h) - 4.0 * f(h) + 6.0 * f(0.0) - 4.0 * f(-h) + f(-2 * h)) / (h * h * h * h);
    default:
      throw ConfigError("cumulant order must be in 1..4");
  }
}

}  // namespace

std::vector<CumulantEstimate> cumulants_numeric(const QuenchSetup& setup, int n_max) {
  if (n_max < 1 || n_max > 4) throw ConfigError("n_max must be in 1..4");
  const auto table = build_mode_table(setup);
  const CharacteristicFunction chi(setup, table);
  // Each mode factor keeps a positive real part while |u| max|w| < pi/2, so
  // steps are measured against the widest single-mode work range.
  double w_range = 0.0;
  for (const auto& m : table) w_range = std::max(w_range, 2.0 * (m.eps0 + m.epsf));
  if (!(w_range > 0.0)) w_range = 1.0;

  constexpr int kRounds = 12;
  std::vector<CumulantEstimate> out;
  for (int n = 1; n <= n_max; ++n) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double h_floor = std::pow(eps, 1.0 / (n + 2)) / w_range;
    double h = 0.25 / w_range;
    if (!(h_floor > std::numeric_limits<double>::min()) || !std::isfinite(h)) {
      throw NumericError("cumulant step size underflow");
    }
    // Neville tableau; the central stencils have error series in h^2.
    std::vector<std::vector<cplx>> a(kRounds, std::vector<cplx>(kRounds));
    a[0][0] = central_difference(chi, n, h);
    cplx best = a[0][0];
    double err = std::numeric_limits<double>::infinity();
    for (int i = 1; i < kRounds && h * 0.5 >= h_floor; ++i) {
      h *= 0.5;
      a[0][i] = central_difference(chi, n, h);
      double factor = 4.0;
      for (int j = 1; j <= i; ++j) {
        a[j][i] = (a[j - 1][i] * factor - a[j - 1][i - 1]) / (factor - 1.0);
        factor *= 4.0;
        const double e = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
        if (e < err) {
          err = e;
          best = a[j][i];
        }
      }
      if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) break;
    }
    // (-i)^n
    const cplx rot = std::pow(cplx{0.0, -1.0}, n);
    const cplx k = rot * best;
    out.push_back({n, k.real(), err + std::fabs(k.imag())});
  }
  return out;
}

}  // namespace xyq
