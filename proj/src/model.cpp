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

#include "xyquench/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "xyquench/errors.hpp"

namespace xyq {

ModelParams::ModelParams(int L, double gamma, double D) : L_(L), gamma_(gamma), D_(D) {
  if (L < 2 || L % 2 != 0) {
    throw ConfigError("L must be an even integer >= 2, got " + std::to_string(L));
  }
  if (!(gamma >= -1.0 && gamma <= 1.0)) {
    throw ConfigError("gamma must lie in [-1, 1], got " + std::to_string(gamma));
  }
  if (!std::isfinite(D)) throw ConfigError("D must be finite");
}

QuenchSetup::QuenchSetup(ModelParams p, double h0_, double hf_, double beta_)
    : params(p), h0(h0_), hf(hf_), beta(beta_) {
  if (!std::isfinite(h0) || !std::isfinite(hf)) throw ConfigError("fields must be finite");
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ConfigError("beta must be positive and finite, got " + std::to_string(beta));
  }
}

std::vector<double> k_grid(const ModelParams& params) {
  const int half = params.L() / 2;
  std::vector<double> ks;
  ks.reserve(static_cast<std::size_t>(half));
  for (int n = 1; n <= half; ++n) {
    ks.push_back((2.0 * n - 1.0) * std::numbers::pi / params.L());
  }
  return ks;
}

double epsilon(double k, double h, double gamma) {
  return std::hypot(h - std::cos(k), gamma * std::sin(k));
}

double zeta(double k, double h, double gamma, double D) {
  return epsilon(k, h, gamma) + 2.0 * D * std::sin(k);
}

double bogoliubov_angle(double k, double h, double gamma, AngleConvention convention) {
  const double x = h - std::cos(k);
  const double y = gamma * std::sin(k);
  if (x == 0.0 && y == 0.0) {
    std::ostringstream os;
    os << "k=" << k << " h=" << h;
    throw GaplessModeError(os.str());
  }
  if (convention == AngleConvention::naive_arctan) return std::atan(y / x);
  return std::atan2(y, x);
}

ModeEntry build_mode_entry(const QuenchSetup& setup, double k, AngleConvention convention) {
  const double g = setup.params.gamma();
  const double D = setup.params.D();
  ModeEntry e{};
  e.k = k;
  e.eps0 = epsilon(k, setup.h0, g);
  e.epsf = epsilon(k, setup.hf, g);
  e.dsin = D * std::sin(k);
  e.zeta0 = e.eps0 + 2.0 * e.dsin;
  e.zetaf = e.epsf + 2.0 * e.dsin;
  e.phi0 = bogoliubov_angle(k, setup.h0, g, convention);
  e.phif = bogoliubov_angle(k, setup.hf, g, convention);
  e.theta = 0.5 * (e.phif - e.phi0);
  return e;
}

ModeTable build_mode_table(const QuenchSetup& setup, AngleConvention convention) {
  std::vector<ModeEntry> entries;
  const auto ks = k_grid(setup.params);
  entries.reserve(ks.size());
  for (double k : ks) entries.push_back(build_mode_entry(setup, k, convention));
  return ModeTable(std::move(entries));
}

}  // namespace xyq
