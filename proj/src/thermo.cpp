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

#include "xyquench/thermo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "xyquench/errors.hpp"
#include "xyquench/log_math.hpp"

namespace xyq {

double mode_log_partition(double eps, double dsin, double beta) {
  return std::numbers::ln2 + logmath::log_cosh_sum(2.0 * beta * eps, 4.0 * beta * dsin);
}

double ModeGibbs::probability(std::size_t state) const {
  return std::exp(log_probability(state));
}

ModeGibbs mode_gibbs(double k, double h, double gamma, double D, double beta) {
  const double eps = epsilon(k, h, gamma);
  const double dsin = D * std::sin(k);
  ModeGibbs g{};
  g.k = k;
  for (std::size_t s = 0; s < kBlockOccupations.size(); ++s) {
    const auto [nk, nmk] = kBlockOccupations[s];
    g.logw[s] = -beta * block_energy(eps, dsin, nk, nmk);
  }
  g.logz_mode = logmath::log_sum_exp(g.logw);
  return g;
}

ModeGibbs mode_gibbs(const QuenchSetup& setup, double k) {
  return mode_gibbs(k, setup.h0, setup.params.gamma(), setup.params.D(), setup.beta);
}

LogPartitionRoutes log_partition_routes(const ModelParams& params, double h, double beta) {
  LogPartitionRoutes r{params.L() * std::numbers::ln2, 0.0};
  for (double k : k_grid(params)) {
    const double eps = epsilon(k, h, params.gamma());
    const double dsin = params.D() * std::sin(k);
    // zeta_{-k} = eps - 2 D sin k
    r.single_particle += logmath::log_cosh(beta * (eps + 2.0 * dsin)) +
                         logmath::log_cosh(beta * (eps - 2.0 * dsin));
    r.block_sum += mode_log_partition(eps, dsin, beta);
  }
  return r;
}

double log_partition(const ModelParams& params, double h, double beta) {
  const auto r = log_partition_routes(params, h, beta);
  const double scale = std::max(1.0, std::fabs(r.block_sum));
  if (!std::isfinite(r.block_sum) || std::fabs(r.single_particle - r.block_sum) > 1e-10 * scale) {
    std::ostringstream os;
    os.precision(17);
    os << "log-partition routes disagree: " << r.single_particle << " vs " << r.block_sum;
    throw NumericError(os.str());
  }
  return r.block_sum;
}

double delta_free_energy(const QuenchSetup& setup) {
  const double lz0 = log_partition(setup.params, setup.h0, setup.beta);
  const double lzf = log_partition(setup.params, setup.hf, setup.beta);
  return -(lzf - lz0) / setup.beta;
}

}  // namespace xyq
