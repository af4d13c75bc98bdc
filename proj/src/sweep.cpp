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

#include "xyquench/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "xyquench/entropy.hpp"
#include "xyquench/errors.hpp"
#include "xyquench/thermo.hpp"
#include "xyquench/work_stats.hpp"

namespace xyq {

SweepConfig SweepConfig::from(const KeyValueConfig& cfg) {
  SweepConfig c;
  c.L = cfg.get_int_list("L", std::to_string(kDefaultL));
  c.gamma = cfg.get_grid("gamma", "0.5");
  c.beta = cfg.get_grid("beta", "100");
  c.D = cfg.get_grid("D", "0");
  c.h0 = cfg.get_grid("h0", "1");
  c.dh = cfg.get_double("dh", 0.01);
  c.delta_f = cfg.get_bool("delta_F", false);
  const int workers = cfg.get_int("workers", 0);
  if (workers < 0) throw ConfigError("config key 'workers': must be >= 0");
  c.workers = static_cast<unsigned>(workers);
  // Validate every model parameter up front so errors name the key.
  for (int L : c.L) {
    if (L < 2 || L % 2 != 0) throw ConfigError("config key 'L': must be even and >= 2");
  }
  for (double g : c.gamma) {
    if (g < -1.0 || g > 1.0) throw ConfigError("config key 'gamma': must lie in [-1, 1]");
  }
  for (double b : c.beta) {
    if (!(b > 0.0)) throw ConfigError("config key 'beta': must be positive");
  }
  return c;
}

std::size_t SweepConfig::point_count() const {
  return L.size() * gamma.size() * beta.size() * D.size() * h0.size();
}

namespace {

struct PointResult {
  double mean = 0.0;
  double variance = 0.0;
  double s_irr = 0.0;
  double delta_F = 0.0;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<double> central_derivative(std::span<const double> x, std::span<const double> y) {
  std::vector<double> d;
  if (x.size() < 3) return d;
  d.reserve(x.size() - 2);
  for (std::size_t i = 1; i + 1 < x.size(); ++i) d.push_back((y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]));
  return d;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const std::size_t nh = config.h0.size();
  const std::size_t nd = config.D.size();
  const std::size_t nb = config.beta.size();
  const std::size_t ng = config.gamma.size();
  const std::size_t total = config.point_count();
  if (total == 0) throw ConfigError("empty sweep grid");

  auto decode = [&](std::size_t idx) {
    const std::size_t ih = idx % nh;
    const std::size_t id = (idx / nh) % nd;
    const std::size_t ib = (idx / (nh * nd)) % nb;
    const std::size_t ig = (idx / (nh * nd * nb)) % ng;
    const std::size_t il = idx / (nh * nd * nb * ng);
    const ModelParams params(config.L[il], config.gamma[ig], config.D[id]);
    const double h0 = config.h0[ih];
    return QuenchSetup(params, h0, h0 + config.dh, config.beta[ib]);
  };

  std::vector<PointResult> results(total);
  parallel_for(total, config.workers, [&](std::size_t idx) {
    const auto setup = decode(idx);
    const auto table = build_mode_table(setup);
    const auto mv = mean_and_variance(setup, table);
    PointResult r;
    r.mean = mv.mean;
    r.variance = mv.variance;
    for (const auto& m : table) r.s_irr += mode_irr_entropy(m, setup.h0, setup.hf, setup.beta);
    if (config.delta_f) r.delta_F = delta_free_energy(setup);
    results[idx] = r;
  });

  std::vector<SweepRow> rows;
  rows.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto setup = decode(idx);
    const auto& r = results[idx];
    SweepRow row{setup.h0, setup.hf, setup.params.D(), setup.params.gamma(), setup.beta, setup.params.L(),
                 r.mean, r.variance, r.s_irr, std::nullopt, std::nullopt, std::nullopt};
    if (config.delta_f) row.delta_F = r.delta_F;
    const std::size_t ih = idx % nh;
    if (nh >= 3 && ih > 0 && ih + 1 < nh) {
      const auto& lo = results[idx - 1];
      const auto& hi = results[idx + 1];
      const double span = config.h0[ih + 1] - config.h0[ih - 1];
      row.d_mean_dh0 = (hi.mean - lo.mean) / span;
      row.d_var_dh0 = (hi.variance - lo.variance) / span;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

void put(std::ostream& os, double v) { os << v; }

void put(std::ostream& os, const std::optional<double>& v) {
  if (v) os << *v;
}

}  // namespace

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, const SweepConfig& config,
                     const std::string& header_comments) {
  const bool derivs = config.h0.size() >= 3;
  os << header_comments;
  os << "h0,hf,D,gamma,beta,L,mean_work,variance,s_irr";
  if (derivs) os << ",d_mean_dh0,d_var_dh0";
  if (config.delta_f) os << ",delta_F";
  os << '\n';
  const auto old_precision = os.precision(17);
  for (const auto& r : rows) {
    put(os, r.h0);
    for (double v : {r.hf, r.D, r.gamma, r.beta}) {
      os << ',';
      put(os, v);
    }
    os << ',' << r.L;
    for (double v : {r.mean_work, r.variance, r.s_irr}) {
      os << ',';
      put(os, v);
    }
    if (derivs) {
      os << ',';
      put(os, r.d_mean_dh0);
      os << ',';
      put(os, r.d_var_dh0);
    }
    if (config.delta_f) {
      os << ',';
      put(os, r.delta_F);
    }
    os << '\n';
  }
  os.precision(old_precision);
}

double critical_field(double gamma, double D) {
  const double g = std::fabs(gamma);
  const double d = std::fabs(D);
  if (d < 0.5 * g) return 1.0;
  return std::sqrt(4.0 * d * d - g * g + 1.0);
}

std::vector<LocalMinimum> find_local_minima(std::span<const double> x, std::span<const double> y) {
  std::vector<LocalMinimum> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (!(y[i] < y[i - 1] && y[i] < y[i + 1])) continue;
    // Vertex of the parabola through the three points.
    const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
    const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curv = (d12 - d01) / (x2 - x0);  // half the second derivative
    double xv = x1;
    double yv = y1;
    if (curv > 0.0) {
      xv = 0.5 * (x0 + x1) - d01 / (2.0 * curv);
      yv = y0 + d01 * (xv - x0) + curv * (xv - x0) * (xv - x1);
    }
    out.push_back({xv, yv, i});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::vector<CriticalEstimate> critical_scan(const SweepConfig& config) {
  if (config.L.size() != 1 || config.gamma.size() != 1 || config.beta.size() != 1) {
    throw ConfigError("critical scan needs single values for L, gamma and beta");
  }
  // Three points on each side of a minimum of the interior derivative.
  if (config.h0.size() < 7) throw ConfigError("config key 'h0': critical scan needs at least 7 grid points");
  const auto rows = run_sweep(config);
  const std::size_t nh = config.h0.size();
  const std::span<const double> xs(config.h0);
  const auto interior = xs.subspan(1, nh - 2);

  std::vector<CriticalEstimate> out;
  for (std::size_t id = 0; id < config.D.size(); ++id) {
    std::vector<double> mean(nh), var(nh);
    for (std::size_t ih = 0; ih < nh; ++ih) {
      mean[ih] = rows[id * nh + ih].mean_work;
      var[ih] = rows[id * nh + ih].variance;
    }
    CriticalEstimate est;
    est.D = config.D[id];
    est.h_theory = critical_field(config.gamma[0], est.D);
    est.mean_minima = find_local_minima(interior, central_derivative(xs, mean));
    est.var_minima = find_local_minima(interior, central_derivative(xs, var));
    if (!est.mean_minima.empty()) est.h_star_mean = est.mean_minima.front().h0;
    if (!est.var_minima.empty()) est.h_star_var = est.var_minima.front().h0;
    out.push_back(std::move(est));
  }
  return out;
}

void write_critical_csv(std::ostream& os, std::span<const CriticalEstimate> estimates, bool verbose,
                        const std::string& header_comments) {
  os << header_comments;
  os << "# minima refined by a 3-point parabola; deepest minimum reported\n";
  os << "D,h_star_mean,h_star_var,h_theory";
  if (verbose) os << ",kind,rank,h0_min,derivative_min";
  os << '\n';
  const auto old_precision = os.precision(17);
  for (const auto& e : estimates) {
    auto head = [&] {
      os << e.D << ',';
      put(os, e.h_star_mean);
      os << ',';
      put(os, e.h_star_var);
      os << ',' << e.h_theory;
    };
    if (!verbose) {
      head();
      os << '\n';
      continue;
    }
    bool any = false;
    for (const auto* list : {&e.mean_minima, &e.var_minima}) {
      const char* kind = list == &e.mean_minima ? "mean" : "variance";
      for (std::size_t r = 0; r < list->size(); ++r) {
        head();
        os << ',' << kind << ',' << r << ',' << (*list)[r].h0 << ',' << (*list)[r].value << '\n';
        any = true;
      }
    }
    if (!any) {
      head();
      os << ",none,,,\n";
    }
  }
  os.precision(old_precision);
}

}  // namespace xyq
