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

#include "xyquench/work_pdf.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "xyquench/errors.hpp"
#include "xyquench/log_math.hpp"
#include "xyquench/thermo.hpp"
#include "xyquench/work_stats.hpp"

namespace xyq {

double WorkAtom::prob() const { return std::exp(log_prob); }

ModeAtoms mode_work_atoms(const ModeEntry& m, double beta) {
  const double lz = mode_log_partition(m.eps0, m.dsin, beta);
  auto log_p0 = [&](int nk, int nmk) { return -beta * block_energy(m.eps0, m.dsin, nk, nmk) - lz; };
  auto work = [&](int nk0, int nmk0, int nkf, int nmkf) {
    return block_energy(m.epsf, m.dsin, nkf, nmkf) - block_energy(m.eps0, m.dsin, nk0, nmk0);
  };
  const double c = std::cos(m.theta);
  const double s = std::sin(m.theta);
  const double log_c2 = c == 0.0 ? logmath::kNegInf : std::log(c * c);
  const double log_s2 = s == 0.0 ? logmath::kNegInf : std::log(s * s);

  ModeAtoms out;
  out.k = m.k;
  // The paired states rotate into each other; the cross states are untouched.
  out.atoms = {{
      {work(0, 0, 0, 0), log_p0(0, 0) + log_c2},
      {work(0, 0, 1, 1), log_p0(0, 0) + log_s2},
      {work(1, 1, 1, 1), log_p0(1, 1) + log_c2},
      {work(1, 1, 0, 0), log_p0(1, 1) + log_s2},
      {work(1, 0, 1, 0), log_p0(1, 0)},
      {work(0, 1, 0, 1), log_p0(0, 1)},
  }};
  return out;
}

WorkDistribution WorkDistribution::from_atoms(std::vector<WorkAtom> atoms) {
  WorkDistribution d;
  d.kind_ = Kind::atoms;
  std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.work < b.work; });
  for (const auto& a : atoms) {
    d.values_.push_back(a.work);
    d.log_weights_.push_back(a.log_prob);
    d.weights_.push_back(a.prob());
  }
  return d;
}

WorkDistribution WorkDistribution::from_histogram(std::vector<double> centers, std::vector<double> density,
                                                  double bin_width, HistogramInfo info) {
  WorkDistribution d;
  d.kind_ = Kind::histogram;
  d.values_ = std::move(centers);
  d.weights_ = std::move(density);
  d.bin_width_ = bin_width;
  d.info_ = info;
  return d;
}

double WorkDistribution::mass(std::size_t i) const {
  return kind_ == Kind::atoms ? weights_[i] : weights_[i] * bin_width_;
}

double WorkDistribution::total_probability() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += mass(i);
  return s;
}

double WorkDistribution::mean() const {
  double s = 0.0;
  double z = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    s += mass(i) * values_[i];
    z += mass(i);
  }
  return s / z;
}

double WorkDistribution::variance() const {
  const double mu = mean();
  double s = 0.0;
  double z = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double d = values_[i] - mu;
    s += mass(i) * d * d;
    z += mass(i);
  }
  const double var = s / z;
  if (kind_ == Kind::histogram) return var - info_.kernel_sigma * info_.kernel_sigma;
  return var;
}

std::vector<WorkAtom> merge_atoms(std::vector<WorkAtom> atoms, double tol) {
  std::erase_if(atoms, [](const WorkAtom& a) { return a.log_prob == logmath::kNegInf; });
  std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.work < b.work; });
  std::vector<WorkAtom> out;
  out.reserve(atoms.size());
  std::size_t i = 0;
  while (i < atoms.size()) {
    std::size_t j = i + 1;
    while (j < atoms.size() && atoms[j].work - atoms[i].work <= tol) ++j;
    if (j == i + 1) {
      out.push_back(atoms[i]);
    } else {
      double lmax = logmath::kNegInf;
      for (std::size_t t = i; t < j; ++t) lmax = std::max(lmax, atoms[t].log_prob);
      double z = 0.0;
      double zw = 0.0;
      for (std::size_t t = i; t < j; ++t) {
        const double w = std::exp(atoms[t].log_prob - lmax);
        z += w;
        zw += w * atoms[t].work;
      }
      out.push_back({zw / z, lmax + std::log(z)});
    }
    i = j;
  }
  return out;
}

WorkDistribution work_pdf_exact(const QuenchSetup& setup) {
  if (setup.params.L() > kExactMaxL) {
    throw ConfigError("exact work distribution limited to L <= " + std::to_string(kExactMaxL) +
                      "; use the fft method (work_pdf_fft) for L=" + std::to_string(setup.params.L()));
  }
  const auto table = build_mode_table(setup);
  std::vector<WorkAtom> acc{{0.0, 0.0}};
  for (const auto& m : table) {
    const auto mode = mode_work_atoms(m, setup.beta);
    std::vector<WorkAtom> next;
    next.reserve(acc.size() * mode.atoms.size());
    for (const auto& a : acc) {
      for (const auto& b : mode.atoms) {
        if (b.log_prob == logmath::kNegInf) continue;
        next.push_back({a.work + b.work, a.log_prob + b.log_prob});
      }
    }
    acc = merge_atoms(std::move(next));
  }
  return WorkDistribution::from_atoms(std::move(acc));
}

double work_support_bound(const QuenchSetup& setup) {
  double s = 0.0;
  for (const auto& m : build_mode_table(setup)) s += 2.0 * m.eps0 + 2.0 * m.epsf;
  return s;
}

namespace {

constexpr int kBoundaryBins = 8;
// Auto w_max keeps this many bins between the support edge and the boundary.
constexpr int kMarginBins = kBoundaryBins + 40;
constexpr double kAliasingThreshold = 1e-8;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Chernoff bound on P(|W| > a): min over t of e^{-t a} E[e^{+-t W}], with
// E[e^{t W}] = chi(-i t). Catches mass that wraps around without reaching the
// boundary bins.
double tail_bound(const CharacteristicFunction& chi, double a, double scale) {
  double right = 1.0, left = 1.0;
  for (int j = -10; j <= 40; ++j) {
    const double t = std::ldexp(1.0, j) / scale;
    right = std::min(right, std::exp(chi.log_at(cplx{0.0, -t}).real() - t * a));
    left = std::min(left, std::exp(chi.log_at(cplx{0.0, t}).real() - t * a));
  }
  return right + left;
}

struct FftwPlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

}  // namespace

WorkDistribution work_pdf_fft(const QuenchSetup& setup, const FftOptions& options) {
  const int n = options.n_samples;
  if (!is_power_of_two(n) || n < (1 << 10)) {
    throw ConfigError("n_samples must be a power of two >= 1024, got " + std::to_string(n));
  }
  if (!(options.smoothing_bins >= 0.0)) throw ConfigError("smoothing must be >= 0");
  const auto table = build_mode_table(setup);
  double support = 0.0;
  for (const auto& m : table) support += 2.0 * m.eps0 + 2.0 * m.epsf;
  double w_max = 0.0;
  if (options.w_max) {
    w_max = *options.w_max;
    if (!(w_max > 0.0)) throw ConfigError("w_max must be positive");
  } else {
    w_max = support / (1.0 - 2.0 * kMarginBins / static_cast<double>(n));
  }
  const double bin = 2.0 * w_max / n;
  const double du = std::numbers::pi / w_max;
  const double sigma = options.smoothing_bins * bin;

  const CharacteristicFunction chi(setup, table);
  const int half = n / 2;
  auto spectrum = std::unique_ptr<fftw_complex[], decltype(&fftw_free)>(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (half + 1))), &fftw_free);
  auto out = std::unique_ptr<double[], decltype(&fftw_free)>(
      static_cast<double*>(fftw_malloc(sizeof(double) * n)), &fftw_free);
  std::unique_ptr<fftw_plan_s, FftwPlanDeleter> plan(
      fftw_plan_dft_c2r_1d(n, spectrum.get(), out.get(), FFTW_ESTIMATE));

  // Bin j sits at W_j = (j - n/2) * bin. With u_m = m du the transform kernel
  // is exp(-2 pi i m j / n) (-1)^m; chi(-u) = conj chi(u) gives a real result,
  // so the half spectrum of conj(c_m) feeds a c2r transform.
  for (int m = 0; m <= half; ++m) {
    const double u = m * du;
    cplx c = chi(cplx{u, 0.0}).value * std::exp(-0.5 * sigma * sigma * u * u);
    if (m % 2 == 1) c = -c;
    if (m == half) c = cplx{c.real(), 0.0};
    spectrum[m][0] = c.real();
    spectrum[m][1] = -c.imag();
  }
  fftw_execute(plan.get());

  std::vector<double> centers(static_cast<std::size_t>(n));
  std::vector<double> density(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    centers[j] = (j - half) * bin;
    density[j] = std::max(0.0, out[j] / (2.0 * w_max));
  }

  double boundary = 0.0;
  for (int j = 0; j < kBoundaryBins; ++j) boundary += (density[j] + density[n - 1 - j]) * bin;
  const double inner = w_max - kBoundaryBins * bin;
  if (inner < support && support > 0.0) boundary = std::max(boundary, tail_bound(chi, inner, support));
  if (boundary > kAliasingThreshold) {
    std::ostringstream os;
    os << "aliasing detected: boundary-bin mass " << boundary << " exceeds " << kAliasingThreshold
       << " at w_max=" << w_max << "; increase w_max";
    throw NumericError(os.str());
  }

  HistogramInfo info;
  info.n_samples = n;
  info.w_max = w_max;
  info.du = du;
  info.kernel_sigma = sigma;
  info.boundary_mass = boundary;
  return WorkDistribution::from_histogram(std::move(centers), std::move(density), bin, info);
}

WorkDistribution project_atoms(const WorkDistribution& atoms, const WorkDistribution& grid) {
  if (atoms.kind() != WorkDistribution::Kind::atoms || grid.kind() != WorkDistribution::Kind::histogram) {
    throw ConfigError("project_atoms expects (atoms, histogram)");
  }
  const auto& centers = grid.values();
  const double bin = grid.bin_width();
  const double sigma = grid.histogram_info().kernel_sigma;
  const double origin = centers.front();
  const auto nbins = static_cast<long>(centers.size());
  std::vector<double> density(centers.size(), 0.0);
  for (std::size_t i = 0; i < atoms.values().size(); ++i) {
    const double w = atoms.values()[i];
    const double p = atoms.weights()[i];
    const long nearest = std::lround((w - origin) / bin);
    if (sigma == 0.0) {
      if (nearest >= 0 && nearest < nbins) density[nearest] += p / bin;
      continue;
    }
    const long reach = static_cast<long>(std::ceil(40.0 * sigma / bin));
    const double norm = p / (std::sqrt(2.0 * std::numbers::pi) * sigma);
    for (long j = std::max(0L, nearest - reach); j <= std::min(nbins - 1, nearest + reach); ++j) {
      const double d = (centers[j] - w) / sigma;
      density[j] += norm * std::exp(-0.5 * d * d);
    }
  }
  return WorkDistribution::from_histogram(centers, std::move(density), bin, grid.histogram_info());
}

double total_variation(const WorkDistribution& a, const WorkDistribution& b) {
  if (a.values().size() != b.values().size()) throw ConfigError("histograms on different grids");
  double s = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) s += std::fabs(a.mass(i) - b.mass(i));
  return 0.5 * s;
}

double log_jarzynski_average(const WorkDistribution& atoms, double beta) {
  std::vector<double> terms;
  terms.reserve(atoms.values().size());
  for (std::size_t i = 0; i < atoms.values().size(); ++i) {
    terms.push_back(atoms.log_weights()[i] - beta * atoms.values()[i]);
  }
  return logmath::log_sum_exp(terms);
}

CrooksReport crooks_check(const QuenchSetup& setup, double floor) {
  const auto fwd = work_pdf_exact(setup);
  const auto rev = work_pdf_exact(setup.reversed());
  const double dF = delta_free_energy(setup);
  const double log_floor = std::log(floor);
  const auto& rw = rev.values();

  CrooksReport report;
  for (std::size_t i = 0; i < fwd.values().size(); ++i) {
    const double lp = fwd.log_weights()[i];
    if (lp <= log_floor) continue;
    const double w = fwd.values()[i];
    auto it = std::lower_bound(rw.begin(), rw.end(), -w);
    std::size_t best = rw.size();
    double best_dist = kMergeTolerance;
    for (auto cand : {it, it == rw.begin() ? it : std::prev(it)}) {
      if (cand == rw.end()) continue;
      const double dist = std::fabs(*cand + w);
      if (dist <= best_dist) {
        best_dist = dist;
        best = static_cast<std::size_t>(cand - rw.begin());
      }
    }
    if (best == rw.size()) {
      ++report.missing_reverse;
      continue;
    }
    const double dev = lp - rev.log_weights()[best] - setup.beta * (w - dF);
    report.max_deviation = std::max(report.max_deviation, std::fabs(dev));
    ++report.compared;
  }
  return report;
}

}  // namespace xyq
