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

// Full work distribution: exact atoms for small chains, Fourier inversion of
// the characteristic function for any size, and the Crooks relation check.

#include <array>
#include <optional>
#include <vector>

#include "xyquench/model.hpp"

namespace xyq {

inline constexpr int kExactMaxL = 16;
inline constexpr double kMergeTolerance = 1e-9;

struct WorkAtom {
  double work;
  double log_prob;

  double prob() const;
};

/// The six (work, probability) outcomes of one (k, -k) block before merging.
struct ModeAtoms {
  double k;
  std::array<WorkAtom, 6> atoms;
};

ModeAtoms mode_work_atoms(const ModeEntry& mode, double beta);

struct HistogramInfo {
  int n_samples = 0;
  double w_max = 0.0;
  double du = 0.0;            // spacing of the u-grid
  double kernel_sigma = 0.0;  // std-dev of the Gaussian smoothing kernel in work units
  double boundary_mass = 0.0;
};

class WorkDistribution {
 public:
  enum class Kind { atoms, histogram };

  static WorkDistribution from_atoms(std::vector<WorkAtom> atoms);
  static WorkDistribution from_histogram(std::vector<double> centers, std::vector<double> density,
                                         double bin_width, HistogramInfo info);

  Kind kind() const { return kind_; }
  /// Atom work values (ascending) or bin centers.
  const std::vector<double>& values() const { return values_; }
  /// Probabilities for atoms, densities for histograms.
  const std::vector<double>& weights() const { return weights_; }
  /// Natural-log probabilities (atoms only).
  const std::vector<double>& log_weights() const { return log_weights_; }
  double bin_width() const { return bin_width_; }
  const HistogramInfo& histogram_info() const { return info_; }

  /// Probability mass of entry i (p_i for atoms, density_i * bin_width for bins).
  double mass(std::size_t i) const;
  double total_probability() const;
  double mean() const;
  /// Second central moment. For histograms the smoothing kernel's variance is
  /// subtracted so the result estimates the unsmoothed distribution.
  double variance() const;

 private:
  Kind kind_ = Kind::atoms;
  std::vector<double> values_;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
  double bin_width_ = 0.0;
  HistogramInfo info_;
};

/// Sorts atoms by work and merges neighbours closer than `tol` (probabilities
/// add; the merged work value is the probability-weighted mean).
std::vector<WorkAtom> merge_atoms(std::vector<WorkAtom> atoms, double tol = kMergeTolerance);

/// Exact distribution by convolving per-mode atoms. Requires L <= kExactMaxL.
WorkDistribution work_pdf_exact(const QuenchSetup& setup);

/// Sum over modes of (2 eps_k(h0) + 2 eps_k(hf)), a bound on |W|.
double work_support_bound(const QuenchSetup& setup);

struct FftOptions {
  int n_samples = 1 << 16;
  std::optional<double> w_max;  // auto when empty
  double smoothing_bins = 3.0;  // kernel std-dev in units of bin width; 0 disables
};

/// Density reconstructed from chi(u) on a uniform u-grid by inverse FFT.
/// Throws NumericError ("increase w_max") when the outermost bins carry
/// more than 1e-8 of probability.
WorkDistribution work_pdf_fft(const QuenchSetup& setup, const FftOptions& options = {});

/// Evaluates atoms on the bin centers of `grid` after smoothing with the same
/// Gaussian kernel `grid` was built with (or plain binning when the kernel is 0).
WorkDistribution project_atoms(const WorkDistribution& atoms, const WorkDistribution& grid);

/// 1/2 sum |p_i - q_i| over bins of two histograms on the same grid.
double total_variation(const WorkDistribution& a, const WorkDistribution& b);

/// ln sum_i p_i e^{-beta W_i}; equals -beta Delta F for two-point statistics.
double log_jarzynski_average(const WorkDistribution& atoms, double beta);

struct CrooksReport {
  double max_deviation = 0.0;
  std::size_t compared = 0;
  std::size_t missing_reverse = 0;  // forward atoms above the floor without a partner

  bool structurally_ok() const { return missing_reverse == 0; }
};

/// Compares ln p_F(W) - ln p_R(-W) with beta (W - Delta F) for every forward
/// atom with p_F > floor.
CrooksReport crooks_check(const QuenchSetup& setup, double floor = 1e-14);

}  // namespace xyq
