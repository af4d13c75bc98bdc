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

// Transverse-field XY chain with Dzyaloshinsky-Moriya coupling, reduced to
// independent (k, -k) fermion pairs. Units: exchange coupling = hbar = k_B = 1.

#include <span>
#include <vector>

namespace xyq {

/// Static chain description. L is even, |gamma| <= 1.
class ModelParams {
 public:
  ModelParams(int L, double gamma, double D);

  int L() const { return L_; }
  double gamma() const { return gamma_; }
  double D() const { return D_; }

  ModelParams with_L(int L) const { return {L, gamma_, D_}; }
  ModelParams with_gamma(double gamma) const { return {L_, gamma, D_}; }
  ModelParams with_D(double D) const { return {L_, gamma_, D}; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  int L_;
  double gamma_;
  double D_;
};

/// A sudden quench h0 -> hf from a Gibbs state at inverse temperature beta.
struct QuenchSetup {
  QuenchSetup(ModelParams params, double h0, double hf, double beta);

  ModelParams params;
  double h0;
  double hf;
  double beta;

  double delta_h() const { return hf - h0; }
  /// The backward protocol hf -> h0 at the same temperature.
  QuenchSetup reversed() const { return {params, hf, h0, beta}; }
};

/// Branch used for the Bogoliubov angle. Only `two_argument` is physical;
/// `naive_arctan` exists so the oracle suites can demonstrate that they
/// catch the quadrant error.
enum class AngleConvention { two_argument, naive_arctan };

/// Positive wave vectors k_n = (2n - 1) pi / L, n = 1..L/2, ascending.
std::vector<double> k_grid(const ModelParams& params);

/// Quasiparticle gap sqrt((h - cos k)^2 + gamma^2 sin^2 k).
double epsilon(double k, double h, double gamma);

/// Single-particle energy eps_k(h) + 2 D sin k. Negative in the gapless phase.
double zeta(double k, double h, double gamma, double D);

/// Angle phi with eps cos(phi) = h - cos k and eps sin(phi) = gamma sin k.
/// Throws GaplessModeError when both components vanish.
double bogoliubov_angle(double k, double h, double gamma,
                        AngleConvention convention = AngleConvention::two_argument);

struct ModeEntry {
  double k;
  double eps0;   // eps_k(h0)
  double epsf;   // eps_k(hf)
  double zeta0;
  double zetaf;
  double phi0;
  double phif;
  double theta;  // (phif - phi0) / 2
  double dsin;   // D sin k
};

/// Per-mode spectral data for a quench; immutable once built.
class ModeTable {
 public:
  explicit ModeTable(std::vector<ModeEntry> entries) : entries_(std::move(entries)) {}

  std::span<const ModeEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const ModeEntry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::vector<ModeEntry> entries_;
};

ModeEntry build_mode_entry(const QuenchSetup& setup, double k,
                           AngleConvention convention = AngleConvention::two_argument);

ModeTable build_mode_table(const QuenchSetup& setup,
                           AngleConvention convention = AngleConvention::two_argument);

}  // namespace xyq
