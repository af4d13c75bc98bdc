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

// Brute-force verifier. Each (k, -k) block is assembled as a 4x4 matrix in
// the Fock space of the momentum fermions c_k, c_-k straight from the 2x2
// Bogoliubov-de Gennes kernel, diagonalized numerically, and the two-point
// measurement statistics are enumerated outcome by outcome. Nothing here
// uses the closed-form angles; they only enter in verify_eigenstate_map.

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xyquench/model.hpp"
#include "xyquench/work_pdf.hpp"

namespace xyq::oracle {

struct BlockHamiltonian {
  double k;
  double h;
  /// Basis {|00>, |10>, |01>, |11>} in occupations (n_k, n_-k) of c-fermions,
  /// |11> = c_k^dag c_-k^dag |00>.
  Eigen::Matrix4cd matrix;
};

BlockHamiltonian build_block(double k, double h, double gamma, double D);

struct BlockSpectrum {
  Eigen::Vector4d energies;       // ascending
  Eigen::Matrix4cd eigenvectors;  // columns
};

BlockSpectrum diagonalize(const BlockHamiltonian& block);

struct ModeStats {
  double mean;
  double variance;
  // Normwise scales: sum of p (|E_f| + |E_0|) and of p (|E_f| + |E_0|)^2.
  double mean_scale;
  double variance_scale;
  std::vector<WorkAtom> atoms;    // all 16 outcomes, unmerged
  Eigen::Matrix4d transition;     // transition(m, n) = |<m_f|n_0>|^2
};

/// Enumerates the 4x4 outcome table of the block at wave vector k.
ModeStats brute_force_work_stats(const QuenchSetup& setup, double k);

struct EigenstateMapCheck {
  double max_deviation = 0.0;
  bool skipped = false;  // eigenvectors not separable into sectors (degeneracy)
  std::string note;
};

/// Compares numerical overlaps between pre- and post-quench block eigenstates
/// with cos^2(theta_k), sin^2(theta_k) and 1 from the mode table.
EigenstateMapCheck verify_eigenstate_map(const QuenchSetup& setup, double k,
                                         AngleConvention convention = AngleConvention::two_argument);

}  // namespace xyq::oracle
