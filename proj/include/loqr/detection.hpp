// Copyright 2026 The loqr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loqr/fock.hpp"
#include "loqr/rng.hpp"

namespace loqr {

/// Uniform detection efficiency; losses across the mesh and the detectors
/// are absorbed into this single per-mode parameter.
struct LossModel {
  double eta_eff = 1.0;
};

/// Binary click pattern of the threshold detectors, one entry per mode.
struct ThresholdPattern {
  std::vector<std::uint8_t> clicks;

  int weight() const;
  auto operator<=>(const ThresholdPattern&) const = default;
};

using ThresholdDistribution = std::map<ThresholdPattern, double>;

/// Per-mode click probability given output occupations q:
/// Pr(click_i) = 1 - (1 - eta)^{q_i}. Throws std::invalid_argument if eta
/// lies outside [0, 1].
std::vector<double> click_probabilities(const FockState& output, const LossModel& loss);

/// Coarse-grain a photon-number distribution into threshold-pattern
/// probabilities:
///   p(r) = sum_l p(Q_l) prod_j Pr(c_j=1|Q_l)^{r_j} (1-Pr(c_j=1|Q_l))^{1-r_j}.
/// Enumerates patterns of Hamming weight <= N (all other patterns have
/// probability exactly 0). Intended as an oracle; throws
/// std::invalid_argument for modes > 20 — use coincidence_vector instead.
ThresholdDistribution threshold_distribution(const PnrDistribution& dist, const LossModel& loss);

/// Pairwise click-coincidence features in lexicographic pair order
/// (1,2),(1,3),...,(M-1,M).
struct CoincidenceVector {
  int modes = 0;
  Eigen::VectorXd values;

  /// Position of pair (i, j), 1-based modes with i < j.
  static std::size_t pair_index(int i, int j, int modes);
  static std::size_t dimension(int modes) {
    return static_cast<std::size_t>(modes) * (modes - 1) / 2;
  }
  /// CSV dump (pair label, value) for debugging.
  std::string csv() const;
};

/// Exact coincidence vector, marginalized per Fock state:
///   C_ij = sum_l p(Q_l) [1-(1-eta)^{q_i}] [1-(1-eta)^{q_j}],
/// which equals the full pattern sum over the threshold distribution and is
/// linear in the basis size.
CoincidenceVector coincidence_vector(const PnrDistribution& dist, const LossModel& loss);

/// Finite-ensemble estimate of the coincidence vector.
///
/// For shots <= gaussian_threshold: draws `shots` Fock outcomes by
/// inverse-CDF, thins each occupied mode binomially with eta, thresholds,
/// and increments every clicked pair; returns counts / shots. Above the
/// threshold each feature is perturbed independently,
/// C_ij + z sqrt(C_ij (1 - C_ij) / shots), clipped to [0, 1] — a documented
/// Gaussian approximation that ignores inter-feature covariance. Throws
/// std::invalid_argument for shots == 0.
CoincidenceVector sample_coincidences(const PnrDistribution& dist, const LossModel& loss,
                                      std::uint64_t shots, RandomEngine& rng,
                                      std::uint64_t gaussian_threshold = 1'000'000);

}  // namespace loqr
