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

#include "loqr/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loqr {

namespace {

void validate_eta(const LossModel& loss) {
  if (!(loss.eta_eff >= 0.0 && loss.eta_eff <= 1.0))
    throw std::invalid_argument("LossModel: eta_eff must lie in [0, 1]");
}

double click_prob(double eta, int q) {
  if (q == 0) return 0.0;
  if (eta == 1.0) return 1.0;
  return 1.0 - std::pow(1.0 - eta, q);
}

}  // namespace

int ThresholdPattern::weight() const {
  return std::accumulate(clicks.begin(), clicks.end(), 0);
}

std::vector<double> click_probabilities(const FockState& output, const LossModel& loss) {
  validate_eta(loss);
  std::vector<double> probs(output.occupations.size());
  for (std::size_t m = 0; m < probs.size(); ++m)
    probs[m] = click_prob(loss.eta_eff, output.occupations[m]);
  return probs;
}

ThresholdDistribution threshold_distribution(const PnrDistribution& dist, const LossModel& loss) {
  validate_eta(loss);
  const FockBasis& basis = *dist.basis;
  const int m = basis.modes;
  if (m > 20)
    throw std::invalid_argument(
        "threshold_distribution: pattern enumeration is limited to 20 modes; "
        "use coincidence_vector for larger meshes");

  // Click probabilities per basis state.
  std::vector<std::vector<double>> b(basis.size());
  for (std::size_t l = 0; l < basis.size(); ++l)
    b[l] = click_probabilities(basis.states[l], loss);

  ThresholdDistribution out;
  // Patterns of Hamming weight 0..N; heavier patterns have probability 0.
  const int max_w = std::min(m, basis.photons);
  std::vector<int> pick;
  ThresholdPattern pattern;
  pattern.clicks.assign(m, 0);

  auto emit = [&]() {
    double p = 0.0;
    for (std::size_t l = 0; l < basis.size(); ++l) {
      double term = dist.probs[l];
      if (term == 0.0) continue;
      for (int j = 0; j < m && term != 0.0; ++j)
        term *= pattern.clicks[j] ? b[l][j] : 1.0 - b[l][j];
      p += term;
    }
    out.emplace(pattern, p);
  };

  // Depth-first enumeration of all mode subsets of size 0..max_w.
  auto recurse = [&](auto&& self, int next, int remaining) -> void {
    emit();
    if (remaining == 0) return;
    for (int j = next; j < m; ++j) {
      pattern.clicks[j] = 1;
      self(self, j + 1, remaining - 1);
      pattern.clicks[j] = 0;
    }
  };
  recurse(recurse, 0, max_w);
  return out;
}

std::size_t CoincidenceVector::pair_index(int i, int j, int modes) {
  if (!(1 <= i && i < j && j <= modes))
    throw std::invalid_argument("CoincidenceVector::pair_index: need 1 <= i < j <= modes");
  const std::size_t before = static_cast<std::size_t>(i - 1) * modes -
                             static_cast<std::size_t>(i) * (i - 1) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

std::string CoincidenceVector::csv() const {
  std::ostringstream out;
  out << "pair,value\n";
  char buf[40];
  std::size_t k = 0;
  for (int i = 1; i <= modes; ++i)
    for (int j = i + 1; j <= modes; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", values[static_cast<Eigen::Index>(k++)]);
      out << i << "_" << j << "," << buf << "\n";
    }
  return out.str();
}

CoincidenceVector coincidence_vector(const PnrDistribution& dist, const LossModel& loss) {
  validate_eta(loss);
  const FockBasis& basis = *dist.basis;
  const int m = basis.modes;
  const double eta = loss.eta_eff;

  CoincidenceVector c;
  c.modes = m;
  c.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(CoincidenceVector::dimension(m)));

  std::vector<double> b;
  for (std::size_t l = 0; l < basis.size(); ++l) {
    const double p = dist.probs[l];
    if (p == 0.0) continue;
    const int* occ_begin = basis.occupied_modes.data() + basis.occupied_offsets[l];
    const int* occ_end = basis.occupied_modes.data() + basis.occupied_offsets[l + 1];
    const auto& occupations = basis.states[l].occupations;
    b.clear();
    for (const int* it = occ_begin; it != occ_end; ++it)
      b.push_back(click_prob(eta, occupations[*it]));
    for (const int* i = occ_begin; i != occ_end; ++i)
      for (const int* j = i + 1; j != occ_end; ++j) {
        const std::size_t idx = CoincidenceVector::pair_index(*i + 1, *j + 1, m);
        c.values[static_cast<Eigen::Index>(idx)] +=
            p * b[i - occ_begin] * b[j - occ_begin];
      }
  }
  return c;
}

CoincidenceVector sample_coincidences(const PnrDistribution& dist, const LossModel& loss,
                                      std::uint64_t shots, RandomEngine& rng,
                                      std::uint64_t gaussian_threshold) {
  validate_eta(loss);
  if (shots == 0) throw std::invalid_argument("sample_coincidences: shots must be >= 1");
  const FockBasis& basis = *dist.basis;
  const int m = basis.modes;
  const double eta = loss.eta_eff;

  if (shots > gaussian_threshold) {
    // Per-feature Gaussian approximation of the binomial estimator.
    CoincidenceVector c = coincidence_vector(dist, loss);
    const double inv_sqrt_shots = 1.0 / std::sqrt(static_cast<double>(shots));
    for (Eigen::Index k = 0; k < c.values.size(); ++k) {
      const double p = c.values[k];
      const double sigma = std::sqrt(std::max(p * (1.0 - p), 0.0)) * inv_sqrt_shots;
      c.values[k] = std::clamp(p + rng.normal() * sigma, 0.0, 1.0);
    }
    return c;
  }

  std::vector<double> cdf(basis.size());
  std::partial_sum(dist.probs.begin(), dist.probs.end(), cdf.begin());
  const double total = cdf.back();

  CoincidenceVector c;
  c.modes = m;
  c.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(CoincidenceVector::dimension(m)));

  std::vector<int> clicked;
  clicked.reserve(basis.photons);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform() * total;
    const std::size_t l = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    const int* occ_begin = basis.occupied_modes.data() + basis.occupied_offsets[l];
    const int* occ_end = basis.occupied_modes.data() + basis.occupied_offsets[l + 1];
    clicked.clear();
    if (eta == 1.0) {
      clicked.assign(occ_begin, occ_end);
    } else {
      const auto& occupations = basis.states[l].occupations;
      for (const int* it = occ_begin; it != occ_end; ++it) {
        bool click = false;
        for (int ph = 0; ph < occupations[*it]; ++ph)
          if (rng.uniform() < eta) click = true;
        if (click) clicked.push_back(*it);
      }
    }
    for (std::size_t a = 0; a < clicked.size(); ++a)
      for (std::size_t bb = a + 1; bb < clicked.size(); ++bb)
        c.values[static_cast<Eigen::Index>(
            CoincidenceVector::pair_index(clicked[a] + 1, clicked[bb] + 1, m))] += 1.0;
  }
  c.values /= static_cast<double>(shots);
  return c;
}

}  // namespace loqr
