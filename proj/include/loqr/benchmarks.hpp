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
#include <span>
#include <stdexcept>
#include <vector>

#include "loqr/rng.hpp"

namespace loqr {

/// Mackey-Glass delay differential equation
///   dQ/dt = alpha Q(t - tau) / (1 + Q(t - tau)^beta) - gamma Q(t),
/// integrated with fixed-step RK4 (substep h, cubic-Hermite interpolation of
/// the delayed value at half-steps) from the constant history Q(t <= 0) =
/// initial_value, sampled every dt_sample after discarding
/// transient_samples samples.
struct MgParams {
  double alpha = 0.2;
  double beta = 10.0;
  double gamma = 0.1;
  double tau_delay = 17.0;
  double dt_sample = 1.0;
  double substep = 0.1;
  double initial_value = 1.2;
  int transient_samples = 1000;
};

/// Raw (unnormalized) samples of Q. tau_delay/substep and
/// dt_sample/substep must be integral.
std::vector<double> mg_raw_series(const MgParams& params, int n_samples);

/// Drive/target pair for a forecasting task: targets[k] = inputs shifted
/// `horizon` steps into the future, both on the normalized series.
struct ForecastSeries {
  std::vector<double> inputs;
  std::vector<double> targets;
  int horizon = 0;
};

/// Normalized Mackey-Glass forecasting data: generates total_steps + horizon
/// samples, min-max normalizes the full window to [0, 1], pairs x_k with
/// x_{k+horizon}. Throws std::invalid_argument for horizon < 0.
ForecastSeries mackey_glass(const MgParams& params, int total_steps, int horizon);

/// NARMA-n recurrence
///   y_{k+1} = alpha y_k + beta y_k sum_{j=0}^{n-1} y_{k-j}
///             + gamma x_k x_{k-n+1} + delta,
/// with zero initial history. The returned element t[k] is y_{k+1}, so each
/// target depends only on drive values strictly before index k.
struct NarmaParams {
  int order = 10;
  double alpha = 0.3;
  double beta = 0.05;
  double gamma = 1.5;
  double delta = 0.1;
  double input_lo = 0.0;
  double input_hi = 0.5;
  double divergence_limit = 10.0;
};

/// Thrown when the recurrence leaves [-divergence_limit, divergence_limit].
struct NarmaDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> narma(const NarmaParams& params, std::span<const double> drive);

/// Transverse-plus-longitudinal-field Ising chain, open boundaries:
///   H = -J sum_i sz_i sz_{i+1} + hx sum_i sx_i + hz sum_i sz_i,
/// evolved from the all-spins-up product state by exact diagonalization.
struct IsingParams {
  int sites = 5;
  double coupling = 1.0;   ///< J
  double field_x = 1.05;   ///< hx
  double field_z = -0.5;   ///< hz
  double dt = 0.05;        ///< sampling step
  int observable_site = 3; ///< 1-based site of the recorded <sz>
};

/// Dense exact-diagonalization evolution; sites is guarded at <= 12.
class IsingEvolution {
 public:
  explicit IsingEvolution(const IsingParams& params);

  /// e^{-i H t} applied to the all-up initial state.
  Eigen::VectorXcd state_at(double t) const;
  /// e^{-i H dt} applied to an arbitrary state (dt may be negative).
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, double dt) const;
  /// <sz> at the observable site.
  double magnetization(const Eigen::VectorXcd& state) const;
  double energy(const Eigen::VectorXcd& state) const;
  const Eigen::MatrixXd& hamiltonian() const { return h_; }

 private:
  IsingParams params_;
  Eigen::MatrixXd h_;
  Eigen::MatrixXd evec_;
  Eigen::VectorXd eval_;
};

/// Samples m_k = <sz_site>(t_k) at t_k = k dt, k = 1..n, unnormalized.
std::vector<double> ising_raw_series(const IsingParams& params, int n_samples);

/// Same samples min-max normalized to [0, 1].
std::vector<double> ising_series(const IsingParams& params, int n_samples);

/// Min-max map onto [0, 1]; a constant series maps to all 0.5.
std::vector<double> minmax_normalize(std::span<const double> xs);

/// i.i.d. uniform drive on [lo, hi). Throws std::invalid_argument for
/// count < 1 or an empty range.
std::vector<double> iid_drive(int count, double lo, double hi, RandomEngine& rng);

/// CSV export of a generated series, header `k,x,y_target`.
std::string series_csv(const ForecastSeries& series);

}  // namespace loqr
