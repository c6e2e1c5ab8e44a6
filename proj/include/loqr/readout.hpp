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
#include <vector>

namespace loqr {

/// Per-feature training statistics for z-scoring. Zero-variance features
/// get stddev 1 so they standardize to zero instead of NaN.
struct Standardization {
  Eigen::VectorXd mean;
  Eigen::VectorXd stddev;
};

/// Fit mean/std on training features (population std). Throws
/// std::invalid_argument on an empty matrix.
Standardization standardize_fit(const Eigen::MatrixXd& features);

/// Apply (previously fitted) statistics; test data reuses training stats.
Eigen::MatrixXd standardize_apply(const Eigen::MatrixXd& features, const Standardization& stats);

/// Trained linear readout: prediction = standardized features * weights + bias.
struct ReadoutModel {
  Standardization stats;
  Eigen::VectorXd weights;
  double bias = 0.0;
  double beta = 1e-11;
};

/// Ridge solution on already-standardized features with the centered-target
/// convention: W = (X^T X + beta I)^{-1} X^T (y - mean(y)), bias = mean(y).
/// Solved through an LDLT factorization of the regularized normal matrix.
/// Throws std::invalid_argument on shape mismatch or non-finite input.
ReadoutModel ridge_fit(const Eigen::MatrixXd& x_std, const Eigen::VectorXd& y, double beta);

/// standardize_fit + ridge_fit in one step on raw features.
ReadoutModel train_readout(const Eigen::MatrixXd& x_raw, const Eigen::VectorXd& y,
                           double beta = 1e-11);

Eigen::VectorXd predict(const ReadoutModel& model, const Eigen::MatrixXd& x_raw);

/// Normalized mean-squared error (1/L) sum (pred - y)^2 / var(y), with the
/// population variance of y over the evaluation window. Throws
/// std::invalid_argument on length mismatch or L < 2, std::domain_error on
/// a constant target.
double nmse(const Eigen::VectorXd& predictions, const Eigen::VectorXd& targets);

/// Shared-design ridge solver: factorize (X^T X + beta I) once, then solve
/// for many targets. Produces exactly the same solutions as ridge_fit.
class RidgeWorkspace {
 public:
  RidgeWorkspace(Eigen::MatrixXd x_std, double beta);
  /// -> (weights, bias) for one target.
  std::pair<Eigen::VectorXd, double> solve(const Eigen::VectorXd& y) const;

 private:
  Eigen::MatrixXd x_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

/// Linear memory capacity per delay, MC(tau) = 1 - NMSE of reconstructing
/// the drive delayed by tau on the test window.
struct CapacityProfile {
  std::vector<double> raw;      ///< MC(tau), tau = 1..max_delay, unclipped
  std::vector<double> clipped;  ///< raw clipped into [0, 1] for reporting
  double total = 0.0;           ///< sum of clipped values
};

struct EvalWindows {
  int washout = 200;
  int train_len = 1000;
  int test_len = 1000;
  int total() const { return washout + train_len + test_len; }
};

/// Fit one readout per delay against target drive[k - tau] on the training
/// window, evaluate on the test window. `features` is the T x d trace and
/// `drive` the i.i.d. input that produced it; requires washout >= max_delay.
CapacityProfile memory_capacity(const Eigen::MatrixXd& features, const std::vector<double>& drive,
                                const EvalWindows& windows, int max_delay = 25,
                                double beta = 1e-11);

}  // namespace loqr
