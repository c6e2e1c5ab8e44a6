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

#include "loqr/readout.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loqr {

Standardization standardize_fit(const Eigen::MatrixXd& features) {
  if (features.rows() == 0 || features.cols() == 0)
    throw std::invalid_argument("standardize_fit: empty feature matrix");
  Standardization stats;
  stats.mean = features.colwise().mean();
  const Eigen::MatrixXd centered = features.rowwise() - stats.mean.transpose();
  stats.stddev =
      (centered.array().square().colwise().sum() / static_cast<double>(features.rows()))
          .sqrt()
          .transpose();
  for (Eigen::Index j = 0; j < stats.stddev.size(); ++j)
    if (stats.stddev[j] == 0.0) stats.stddev[j] = 1.0;
  return stats;
}

Eigen::MatrixXd standardize_apply(const Eigen::MatrixXd& features, const Standardization& stats) {
  if (features.cols() != stats.mean.size())
    throw std::invalid_argument("standardize_apply: feature dimension mismatch");
  return (features.rowwise() - stats.mean.transpose()).array().rowwise() /
         stats.stddev.transpose().array();
}

ReadoutModel ridge_fit(const Eigen::MatrixXd& x_std, const Eigen::VectorXd& y, double beta) {
  if (x_std.rows() == 0) throw std::invalid_argument("ridge_fit: empty design matrix");
  if (x_std.rows() != y.size())
    throw std::invalid_argument("ridge_fit: targets do not match the design matrix");
  if (!x_std.allFinite() || !y.allFinite() || !std::isfinite(beta))
    throw std::invalid_argument("ridge_fit: non-finite input");
  RidgeWorkspace workspace(x_std, beta);
  ReadoutModel model;
  model.beta = beta;
  std::tie(model.weights, model.bias) = workspace.solve(y);
  model.stats.mean = Eigen::VectorXd::Zero(x_std.cols());
  model.stats.stddev = Eigen::VectorXd::Ones(x_std.cols());
  return model;
}

ReadoutModel train_readout(const Eigen::MatrixXd& x_raw, const Eigen::VectorXd& y, double beta) {
  Standardization stats = standardize_fit(x_raw);
  ReadoutModel model = ridge_fit(standardize_apply(x_raw, stats), y, beta);
  model.stats = std::move(stats);
  return model;
}

Eigen::VectorXd predict(const ReadoutModel& model, const Eigen::MatrixXd& x_raw) {
  return (standardize_apply(x_raw, model.stats) * model.weights).array() + model.bias;
}

double nmse(const Eigen::VectorXd& predictions, const Eigen::VectorXd& targets) {
  if (predictions.size() != targets.size())
    throw std::invalid_argument("nmse: length mismatch");
  const Eigen::Index n = targets.size();
  if (n < 2) throw std::invalid_argument("nmse: need at least 2 samples");
  const double mean = targets.mean();
  const double var = (targets.array() - mean).square().sum() / static_cast<double>(n);
  if (var == 0.0) throw std::domain_error("nmse: constant target has zero variance");
  const double mse = (predictions - targets).squaredNorm() / static_cast<double>(n);
  return mse / var;
}

RidgeWorkspace::RidgeWorkspace(Eigen::MatrixXd x_std, double beta) : x_(std::move(x_std)) {
  Eigen::MatrixXd gram = x_.transpose() * x_;
  gram.diagonal().array() += beta;
  ldlt_.compute(gram);
  if (ldlt_.info() != Eigen::Success)
    throw std::runtime_error("RidgeWorkspace: factorization failed");
}

std::pair<Eigen::VectorXd, double> RidgeWorkspace::solve(const Eigen::VectorXd& y) const {
  const double bias = y.mean();
  const Eigen::VectorXd rhs = x_.transpose() * (y.array() - bias).matrix();
  return {ldlt_.solve(rhs), bias};
}

CapacityProfile memory_capacity(const Eigen::MatrixXd& features, const std::vector<double>& drive,
                                const EvalWindows& windows, int max_delay, double beta) {
  const int total = windows.total();
  if (features.rows() < total || static_cast<int>(drive.size()) < total)
    throw std::invalid_argument("memory_capacity: trace shorter than the evaluation windows");
  if (windows.washout < max_delay)
    throw std::invalid_argument("memory_capacity: washout must cover the largest delay");

  const int train_begin = windows.washout;
  const int test_begin = windows.washout + windows.train_len;

  const Eigen::MatrixXd x_train = features.middleRows(train_begin, windows.train_len);
  const Eigen::MatrixXd x_test = features.middleRows(test_begin, windows.test_len);
  const Standardization stats = standardize_fit(x_train);
  const RidgeWorkspace workspace(standardize_apply(x_train, stats), beta);
  const Eigen::MatrixXd x_test_std = standardize_apply(x_test, stats);

  CapacityProfile profile;
  profile.raw.reserve(max_delay);
  profile.clipped.reserve(max_delay);
  Eigen::VectorXd y_train(windows.train_len), y_test(windows.test_len);
  for (int tau = 1; tau <= max_delay; ++tau) {
    for (int k = 0; k < windows.train_len; ++k) y_train[k] = drive[train_begin + k - tau];
    for (int k = 0; k < windows.test_len; ++k) y_test[k] = drive[test_begin + k - tau];
    const auto [weights, bias] = workspace.solve(y_train);
    const Eigen::VectorXd pred = (x_test_std * weights).array() + bias;
    const double mc = 1.0 - nmse(pred, y_test);
    profile.raw.push_back(mc);
    profile.clipped.push_back(std::clamp(mc, 0.0, 1.0));
    profile.total += profile.clipped.back();
  }
  return profile;
}

}  // namespace loqr
