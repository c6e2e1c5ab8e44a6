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

#include "loqr/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace loqr {

namespace {

int exact_ratio(double num, double den, const char* what) {
  const double r = num / den;
  const int n = static_cast<int>(std::llround(r));
  if (n < 1 || std::abs(n * den - num) > 1e-9)
    throw std::invalid_argument(std::string("mg_raw_series: ") + what +
                                " must be an integral multiple of the substep");
  return n;
}

}  // namespace

std::vector<double> mg_raw_series(const MgParams& params, int n_samples) {
  if (n_samples < 0) throw std::invalid_argument("mg_raw_series: negative sample count");
  const double h = params.substep;
  if (!(h > 0.0)) throw std::invalid_argument("mg_raw_series: substep must be positive");
  const int lag = exact_ratio(params.tau_delay, h, "tau_delay");
  const int per = exact_ratio(params.dt_sample, h, "dt_sample");

  const std::size_t steps =
      static_cast<std::size_t>(per) * (params.transient_samples + n_samples);
  std::vector<double> q(steps + 1), dq(steps + 1);

  const auto f = [&](double x, double x_delayed) {
    return params.alpha * x_delayed / (1.0 + std::pow(x_delayed, params.beta)) -
           params.gamma * x;
  };
  q[0] = params.initial_value;
  dq[0] = f(q[0], params.initial_value);

  // Delayed value at t = (i + 1/2) h - tau via cubic Hermite between the two
  // bracketing grid points (their derivatives are stored as we go). The
  // constant pre-history has derivative zero.
  const auto delayed_half = [&](std::size_t i) {
    const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - lag;
    if (j < 0) return params.initial_value;
    const double v0 = q[j], v1 = q[j + 1];
    const double d0 = dq[j], d1 = dq[j + 1];
    // Hermite basis at t = 1/2: h00 = h01 = 1/2, h10 = -h11 = 1/8.
    return 0.5 * (v0 + v1) + 0.125 * h * (d0 - d1);
  };

  for (std::size_t i = 0; i < steps; ++i) {
    const double x = q[i];
    const double xd0 = (static_cast<std::ptrdiff_t>(i) - lag < 0)
                           ? params.initial_value
                           : q[i - lag];
    const double xdh = delayed_half(i);
    const double xd1 = (static_cast<std::ptrdiff_t>(i) + 1 - lag < 0)
                           ? params.initial_value
                           : q[i + 1 - lag];
    const double k1 = f(x, xd0);
    const double k2 = f(x + 0.5 * h * k1, xdh);
    const double k3 = f(x + 0.5 * h * k2, xdh);
    const double k4 = f(x + h * k3, xd1);
    q[i + 1] = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    dq[i + 1] = f(q[i + 1], xd1);
  }

  std::vector<double> samples(n_samples);
  for (int k = 0; k < n_samples; ++k)
    samples[k] = q[static_cast<std::size_t>(per) * (params.transient_samples + k + 1)];
  return samples;
}

ForecastSeries mackey_glass(const MgParams& params, int total_steps, int horizon) {
  if (horizon < 0) throw std::invalid_argument("mackey_glass: horizon must be >= 0");
  if (total_steps < 1) throw std::invalid_argument("mackey_glass: total_steps must be >= 1");
  const std::vector<double> raw = mg_raw_series(params, total_steps + horizon);
  const std::vector<double> norm = minmax_normalize(raw);
  ForecastSeries series;
  series.horizon = horizon;
  series.inputs.assign(norm.begin(), norm.begin() + total_steps);
  series.targets.resize(total_steps);
  for (int k = 0; k < total_steps; ++k) series.targets[k] = norm[k + horizon];
  return series;
}

std::vector<double> narma(const NarmaParams& params, std::span<const double> drive) {
  if (params.order < 1) throw std::invalid_argument("narma: order must be >= 1");
  const int n = params.order;
  const auto t = static_cast<std::ptrdiff_t>(drive.size());
  std::vector<double> y(drive.size(), 0.0);
  const auto y_at = [&](std::ptrdiff_t k) { return k >= 0 ? y[k] : 0.0; };
  const auto x_at = [&](std::ptrdiff_t k) { return k >= 0 ? drive[k] : 0.0; };
  for (std::ptrdiff_t k = 0; k < t; ++k) {
    double history = 0.0;
    for (int j = 0; j < n; ++j) history += y_at(k - 1 - j);
    y[k] = params.alpha * y_at(k - 1) + params.beta * y_at(k - 1) * history +
           params.gamma * x_at(k - 1) * x_at(k - n) + params.delta;
    if (!(std::abs(y[k]) <= params.divergence_limit))
      throw NarmaDivergence("narma: recurrence diverged at step " + std::to_string(k));
  }
  return y;
}

IsingEvolution::IsingEvolution(const IsingParams& params) : params_(params) {
  const int l = params.sites;
  if (l < 2) throw std::invalid_argument("IsingEvolution: need at least 2 sites");
  if (l > 12)
    throw std::invalid_argument("IsingEvolution: dense evolution is limited to 12 sites");
  if (params.observable_site < 1 || params.observable_site > l)
    throw std::invalid_argument("IsingEvolution: observable site out of range");

  const int dim = 1 << l;
  // Bit i of the basis index: 0 = spin up (sz = +1), 1 = spin down.
  const auto sz = [](int state, int site) { return (state >> site) & 1 ? -1.0 : 1.0; };
  h_ = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 0; i + 1 < l; ++i)
      diag += -params.coupling * sz(s, i) * sz(s, i + 1);
    for (int i = 0; i < l; ++i) diag += params.field_z * sz(s, i);
    h_(s, s) = diag;
    for (int i = 0; i < l; ++i) h_(s ^ (1 << i), s) += params.field_x;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h_);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("IsingEvolution: diagonalization failed");
  evec_ = solver.eigenvectors();
  eval_ = solver.eigenvalues();
}

Eigen::VectorXcd IsingEvolution::evolve(const Eigen::VectorXcd& state, double dt) const {
  const Eigen::VectorXcd coeffs = evec_.transpose() * state;
  Eigen::VectorXcd rotated(coeffs.size());
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    rotated[k] = coeffs[k] * std::polar(1.0, -eval_[k] * dt);
  return evec_ * rotated;
}

Eigen::VectorXcd IsingEvolution::state_at(double t) const {
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(h_.rows());
  psi0[0] = 1.0;  // all spins up
  return evolve(psi0, t);
}

double IsingEvolution::magnetization(const Eigen::VectorXcd& state) const {
  const int site = params_.observable_site - 1;
  double m = 0.0;
  for (Eigen::Index s = 0; s < state.size(); ++s) {
    const double sign = (s >> site) & 1 ? -1.0 : 1.0;
    m += sign * std::norm(state[s]);
  }
  return m;
}

double IsingEvolution::energy(const Eigen::VectorXcd& state) const {
  return (state.adjoint() * (h_ * state))(0).real();
}

std::vector<double> ising_raw_series(const IsingParams& params, int n_samples) {
  const IsingEvolution evolution(params);
  std::vector<double> samples(n_samples);
  Eigen::VectorXcd psi = evolution.state_at(0.0);
  for (int k = 0; k < n_samples; ++k) {
    psi = evolution.evolve(psi, params.dt);
    samples[k] = evolution.magnetization(psi);
  }
  return samples;
}

std::vector<double> ising_series(const IsingParams& params, int n_samples) {
  return minmax_normalize(ising_raw_series(params, n_samples));
}

std::vector<double> minmax_normalize(std::span<const double> xs) {
  std::vector<double> out(xs.begin(), xs.end());
  if (out.empty()) return out;
  const auto [lo, hi] = std::minmax_element(out.begin(), out.end());
  const double range = *hi - *lo;
  if (range == 0.0) {
    std::fill(out.begin(), out.end(), 0.5);
    return out;
  }
  for (double& x : out) x = (x - *lo) / range;
  return out;
}

std::vector<double> iid_drive(int count, double lo, double hi, RandomEngine& rng) {
  if (count < 1) throw std::invalid_argument("iid_drive: count must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("iid_drive: empty range");
  std::vector<double> xs(count);
  for (double& x : xs) x = rng.uniform(lo, hi);
  return xs;
}

std::string series_csv(const ForecastSeries& series) {
  std::ostringstream out;
  out << "k,x,y_target\n";
  char buf[40];
  for (std::size_t k = 0; k < series.inputs.size(); ++k) {
    out << (k + 1);
    std::snprintf(buf, sizeof buf, "%.17g", series.inputs[k]);
    out << "," << buf;
    std::snprintf(buf, sizeof buf, "%.17g", series.targets[k]);
    out << "," << buf << "\n";
  }
  return out.str();
}

}  // namespace loqr
