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

#include "loqr/reservoir.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace loqr {

namespace {

constexpr double pi = std::numbers::pi;

void assign_wedge_params(const Eigen::VectorXd& h, double alpha_fb, const MeshLayout& layout,
                         MeshParams& params) {
  const int r_fb = layout.feedback_mzi_count();
  for (int r = 0; r < r_fb; ++r) {
    const double theta = pi / 4.0 + (pi / 2.0) * alpha_fb * h[r];
    const double phi = pi + 2.0 * pi * alpha_fb * h[r_fb + r];
    params[layout.wedge_mzis[r]] = {theta, phi};
  }
}

}  // namespace

FeedbackMap sample_feedback_map(int wedge_count, int feature_dim, double alpha_fb,
                                RandomEngine& rng) {
  if (wedge_count < 0 || feature_dim < 1)
    throw std::invalid_argument("sample_feedback_map: bad dimensions");
  FeedbackMap map;
  map.alpha_fb = alpha_fb;
  map.v_fb.resize(2 * wedge_count, feature_dim);
  const double sigma = 1.0 / std::sqrt(static_cast<double>(feature_dim));
  for (Eigen::Index r = 0; r < map.v_fb.rows(); ++r)
    for (Eigen::Index c = 0; c < map.v_fb.cols(); ++c) map.v_fb(r, c) = sigma * rng.normal();
  return map;
}

std::array<MziParams, 2> encode_input(double x, double alpha_in) {
  if (!std::isfinite(x) || !std::isfinite(alpha_in))
    throw std::invalid_argument("encode_input: non-finite input");
  return {MziParams{pi / 4.0 + alpha_in * x, 0.0}, MziParams{pi / 4.0 - alpha_in * x, 0.0}};
}

MeshParams feedback_params(const CoincidenceVector& c_prev, const FeedbackMap& map,
                           const MeshLayout& layout) {
  if (c_prev.values.size() != map.v_fb.cols())
    throw std::invalid_argument("feedback_params: coincidence dimension mismatch");
  if (map.v_fb.rows() != 2 * layout.feedback_mzi_count())
    throw std::invalid_argument("feedback_params: map does not match the wedge size");
  const Eigen::VectorXd h = map.v_fb * c_prev.values;
  MeshParams params;
  assign_wedge_params(h, map.alpha_fb, layout, params);
  return params;
}

Reservoir::Reservoir(const ReservoirConfig& config)
    : config_(config),
      layout_(build_default_layout(config.modes, config.photons)),
      shot_rng_(config.seeds.shots) {
  if (config.photons < 1 || config.photons > 4)
    throw std::invalid_argument(
        "Reservoir: the 4-mode input block carries one photon per mode, so "
        "1 <= photons <= 4");
  if (!(config.eta_eff >= 0.0 && config.eta_eff <= 1.0))
    throw std::invalid_argument("Reservoir: eta_eff must lie in [0, 1]");

  RandomEngine mesh_rng(config.seeds.mesh);
  static_params_ = sample_static_params(layout_, mesh_rng);
  params_ = static_params_;

  RandomEngine feedback_rng(config.seeds.feedback);
  map_ = sample_feedback_map(layout_.feedback_mzi_count(),
                             static_cast<int>(feature_dimension()), config.alpha_fb,
                             feedback_rng);

  basis_ = enumerate_basis(config.modes, config.photons);
  input_.occupations.assign(config.modes, 0);
  for (int k = 0; k < config.photons; ++k)
    input_.occupations[layout_.central_lo - 1 + k] = 1;

  loss_.eta_eff = config.eta_eff;
  h_.resize(2 * layout_.feedback_mzi_count());
}

CoincidenceVector Reservoir::step(const CoincidenceVector& c_prev, double x) {
  if (c_prev.values.size() != map_.v_fb.cols())
    throw std::invalid_argument("Reservoir::step: coincidence dimension mismatch");
  const auto input = encode_input(x, config_.alpha_in);
  params_[layout_.input_mzis[0]] = input[0];
  params_[layout_.input_mzis[1]] = input[1];
  h_.noalias() = map_.v_fb * c_prev.values;
  assign_wedge_params(h_, map_.alpha_fb, layout_, params_);

  const Eigen::MatrixXcd v = compose_mesh(layout_, params_);
  const PnrDistribution dist = output_distribution(v, input_, basis_);
  if (config_.exact()) return coincidence_vector(dist, loss_);
  return sample_coincidences(dist, loss_, config_.shots, shot_rng_,
                             config_.gaussian_threshold);
}

RunTrace Reservoir::run(std::span<const double> drive) {
  const auto steps = static_cast<Eigen::Index>(drive.size());
  RunTrace trace;
  trace.inputs.assign(drive.begin(), drive.end());
  trace.features.resize(steps, static_cast<Eigen::Index>(feature_dimension()));

  CoincidenceVector c;
  c.modes = config_.modes;
  c.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(feature_dimension()));
  for (Eigen::Index k = 0; k < steps; ++k) {
    c = step(c, drive[static_cast<std::size_t>(k)]);
    trace.features.row(k) = c.values.transpose();
  }
  return trace;
}

RunTrace run_reservoir(const ReservoirConfig& config, std::span<const double> drive) {
  Reservoir reservoir(config);
  return reservoir.run(drive);
}

CapacityProfile memory_capacity(const RunTrace& trace, const EvalWindows& windows, int max_delay,
                                double beta) {
  return memory_capacity(trace.features, trace.inputs, windows, max_delay, beta);
}

std::string trace_csv(const RunTrace& trace, int modes) {
  std::ostringstream out;
  out << "k,x";
  for (int i = 1; i <= modes; ++i)
    for (int j = i + 1; j <= modes; ++j) out << ",C_" << i << "_" << j;
  out << "\n";
  char buf[40];
  for (Eigen::Index k = 0; k < trace.features.rows(); ++k) {
    out << (k + 1);
    std::snprintf(buf, sizeof buf, "%.17g", trace.inputs[static_cast<std::size_t>(k)]);
    out << "," << buf;
    for (Eigen::Index c = 0; c < trace.features.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", trace.features(k, c));
      out << "," << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace loqr
