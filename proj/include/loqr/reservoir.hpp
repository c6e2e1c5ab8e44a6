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
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "loqr/detection.hpp"
#include "loqr/fock.hpp"
#include "loqr/mesh.hpp"
#include "loqr/readout.hpp"
#include "loqr/rng.hpp"

namespace loqr {

/// Fixed random linear map from the coincidence vector to the 2 R_fb wedge
/// control amplitudes. Entries are i.i.d. N(0, 1/d) with d the coincidence
/// dimension; the map stays fixed for a whole run.
struct FeedbackMap {
  Eigen::MatrixXd v_fb;  ///< (2 R_fb) x d
  double alpha_fb = 0.0;
};

FeedbackMap sample_feedback_map(int wedge_count, int feature_dim, double alpha_fb,
                                RandomEngine& rng);

struct ReservoirSeeds {
  std::uint64_t mesh = 1;
  std::uint64_t feedback = 2;
  std::uint64_t drive = 3;
  std::uint64_t shots = 4;
};

struct ReservoirConfig {
  int modes = 16;
  int photons = 4;
  double alpha_in = 0.001;
  double alpha_fb = 2.2;
  double eta_eff = 1.0;
  /// 0 = exact expectation values; otherwise the per-step measurement budget.
  std::uint64_t shots = 0;
  std::uint64_t gaussian_threshold = 1'000'000;
  EvalWindows windows;
  ReservoirSeeds seeds;

  bool exact() const { return shots == 0; }
  int total_steps() const { return windows.total(); }
};

/// Input encoding: the two input MZIs are detuned push-pull around the
/// balanced point, theta = pi/4 +- alpha_in x, external phases 0.
std::array<MziParams, 2> encode_input(double x, double alpha_in);

/// Wedge parameters from the previous coincidence vector. With
/// h = V_fb C_prev and R = R_fb:
///   theta_r = pi/4 + (pi/2) alpha_fb h_r,
///   phi_r   = pi   + 2 pi  alpha_fb h_{R+r},
/// assigned to the wedge MZIs in layout order (theta amplitudes occupy the
/// first half of h). C_prev = 0 gives the base point (pi/4, pi) everywhere.
/// Throws std::invalid_argument on dimension mismatch.
MeshParams feedback_params(const CoincidenceVector& c_prev, const FeedbackMap& map,
                           const MeshLayout& layout);

/// Closed-loop trace: row k of `features` is the coincidence vector C_k
/// produced after encoding inputs[k], so it depends only on inputs[0..k]
/// and the seeds.
struct RunTrace {
  Eigen::MatrixXd features;
  std::vector<double> inputs;
};

/// One reservoir instance: layout, static settings and feedback map are
/// drawn once from the config seeds; step() and run() evolve the loop.
class Reservoir {
 public:
  explicit Reservoir(const ReservoirConfig& config);

  /// One cycle: encode x, program the wedge from c_prev, propagate, detect.
  /// In finite-shot mode the returned estimate is the sampled one — the
  /// same noisy vector the next step's feedback consumes.
  CoincidenceVector step(const CoincidenceVector& c_prev, double x);

  /// Iterate step() from C_0 = 0 over the whole drive; returns all rows
  /// including washout (callers slice).
  RunTrace run(std::span<const double> drive);

  const MeshLayout& layout() const { return layout_; }
  const MeshParams& static_params() const { return static_params_; }
  const FeedbackMap& feedback_map() const { return map_; }
  const FockState& input_state() const { return input_; }
  const ReservoirConfig& config() const { return config_; }
  std::size_t feature_dimension() const { return CoincidenceVector::dimension(config_.modes); }

 private:
  ReservoirConfig config_;
  MeshLayout layout_;
  MeshParams static_params_;  // as sampled
  MeshParams params_;         // working copy: input/wedge entries rewritten per step
  FeedbackMap map_;
  FockBasis basis_;
  FockState input_;
  LossModel loss_;
  RandomEngine shot_rng_;
  Eigen::VectorXd h_;  // scratch
};

/// Convenience: build a Reservoir from `config` and run it over `drive`.
RunTrace run_reservoir(const ReservoirConfig& config, std::span<const double> drive);

/// Capacity of a trace produced under `config` (drive must be the i.i.d.
/// sequence stored in the trace).
CapacityProfile memory_capacity(const RunTrace& trace, const EvalWindows& windows,
                                int max_delay = 25, double beta = 1e-11);

/// CSV serialization, header `k,x,C_1_2,...,C_{M-1}_{M}`.
std::string trace_csv(const RunTrace& trace, int modes);

}  // namespace loqr
