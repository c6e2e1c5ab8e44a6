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
#include <complex>
#include <cstdint>
#include <vector>

namespace loqr {

/// Photon occupations over the optical modes.
struct FockState {
  std::vector<int> occupations;

  int modes() const { return static_cast<int>(occupations.size()); }
  int photon_number() const;
  bool operator==(const FockState&) const = default;
};

/// Complete N-photon basis over M modes, enumerated in descending
/// lexicographic order of the occupation vector: (N,0,...,0) first,
/// (0,...,0,N) last. The order is a frozen contract — feature indexing and
/// serialized distributions depend on it.
///
/// Alongside the states the basis carries per-state data needed by the
/// scattering hot path: output row repetitions and 1/prod(q_j!) factors.
struct FockBasis {
  int modes = 0;
  int photons = 0;
  std::vector<FockState> states;
  /// Flattened per-state output-row indices (0-based mode repeated q_j
  /// times), `photons` entries per state.
  std::vector<int> row_indices;
  /// Per-state 1 / prod_j q_j!.
  std::vector<double> inv_factorial;
  /// Flattened per-state occupied-mode lists with offsets.
  std::vector<int> occupied_modes;
  std::vector<std::int32_t> occupied_offsets;  ///< size() + 1 entries

  std::size_t size() const { return states.size(); }
  /// Index of a state in the basis order; throws std::invalid_argument if
  /// the state does not belong to the basis.
  std::size_t index_of(const FockState& state) const;
};

/// Enumerate the C(M+N-1, N) states. Throws std::overflow_error if the
/// basis size does not fit the index type.
FockBasis enumerate_basis(int modes, int photons);

/// Matrix permanent per(A) = sum_{sigma} prod_i A_{i,sigma(i)}, computed
/// with Glynn's formula over a Gray-code walk, O(2^n n). per of the empty
/// matrix is 1. Throws std::invalid_argument for non-square input.
std::complex<double> permanent(const Eigen::MatrixXcd& a);

/// N x N scattering submatrix: column i of `v` repeated input.occupations[i]
/// times, then row j repeated output.occupations[j] times. Throws
/// std::invalid_argument on photon-number mismatch.
Eigen::MatrixXcd scattering_submatrix(const Eigen::MatrixXcd& v, const FockState& input,
                                      const FockState& output);

/// |per(V_{Q,S})|^2 / (prod s_i! prod q_j!), clamped into [0, 1] within a
/// 1e-12 slack; a larger violation throws std::runtime_error.
double transition_probability(const Eigen::MatrixXcd& v, const FockState& input,
                              const FockState& output);

/// Exact photon-number-resolved output distribution over `basis`.
struct PnrDistribution {
  const FockBasis* basis = nullptr;
  std::vector<double> probs;
};

/// Evaluate the transition probability to every basis state. Sums to 1
/// (within 1e-9) for unitary `v`. Throws std::invalid_argument if the basis
/// does not match the input state's modes/photons.
PnrDistribution output_distribution(const Eigen::MatrixXcd& v, const FockState& input,
                                    const FockBasis& basis);

/// CSV dump (index, occupation string, probability) for debugging.
std::string distribution_csv(const PnrDistribution& dist);

}  // namespace loqr
