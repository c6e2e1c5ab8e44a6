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
#include <random>

namespace loqr {

/// SplitMix64 mixing step (Steele, Lea & Flood 2014). Used only to derive
/// well-separated sub-seeds; the simulation streams themselves run on
/// std::mt19937_64.
std::uint64_t splitmix64(std::uint64_t x);

/// Named random streams, so every stochastic ingredient of a run has an
/// independent, reproducible seed.
enum class SeedStream : std::uint64_t {
  Mesh = 0,
  Feedback = 1,
  Drive = 2,
  Shots = 3,
};

/// Counter-based seed derivation: master -> (realization, stream) sub-seed.
/// Two chained SplitMix64 rounds keyed on the realization counter and the
/// stream id. Documented so sweep outputs can be reproduced from the master
/// seed alone.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t realization, SeedStream stream);

/// Seeded generator with self-contained uniform/normal transforms.
///
/// std::uniform_real_distribution and std::normal_distribution are
/// implementation-defined, so this wrapper hand-rolls both on top of
/// mt19937_64 to keep every output bit reproducible across toolchains.
class RandomEngine {
 public:
  explicit RandomEngine(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via the polar (Marsaglia) method; pairs are cached.
  double normal();

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-random unitary from the QR decomposition of a complex Ginibre
/// matrix, with the standard phase fix on the diagonal of R.
Eigen::MatrixXcd haar_unitary(int modes, RandomEngine& rng);

}  // namespace loqr
