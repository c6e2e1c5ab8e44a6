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

#include "loqr/rng.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace loqr {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t realization, SeedStream stream) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ (0x9E3779B97F4A7C15ULL * (realization + 1)));
  h = splitmix64(h ^ (0xBF58476D1CE4E5B9ULL * (static_cast<std::uint64_t>(stream) + 1)));
  return h;
}

double RandomEngine::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

Eigen::MatrixXcd haar_unitary(int modes, RandomEngine& rng) {
  if (modes < 1) throw std::invalid_argument("haar_unitary: modes must be >= 1");
  Eigen::MatrixXcd g(modes, modes);
  for (int i = 0; i < modes; ++i)
    for (int j = 0; j < modes; ++j) g(i, j) = std::complex<double>(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < modes; ++j) {
    std::complex<double> d = r(j, j);
    q.col(j) *= (d == std::complex<double>(0.0) ? 1.0 : d / std::abs(d));
  }
  return q;
}

}  // namespace loqr
