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

#include "loqr/mesh.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace loqr {

const char* to_string(MziRole role) {
  switch (role) {
    case MziRole::Input: return "input";
    case MziRole::Wedge: return "wedge";
    case MziRole::Static: return "static";
    case MziRole::Unused: return "unused";
  }
  return "?";
}

Eigen::Matrix2cd mzi_unitary(const MziParams& params) {
  if (!std::isfinite(params.theta) || !std::isfinite(params.phi))
    throw std::invalid_argument("mzi_unitary: parameters must be finite");
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  const std::complex<double> e = std::polar(1.0, params.phi);
  Eigen::Matrix2cd u;
  u << e * c, -s,
       e * s, c;
  return u;
}

MeshLayout build_default_layout(int modes, int photons) {
  if (modes < 8 || modes % 2 != 0)
    throw std::invalid_argument("build_default_layout: need an even mode count >= 8");
  if (modes % 4 != 0)
    throw std::invalid_argument(
        "build_default_layout: the central input pairs only exist in the "
        "first-layer pairing when the mode count is a multiple of 4");
  if (photons < 0 || photons > modes)
    throw std::invalid_argument("build_default_layout: need 0 <= photons <= modes");

  MeshLayout layout;
  layout.modes = modes;
  layout.layers = modes;
  layout.central_lo = modes / 2 - 1;
  const int c = layout.central_lo;

  // First layer whose light cone [c-(l-1), c+3+(l-1)] covers [1, modes].
  int lw = 1;
  while (c - (lw - 1) > 1 || c + 3 + (lw - 1) < modes) ++lw;
  layout.wedge_depth = lw;

  for (int layer = 1; layer <= layout.layers; ++layer) {
    const int cone_lo = c - (layer - 1);
    const int cone_hi = c + 3 + (layer - 1);
    for (int lo = (layer % 2 == 1) ? 1 : 2; lo + 1 <= modes; lo += 2) {
      MziSpec spec{layer, lo, lo + 1, MziRole::Static};
      if (layer == 1) {
        spec.role = (lo == c || lo == c + 2) ? MziRole::Input : MziRole::Unused;
      } else if (layer <= lw) {
        const bool inside = lo >= cone_lo && lo + 1 <= cone_hi;
        spec.role = inside ? MziRole::Wedge : MziRole::Unused;
      }
      const int idx = static_cast<int>(layout.mzis.size());
      layout.mzis.push_back(spec);
      switch (spec.role) {
        case MziRole::Input: layout.input_mzis.push_back(idx); break;
        case MziRole::Wedge: layout.wedge_mzis.push_back(idx); break;
        case MziRole::Static: layout.static_mzis.push_back(idx); break;
        case MziRole::Unused: break;
      }
    }
  }
  return layout;
}

MeshParams sample_static_params(const MeshLayout& layout, RandomEngine& rng) {
  constexpr double pi = std::numbers::pi;
  MeshParams params;
  for (std::size_t idx = 0; idx < layout.mzis.size(); ++idx) {
    switch (layout.mzis[idx].role) {
      case MziRole::Static: {
        const double theta = rng.uniform(0.0, pi / 2.0);
        const double phi = rng.uniform(0.0, 2.0 * pi);
        params[static_cast<int>(idx)] = {theta, phi};
        break;
      }
      case MziRole::Input:
        params[static_cast<int>(idx)] = {pi / 4.0, 0.0};
        break;
      case MziRole::Wedge:
        params[static_cast<int>(idx)] = {pi / 4.0, pi};
        break;
      case MziRole::Unused:
        break;
    }
  }
  return params;
}

Eigen::MatrixXcd compose_mesh(const MeshLayout& layout, const MeshParams& params) {
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(layout.modes, layout.modes);
  Eigen::RowVectorXcd row_lo(layout.modes), row_hi(layout.modes);
  // Layer-major order; layer 1 hits the input state first, so each block
  // left-multiplies the accumulated matrix.
  for (std::size_t idx = 0; idx < layout.mzis.size(); ++idx) {
    const MziSpec& spec = layout.mzis[idx];
    if (spec.role == MziRole::Unused) continue;
    auto it = params.find(static_cast<int>(idx));
    if (it == params.end())
      throw std::invalid_argument("compose_mesh: missing parameters for MZI " +
                                  std::to_string(idx));
    const Eigen::Matrix2cd u = mzi_unitary(it->second);
    const int i = spec.mode_lo - 1;
    const int j = spec.mode_hi - 1;
    row_lo = u(0, 0) * v.row(i) + u(0, 1) * v.row(j);
    row_hi = u(1, 0) * v.row(i) + u(1, 1) * v.row(j);
    v.row(i) = row_lo;
    v.row(j) = row_hi;
  }
  return v;
}

std::string MeshLayout::table() const {
  std::ostringstream out;
  out << "# modes=" << modes << " layers=" << layers
      << " central=" << central_lo << ".." << central_hi()
      << " wedge_depth=" << wedge_depth
      << " r_fb=" << feedback_mzi_count() << "\n";
  out << "# idx layer modes role\n";
  for (std::size_t idx = 0; idx < mzis.size(); ++idx) {
    const MziSpec& m = mzis[idx];
    out << idx << " " << m.layer << " " << m.mode_lo << "," << m.mode_hi
        << " " << to_string(m.role) << "\n";
  }
  return out.str();
}

}  // namespace loqr
