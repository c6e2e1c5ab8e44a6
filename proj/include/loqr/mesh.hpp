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
#include <map>
#include <string>
#include <vector>

#include "loqr/rng.hpp"

namespace loqr {

/// Role of a Mach-Zehnder interferometer inside the mesh.
///
/// Input:  first-layer MZIs that encode the drive sample.
/// Wedge:  fan-out MZIs reprogrammed by the feedback loop every cycle.
/// Static: downstream mixing MZIs held at fixed random settings.
/// Unused: never-illuminated corners, implemented as identity.
enum class MziRole { Input, Wedge, Static, Unused };

const char* to_string(MziRole role);

/// One MZI position: layer (1-based) and the adjacent mode pair it couples
/// (1-based, hi = lo + 1).
struct MziSpec {
  int layer = 0;
  int mode_lo = 0;
  int mode_hi = 0;
  MziRole role = MziRole::Unused;
};

/// Internal angle theta and external phase phi of one MZI, in radians.
/// Any finite value is legal; the unitary is periodic.
struct MziParams {
  double theta = 0.0;
  double phi = 0.0;
};

/// Placement and role partition of an M-mode rectangular MZI mesh.
///
/// Odd layers couple (1,2),(3,4),...; even layers couple (2,3),(4,5),...
/// `mzis` is layer-major (layer ascending, mode ascending within a layer)
/// and that order is the contract for parameter assignment.
struct MeshLayout {
  int modes = 0;
  int layers = 0;
  int central_lo = 0;  ///< first mode of the 4-mode central block (1-based)
  int wedge_depth = 0; ///< last layer containing wedge MZIs (L_w)
  std::vector<MziSpec> mzis;
  std::vector<int> input_mzis;   ///< indices into `mzis`, layout order
  std::vector<int> wedge_mzis;   ///< indices into `mzis`, layout order
  std::vector<int> static_mzis;  ///< indices into `mzis`, layout order

  int central_hi() const { return central_lo + 3; }
  /// Number of feedback-programmed MZIs (R_fb).
  int feedback_mzi_count() const { return static_cast<int>(wedge_mzis.size()); }

  /// Textual table (one row per MZI: index, layer, modes, role), stable
  /// format for documentation and golden tests.
  std::string table() const;
};

/// Parameter assignment: MZI index (position in MeshLayout::mzis) -> params.
/// Must cover every non-Unused MZI; entries for Unused MZIs are ignored.
using MeshParams = std::map<int, MziParams>;

/// 2x2 MZI unitary
///   [ e^{i phi} cos theta   -sin theta ]
///   [ e^{i phi} sin theta    cos theta ]
/// Throws std::invalid_argument on non-finite parameters.
Eigen::Matrix2cd mzi_unitary(const MziParams& params);

/// Default Galton-wedge layout for an M-mode mesh carrying N photons.
///
/// Layer 1 holds the two Input MZIs on (c, c+1) and (c+2, c+3) with
/// c = M/2 - 1. Layers 2..L_w hold Wedge MZIs whose mode pair lies inside
/// the light cone [c - (l-1), c+3 + (l-1)] of the central block, where L_w
/// is the first layer whose cone covers [1, M]. Positions in layers 1..L_w
/// outside the cone are Unused; layers L_w+1..M are Static. Requires M a
/// multiple of 4 (the input pairs must exist in the odd-layer pairing),
/// M >= 8 and M >= N.
MeshLayout build_default_layout(int modes, int photons);

/// Draw fixed settings: Static MZIs get theta ~ U[0, pi/2) and
/// phi ~ U[0, 2 pi); Input MZIs are set to the balanced point (pi/4, 0);
/// Wedge MZIs to the zero-feedback base point (pi/4, pi). Unused MZIs are
/// omitted. Deterministic given the generator state.
MeshParams sample_static_params(const MeshLayout& layout, RandomEngine& rng);

/// Full M x M unitary: product over layers of the direct sum of MZI blocks,
/// layer 1 applied first to the input state. Throws std::invalid_argument if
/// a non-Unused MZI has no parameter entry.
Eigen::MatrixXcd compose_mesh(const MeshLayout& layout, const MeshParams& params);

}  // namespace loqr
