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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "loqr/mesh.hpp"

using namespace loqr;
constexpr double pi = std::numbers::pi;

namespace {

double unitarity_defect(const Eigen::MatrixXcd& v) {
  const Eigen::MatrixXcd d =
      v.adjoint() * v - Eigen::MatrixXcd::Identity(v.rows(), v.cols());
  return d.cwiseAbs().maxCoeff();
}

std::vector<int> wedge_count_per_layer(const MeshLayout& layout) {
  std::vector<int> counts(layout.layers + 1, 0);
  for (const auto& m : layout.mzis)
    if (m.role == MziRole::Wedge) ++counts[m.layer];
  return counts;
}

}  // namespace

TEST_CASE("mzi_unitary at the origin is the identity") {
  const Eigen::Matrix2cd u = mzi_unitary({0.0, 0.0});
  CHECK((u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("mzi_unitary at the balanced point") {
  const Eigen::Matrix2cd u = mzi_unitary({pi / 4.0, 0.0});
  const double r = std::sqrt(2.0) / 2.0;
  CHECK(u(0, 0).real() == doctest::Approx(r).epsilon(1e-14));
  CHECK(u(0, 1).real() == doctest::Approx(-r).epsilon(1e-14));
  CHECK(u(1, 0).real() == doctest::Approx(r).epsilon(1e-14));
  CHECK(u(1, 1).real() == doctest::Approx(r).epsilon(1e-14));
  CHECK(u.imag().cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("mzi_unitary is unitary away from special points") {
  const Eigen::Matrix2cd u = mzi_unitary({pi / 3.0, pi / 5.0});
  CHECK(unitarity_defect(u) < 1e-12);
}

TEST_CASE("mzi_unitary rejects non-finite parameters") {
  CHECK_THROWS_AS(mzi_unitary({std::nan(""), 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(mzi_unitary({0.0, std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
}

TEST_CASE("default layout for 16 modes") {
  const MeshLayout layout = build_default_layout(16, 4);
  CHECK(layout.modes == 16);
  CHECK(layout.layers == 16);
  CHECK(layout.central_lo == 7);
  CHECK(layout.central_hi() == 10);
  CHECK(layout.wedge_depth == 7);
  CHECK(layout.feedback_mzi_count() == 33);
  CHECK(layout.input_mzis.size() == 2);
  CHECK(layout.mzis[layout.input_mzis[0]].mode_lo == 7);
  CHECK(layout.mzis[layout.input_mzis[1]].mode_lo == 9);
  CHECK(layout.mzis[layout.input_mzis[0]].layer == 1);
  CHECK(layout.mzis[layout.input_mzis[1]].layer == 1);

  const auto counts = wedge_count_per_layer(layout);
  const std::vector<int> expected{0, 0, 3, 4, 5, 6, 7, 8};
  for (int layer = 1; layer <= 7; ++layer) CHECK(counts[layer] == expected[layer]);
  // Rectangular arrangement: M(M-1)/2 positions over M layers.
  CHECK(layout.mzis.size() == 120);
}

TEST_CASE("default layout for 8 and 12 modes matches the hand count") {
  const MeshLayout eight = build_default_layout(8, 2);
  CHECK(eight.central_lo == 3);
  CHECK(eight.wedge_depth == 3);
  CHECK(eight.feedback_mzi_count() == 7);

  const MeshLayout twelve = build_default_layout(12, 3);
  CHECK(twelve.central_lo == 5);
  CHECK(twelve.wedge_depth == 5);
  CHECK(twelve.feedback_mzi_count() == 3 + 4 + 5 + 6);
}

TEST_CASE("default layout rejects unsupported geometries") {
  CHECK_THROWS_AS(build_default_layout(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_default_layout(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_default_layout(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_default_layout(16, 17), std::invalid_argument);
}

TEST_CASE("layout pairs are disjoint within every layer and in range") {
  for (int modes : {8, 12, 16}) {
    const MeshLayout layout = build_default_layout(modes, 2);
    std::vector<std::vector<bool>> used(layout.layers + 1, std::vector<bool>(modes + 1, false));
    for (const auto& m : layout.mzis) {
      CHECK(m.mode_hi == m.mode_lo + 1);
      CHECK(m.mode_lo >= 1);
      CHECK(m.mode_hi <= modes);
      CHECK_FALSE(used[m.layer][m.mode_lo]);
      CHECK_FALSE(used[m.layer][m.mode_hi]);
      used[m.layer][m.mode_lo] = used[m.layer][m.mode_hi] = true;
    }
  }
}

TEST_CASE("sample_static_params is deterministic and in range") {
  const MeshLayout layout = build_default_layout(16, 4);
  RandomEngine rng_a(123), rng_b(123);
  const MeshParams a = sample_static_params(layout, rng_a);
  const MeshParams b = sample_static_params(layout, rng_b);
  REQUIRE(a.size() == b.size());
  for (const auto& [idx, p] : a) {
    CHECK(p.theta == b.at(idx).theta);
    CHECK(p.phi == b.at(idx).phi);
  }
  for (int idx : layout.static_mzis) {
    CHECK(a.at(idx).theta >= 0.0);
    CHECK(a.at(idx).theta <= pi / 2.0);
    CHECK(a.at(idx).phi >= 0.0);
    CHECK(a.at(idx).phi < 2.0 * pi);
  }
  for (int idx : layout.input_mzis) {
    CHECK(a.at(idx).theta == pi / 4.0);
    CHECK(a.at(idx).phi == 0.0);
  }
  for (int idx : layout.wedge_mzis) {
    CHECK(a.at(idx).theta == pi / 4.0);
    CHECK(a.at(idx).phi == pi);
  }
  for (std::size_t idx = 0; idx < layout.mzis.size(); ++idx)
    if (layout.mzis[idx].role == MziRole::Unused)
      CHECK(a.find(static_cast<int>(idx)) == a.end());
}

TEST_CASE("distinct seeds give distinct static parameters") {
  const MeshLayout layout = build_default_layout(8, 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomEngine rng_a(seed), rng_b(seed + 1000);
    const MeshParams a = sample_static_params(layout, rng_a);
    const MeshParams b = sample_static_params(layout, rng_b);
    bool any_different = false;
    for (int idx : layout.static_mzis)
      if (a.at(idx).theta != b.at(idx).theta || a.at(idx).phi != b.at(idx).phi)
        any_different = true;
    CHECK(any_different);
  }
}

TEST_CASE("compose_mesh at all-zero parameters is the identity") {
  const MeshLayout layout = build_default_layout(8, 2);
  MeshParams params;
  for (std::size_t idx = 0; idx < layout.mzis.size(); ++idx)
    if (layout.mzis[idx].role != MziRole::Unused) params[static_cast<int>(idx)] = {0.0, 0.0};
  const Eigen::MatrixXcd v = compose_mesh(layout, params);
  CHECK((v - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("compose_mesh is unitary for random parameters") {
  for (int modes : {8, 16}) {
    const MeshLayout layout = build_default_layout(modes, 2);
    RandomEngine rng(7 + modes);
    MeshParams params = sample_static_params(layout, rng);
    for (int idx : layout.wedge_mzis) params[idx] = {rng.uniform(0, pi), rng.uniform(0, 2 * pi)};
    CHECK(unitarity_defect(compose_mesh(layout, params)) < 1e-10);
  }
}

TEST_CASE("a single MZI embeds at its mode pair") {
  MeshLayout layout;
  layout.modes = 4;
  layout.layers = 1;
  layout.mzis = {MziSpec{1, 2, 3, MziRole::Static}};
  layout.static_mzis = {0};
  const MziParams p{0.7, 1.1};
  const Eigen::MatrixXcd v = compose_mesh(layout, {{0, p}});
  const Eigen::Matrix2cd u = mzi_unitary(p);
  CHECK(v(0, 0) == std::complex<double>(1.0));
  CHECK(v(3, 3) == std::complex<double>(1.0));
  CHECK(v(1, 1) == u(0, 0));
  CHECK(v(1, 2) == u(0, 1));
  CHECK(v(2, 1) == u(1, 0));
  CHECK(v(2, 2) == u(1, 1));
  CHECK(std::abs(v(0, 1)) == 0.0);
  CHECK(std::abs(v(1, 3)) == 0.0);
}

TEST_CASE("disjoint MZIs within one layer commute") {
  MeshLayout forward;
  forward.modes = 6;
  forward.layers = 1;
  forward.mzis = {MziSpec{1, 1, 2, MziRole::Static}, MziSpec{1, 3, 4, MziRole::Static},
                  MziSpec{1, 5, 6, MziRole::Static}};
  MeshLayout reversed = forward;
  std::reverse(reversed.mzis.begin(), reversed.mzis.end());

  const MeshParams params_fwd{{0, {0.3, 0.4}}, {1, {1.2, 2.3}}, {2, {0.8, 5.5}}};
  const MeshParams params_rev{{0, {0.8, 5.5}}, {1, {1.2, 2.3}}, {2, {0.3, 0.4}}};
  const Eigen::MatrixXcd a = compose_mesh(forward, params_fwd);
  const Eigen::MatrixXcd b = compose_mesh(reversed, params_rev);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("composition applies layer 1 first") {
  MeshLayout layout;
  layout.modes = 4;
  layout.layers = 2;
  layout.mzis = {MziSpec{1, 1, 2, MziRole::Static}, MziSpec{2, 1, 2, MziRole::Static}};
  const MziParams p1{0.5, 1.0}, p2{1.1, 0.3};
  const Eigen::MatrixXcd v = compose_mesh(layout, {{0, p1}, {1, p2}});
  const Eigen::Matrix2cd expected = mzi_unitary(p2) * mzi_unitary(p1);
  CHECK(std::abs(v(0, 0) - expected(0, 0)) < 1e-14);
  CHECK(std::abs(v(0, 1) - expected(0, 1)) < 1e-14);
  CHECK(std::abs(v(1, 0) - expected(1, 0)) < 1e-14);
  CHECK(std::abs(v(1, 1) - expected(1, 1)) < 1e-14);
}

TEST_CASE("parameters on unused MZIs are ignored") {
  const MeshLayout layout = build_default_layout(8, 2);
  RandomEngine rng(5);
  const MeshParams base = sample_static_params(layout, rng);
  MeshParams with_unused = base;
  for (std::size_t idx = 0; idx < layout.mzis.size(); ++idx)
    if (layout.mzis[idx].role == MziRole::Unused)
      with_unused[static_cast<int>(idx)] = {1.234, 5.678};
  const Eigen::MatrixXcd a = compose_mesh(layout, base);
  const Eigen::MatrixXcd b = compose_mesh(layout, with_unused);
  CHECK((a - b).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("compose_mesh reports missing parameters") {
  const MeshLayout layout = build_default_layout(8, 2);
  RandomEngine rng(5);
  MeshParams params = sample_static_params(layout, rng);
  params.erase(layout.static_mzis.front());
  CHECK_THROWS_AS(compose_mesh(layout, params), std::invalid_argument);
}

TEST_CASE("layout table golden output for 8 modes") {
  const std::string table = build_default_layout(8, 2).table();
  const std::string expected =
      "# modes=8 layers=8 central=3..6 wedge_depth=3 r_fb=7\n"
      "# idx layer modes role\n"
      "0 1 1,2 unused\n"
      "1 1 3,4 input\n"
      "2 1 5,6 input\n"
      "3 1 7,8 unused\n"
      "4 2 2,3 wedge\n"
      "5 2 4,5 wedge\n"
      "6 2 6,7 wedge\n"
      "7 3 1,2 wedge\n"
      "8 3 3,4 wedge\n"
      "9 3 5,6 wedge\n"
      "10 3 7,8 wedge\n"
      "11 4 2,3 static\n"
      "12 4 4,5 static\n"
      "13 4 6,7 static\n"
      "14 5 1,2 static\n"
      "15 5 3,4 static\n"
      "16 5 5,6 static\n"
      "17 5 7,8 static\n"
      "18 6 2,3 static\n"
      "19 6 4,5 static\n"
      "20 6 6,7 static\n"
      "21 7 1,2 static\n"
      "22 7 3,4 static\n"
      "23 7 5,6 static\n"
      "24 7 7,8 static\n"
      "25 8 2,3 static\n"
      "26 8 4,5 static\n"
      "27 8 6,7 static\n";
  CHECK(table == expected);
}
