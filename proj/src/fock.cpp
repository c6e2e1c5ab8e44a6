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

#include "loqr/fock.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loqr {

namespace {

constexpr double kProbSlack = 1e-12;

double inv_occupation_factorial(const std::vector<int>& occ) {
  double f = 1.0;
  for (int q : occ)
    for (int k = 2; k <= q; ++k) f *= k;
  return 1.0 / f;
}

std::uint64_t basis_size_checked(int modes, int photons) {
  // C(modes + photons - 1, photons), multiplicative form with overflow checks.
  std::uint64_t result = 1;
  for (int k = 1; k <= photons; ++k) {
    const std::uint64_t num = static_cast<std::uint64_t>(modes - 1 + k);
    std::uint64_t tmp;
    if (__builtin_mul_overflow(result, num, &tmp))
      throw std::overflow_error("enumerate_basis: basis size overflows the index type");
    result = tmp / k;  // C(m-1+k, k) = C(m-2+k, k-1) * (m-1+k) / k, exact at each step
    if (result > (1ULL << 31))
      throw std::overflow_error("enumerate_basis: basis size exceeds capacity");
  }
  return result;
}

/// Glynn permanent on a row-major n x n matrix; `w` is scratch of size n.
std::complex<double> permanent_rowmajor(const std::complex<double>* a, int n,
                                        std::complex<double>* w) {
  if (n == 0) return {1.0, 0.0};
  if (n == 1) return a[0];
  for (int j = 0; j < n; ++j) w[j] = a[j];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) w[j] += a[i * n + j];

  auto product = [&]() {
    std::complex<double> p = w[0];
    for (int j = 1; j < n; ++j) p *= w[j];
    return p;
  };

  std::complex<double> total = product();
  std::vector<double> delta(n, 1.0);  // delta[0] stays +1
  double sign = 1.0;
  const std::uint64_t half = 1ULL << (n - 1);
  for (std::uint64_t k = 1; k < half; ++k) {
    const int row = std::countr_zero(k) + 1;
    delta[row] = -delta[row];
    const double step = 2.0 * delta[row];
    const std::complex<double>* arow = a + static_cast<std::size_t>(row) * n;
    for (int j = 0; j < n; ++j) w[j] += step * arow[j];
    sign = -sign;
    total += sign * product();
  }
  return total / static_cast<double>(half);
}

}  // namespace

int FockState::photon_number() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

FockBasis enumerate_basis(int modes, int photons) {
  if (modes < 1) throw std::invalid_argument("enumerate_basis: modes must be >= 1");
  if (photons < 0) throw std::invalid_argument("enumerate_basis: photons must be >= 0");
  const std::uint64_t expected = basis_size_checked(modes, photons);

  FockBasis basis;
  basis.modes = modes;
  basis.photons = photons;
  basis.states.reserve(expected);
  basis.row_indices.reserve(expected * photons);
  basis.inv_factorial.reserve(expected);
  basis.occupied_offsets.reserve(expected + 1);
  basis.occupied_offsets.push_back(0);

  std::vector<int> occ(modes, 0);
  occ[0] = photons;
  while (true) {
    basis.states.push_back(FockState{occ});
    for (int m = 0; m < modes; ++m)
      for (int r = 0; r < occ[m]; ++r) basis.row_indices.push_back(m);
    basis.inv_factorial.push_back(inv_occupation_factorial(occ));
    for (int m = 0; m < modes; ++m)
      if (occ[m] > 0) basis.occupied_modes.push_back(m);
    basis.occupied_offsets.push_back(static_cast<std::int32_t>(basis.occupied_modes.size()));

    // Successor in descending lexicographic order: decrement the rightmost
    // nonzero entry left of the last mode, push everything to its right
    // into the next position.
    int i = modes - 2;
    while (i >= 0 && occ[i] == 0) --i;
    if (i < 0) break;
    const int rest = std::accumulate(occ.begin() + i + 1, occ.end(), 0);
    occ[i] -= 1;
    occ[i + 1] = rest + 1;
    std::fill(occ.begin() + i + 2, occ.end(), 0);
  }
  if (basis.states.size() != expected)
    throw std::logic_error("enumerate_basis: enumeration does not match the counting formula");
  return basis;
}

std::size_t FockBasis::index_of(const FockState& state) const {
  if (state.modes() != modes || state.photon_number() != photons)
    throw std::invalid_argument("FockBasis::index_of: state does not belong to this basis");
  const auto greater_lex = [](const FockState& a, const FockState& b) {
    return std::lexicographical_compare(b.occupations.begin(), b.occupations.end(),
                                        a.occupations.begin(), a.occupations.end());
  };
  const auto it = std::lower_bound(states.begin(), states.end(), state, greater_lex);
  if (it == states.end() || !(*it == state))
    throw std::invalid_argument("FockBasis::index_of: state not found");
  return static_cast<std::size_t>(it - states.begin());
}

std::complex<double> permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent: matrix must be square");
  const int n = static_cast<int>(a.rows());
  std::vector<std::complex<double>> rowmajor(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rowmajor[static_cast<std::size_t>(i) * n + j] = a(i, j);
  std::vector<std::complex<double>> w(n);
  return permanent_rowmajor(rowmajor.data(), n, w.data());
}

Eigen::MatrixXcd scattering_submatrix(const Eigen::MatrixXcd& v, const FockState& input,
                                      const FockState& output) {
  const int n = input.photon_number();
  if (output.photon_number() != n)
    throw std::invalid_argument("scattering_submatrix: photon numbers differ");
  if (input.modes() != v.cols() || output.modes() != v.rows())
    throw std::invalid_argument("scattering_submatrix: state length does not match the matrix");
  Eigen::MatrixXcd cols(v.rows(), n);
  int c = 0;
  for (int m = 0; m < input.modes(); ++m)
    for (int r = 0; r < input.occupations[m]; ++r) cols.col(c++) = v.col(m);
  Eigen::MatrixXcd sub(n, n);
  int r = 0;
  for (int m = 0; m < output.modes(); ++m)
    for (int k = 0; k < output.occupations[m]; ++k) sub.row(r++) = cols.row(m);
  return sub;
}

double transition_probability(const Eigen::MatrixXcd& v, const FockState& input,
                              const FockState& output) {
  const std::complex<double> per = permanent(scattering_submatrix(v, input, output));
  double p = std::norm(per) * inv_occupation_factorial(input.occupations) *
             inv_occupation_factorial(output.occupations);
  if (p > 1.0 + kProbSlack)
    throw std::runtime_error("transition_probability: probability exceeds 1");
  return std::clamp(p, 0.0, 1.0);
}

PnrDistribution output_distribution(const Eigen::MatrixXcd& v, const FockState& input,
                                    const FockBasis& basis) {
  if (input.modes() != basis.modes || input.photon_number() != basis.photons)
    throw std::invalid_argument("output_distribution: basis does not match the input state");
  if (v.rows() != basis.modes || v.cols() != basis.modes)
    throw std::invalid_argument("output_distribution: matrix does not match the basis");

  const int m = basis.modes;
  const int n = basis.photons;
  const double inv_fact_in = inv_occupation_factorial(input.occupations);

  // Row-major M x N matrix of the input-selected columns of v.
  std::vector<std::complex<double>> cols(static_cast<std::size_t>(m) * n);
  {
    int c = 0;
    for (int mode = 0; mode < m; ++mode)
      for (int r = 0; r < input.occupations[mode]; ++r) {
        for (int row = 0; row < m; ++row)
          cols[static_cast<std::size_t>(row) * n + c] = v(row, mode);
        ++c;
      }
  }

  PnrDistribution dist;
  dist.basis = &basis;
  dist.probs.resize(basis.size());
  std::vector<std::complex<double>> sub(static_cast<std::size_t>(n) * n);
  std::vector<std::complex<double>> scratch(n);
  for (std::size_t l = 0; l < basis.size(); ++l) {
    const int* rows = basis.row_indices.data() + l * n;
    for (int r = 0; r < n; ++r)
      std::copy_n(cols.data() + static_cast<std::size_t>(rows[r]) * n, n, sub.data() + r * n);
    const std::complex<double> per = permanent_rowmajor(sub.data(), n, scratch.data());
    double p = std::norm(per) * inv_fact_in * basis.inv_factorial[l];
    if (p > 1.0 + kProbSlack)
      throw std::runtime_error("output_distribution: probability exceeds 1");
    dist.probs[l] = std::clamp(p, 0.0, 1.0);
  }
  return dist;
}

std::string distribution_csv(const PnrDistribution& dist) {
  std::ostringstream out;
  out << "index,occupation,probability\n";
  char buf[40];
  for (std::size_t l = 0; l < dist.probs.size(); ++l) {
    out << l << ",";
    const auto& occ = dist.basis->states[l].occupations;
    for (std::size_t m = 0; m < occ.size(); ++m) out << (m ? "|" : "") << occ[m];
    std::snprintf(buf, sizeof buf, "%.17g", dist.probs[l]);
    out << "," << buf << "\n";
  }
  return out.str();
}

}  // namespace loqr
