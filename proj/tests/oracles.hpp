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
//
// Independent reference implementations used only for testing. Each oracle
// deliberately takes a different algorithmic route than the library code it
// checks.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "loqr/detection.hpp"
#include "loqr/fock.hpp"

namespace oracles {

/// Permanent by explicit enumeration of all n! permutations.
inline std::complex<double> naive_permanent(const Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {1.0, 0.0};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> total = 0.0;
  do {
    std::complex<double> prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= a(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Coincidence features by brute force over the full threshold-pattern
/// distribution: C_ij = sum_r r_i r_j p(r).
inline loqr::CoincidenceVector pattern_sum_coincidences(const loqr::PnrDistribution& dist,
                                                        const loqr::LossModel& loss) {
  const int m = dist.basis->modes;
  loqr::CoincidenceVector c;
  c.modes = m;
  c.values = Eigen::VectorXd::Zero(
      static_cast<Eigen::Index>(loqr::CoincidenceVector::dimension(m)));
  for (const auto& [pattern, p] : loqr::threshold_distribution(dist, loss)) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        if (pattern.clicks[i - 1] && pattern.clicks[j - 1])
          c.values[static_cast<Eigen::Index>(
              loqr::CoincidenceVector::pair_index(i, j, m))] += p;
  }
  return c;
}

/// Ridge normal equations solved by Gauss-Jordan elimination with partial
/// pivoting in long double, independent of any Eigen factorization.
inline Eigen::VectorXd ridge_normal_equations(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                              double beta) {
  const int d = static_cast<int>(x.cols());
  const int t = static_cast<int>(x.rows());
  const long double ybar =
      std::accumulate(y.data(), y.data() + t, 0.0L) / static_cast<long double>(t);
  std::vector<std::vector<long double>> g(d, std::vector<long double>(d + 1, 0.0L));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      long double s = 0.0L;
      for (int k = 0; k < t; ++k)
        s += static_cast<long double>(x(k, i)) * static_cast<long double>(x(k, j));
      g[i][j] = s + (i == j ? static_cast<long double>(beta) : 0.0L);
    }
    long double rhs = 0.0L;
    for (int k = 0; k < t; ++k)
      rhs += static_cast<long double>(x(k, i)) * (static_cast<long double>(y[k]) - ybar);
    g[i][d] = rhs;
  }
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(g[r][col]) > std::abs(g[pivot][col])) pivot = r;
    std::swap(g[col], g[pivot]);
    const long double diag = g[col][col];
    for (int j = col; j <= d; ++j) g[col][j] /= diag;
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const long double factor = g[r][col];
      if (factor == 0.0L) continue;
      for (int j = col; j <= d; ++j) g[r][j] -= factor * g[col][j];
    }
  }
  Eigen::VectorXd w(d);
  for (int i = 0; i < d; ++i) w[i] = static_cast<double>(g[i][d]);
  return w;
}

/// exp(A) by scaling and squaring with a plain Taylor series.
inline Eigen::MatrixXcd taylor_expm(const Eigen::MatrixXcd& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Eigen::MatrixXcd b = a * scale;
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Spearman rank correlation (average ranks for ties).
inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto ranks = [](const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
    std::vector<double> rank(n);
    int i = 0;
    while (i < n) {
      int j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = 0.5 * (i + j) + 1.0;
      for (int k = i; k <= j; ++k) rank[order[k]] = avg;
      i = j + 1;
    }
    return rank;
  };
  const std::vector<double> rx = ranks(xs), ry = ranks(ys);
  const int n = static_cast<int>(xs.size());
  double mx = 0, my = 0;
  for (int i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

/// Least-squares slope of y against x.
inline double regression_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  double mx = 0, my = 0;
  for (int i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace oracles
