// Copyright 2026 The mab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#include "mab/textmine/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mab/common/error.hpp"
#include "mab/vectors/kernels.hpp"

namespace mab::textmine {

namespace {

constexpr int kMaxSweeps = 80;
constexpr double kOrthTol = 1e-15;

// Orthogonalizes the n columns (length m, column-major) of `w` in place and accumulates
// the rotations into the n x n column-major `q`, so that W_in * Q = W_out.
void hestenes(std::vector<double>& w, std::size_t m, std::size_t n, std::vector<double>& q) {
  const auto& k = simd::active();
  q.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double* wi = w.data() + i * m;
      for (std::size_t j = i + 1; j < n; ++j) {
        double* wj = w.data() + j * m;
        const double alpha = k.dot(wi, wi, m);
        const double beta = k.dot(wj, wj, m);
        const double gamma = k.dot(wi, wj, m);
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= kOrthTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // [wi wj] <- [wi wj] * [[c, s], [-s, c]]
        k.rotate(wi, wj, m, c, s);
        k.rotate(q.data() + i * n, q.data() + j * n, n, c, s);
      }
    }
    if (!rotated) return;
  }
}

}  // namespace

TruncatedSvd truncated_svd(std::span<const double> a, std::size_t rows, std::size_t cols, std::size_t k) {
  if (rows == 0 || cols == 0 || a.size() != rows * cols) throw DataError("SVD input has inconsistent shape");
  if (k == 0) throw ConfigError("SVD rank must be at least 1");

  // Columns of W are either the rows of A (W = A^T, when rows <= cols) or the columns of A.
  const bool transpose = rows <= cols;
  const std::size_t m = transpose ? cols : rows;
  const std::size_t n = transpose ? rows : cols;
  std::vector<double> w(m * n);
  if (transpose) {
    std::copy(a.begin(), a.end(), w.begin());
  } else {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) w[c * rows + r] = a[r * cols + c];
  }
  std::vector<double> q;
  hestenes(w, m, n, q);

  const auto& kern = simd::active();
  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(kern.dot(w.data() + j * m, w.data() + j * m, m));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  TruncatedSvd out;
  out.rows = rows;
  out.cols = cols;
  const double smax = norms[order[0]];
  const double tol = static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() * smax;
  for (std::size_t j : order) {
    if (smax > 0.0 && norms[j] > tol) ++out.rank;
  }
  const std::size_t keep = std::min(k, out.rank);
  out.u.reserve(keep * rows);
  out.v.reserve(keep * cols);
  for (std::size_t idx = 0; idx < keep; ++idx) {
    const std::size_t j = order[idx];
    const double s = norms[j];
    out.sigma.push_back(s);
    const double* wj = w.data() + j * m;
    const double* qj = q.data() + j * n;
    // W column / sigma is the left vector of W; Q column is its right vector.
    auto& from_w = transpose ? out.v : out.u;
    auto& from_q = transpose ? out.u : out.v;
    for (std::size_t i = 0; i < m; ++i) from_w.push_back(wj[i] / s);
    from_q.insert(from_q.end(), qj, qj + n);
  }
  return out;
}

std::vector<double> reconstruct(const TruncatedSvd& svd) {
  std::vector<double> out(svd.rows * svd.cols, 0.0);
  for (std::size_t j = 0; j < svd.size(); ++j) {
    const auto uj = svd.left(j);
    const auto vj = svd.right(j);
    for (std::size_t r = 0; r < svd.rows; ++r) {
      const double ur = uj[r] * svd.sigma[j];
      for (std::size_t c = 0; c < svd.cols; ++c) out[r * svd.cols + c] += ur * vj[c];
    }
  }
  return out;
}

}  // namespace mab::textmine
