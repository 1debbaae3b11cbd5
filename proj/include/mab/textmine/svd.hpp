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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mab::textmine {

// Leading singular triplets of a dense rows x cols matrix A: A ~= U diag(sigma) V^T.
struct TruncatedSvd {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> sigma;  // descending
  // Column-major: u[j*rows + i] is U(i, j); v[j*cols + i] is V(i, j).
  std::vector<double> u;
  std::vector<double> v;
  // Numerical rank of A (singular values above max(rows, cols) * eps * sigma_max).
  std::size_t rank = 0;

  std::size_t size() const { return sigma.size(); }
  std::span<const double> left(std::size_t j) const { return {u.data() + j * rows, rows}; }
  std::span<const double> right(std::size_t j) const { return {v.data() + j * cols, cols}; }
};

// One-sided Jacobi (Hestenes) SVD on the narrower orientation of A, keeping the top
// min(k, rank) triplets. `a` is row-major. Sign convention is left to the caller.
TruncatedSvd truncated_svd(std::span<const double> a, std::size_t rows, std::size_t cols, std::size_t k);

// Row-major rank-k reconstruction U_k diag(sigma_k) V_k^T.
std::vector<double> reconstruct(const TruncatedSvd& svd);

}  // namespace mab::textmine
