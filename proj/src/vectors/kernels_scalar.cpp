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

#include "mab/vectors/kernels.hpp"

namespace mab::simd {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scale_scalar(double* x, std::size_t n, double c) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= c;
}

void rotate_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

void dot_rows_scalar(const double* rows, std::size_t n_rows, std::size_t dim, const double* q, double* out) {
  for (std::size_t r = 0; r < n_rows; ++r) out[r] = dot_scalar(rows + r * dim, q, dim);
}

}  // namespace

namespace detail {
const KernelTable kScalarTable = {Isa::kScalar, dot_scalar, scale_scalar, rotate_scalar, dot_rows_scalar};
}  // namespace detail

}  // namespace mab::simd
