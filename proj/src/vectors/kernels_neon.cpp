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

#include <arm_neon.h>

#include "mab/vectors/kernels.hpp"

namespace mab::simd {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scale_neon(double* x, std::size_t n, double c) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_n_f64(vld1q_f64(x + i), c));
  for (; i < n; ++i) x[i] *= c;
}

void rotate_neon(double* x, double* y, std::size_t n, double c, double s) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xi = vld1q_f64(x + i);
    const float64x2_t yi = vld1q_f64(y + i);
    vst1q_f64(x + i, vfmsq_n_f64(vmulq_n_f64(xi, c), yi, s));
    vst1q_f64(y + i, vfmaq_n_f64(vmulq_n_f64(yi, c), xi, s));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

void dot_rows_neon(const double* rows, std::size_t n_rows, std::size_t dim, const double* q, double* out) {
  for (std::size_t r = 0; r < n_rows; ++r) out[r] = dot_neon(rows + r * dim, q, dim);
}

}  // namespace

namespace detail {
const KernelTable kNeonTable = {Isa::kNeon, dot_neon, scale_neon, rotate_neon, dot_rows_neon};
}  // namespace detail

}  // namespace mab::simd
