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
#include <string_view>

// Dense double-precision kernels behind a runtime-selected dispatch table. The scalar
// table is the reference; SIMD tables must agree with it to rounding.
namespace mab::simd {

enum class Isa { kScalar, kAvx2, kNeon };

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // x[i] *= c
  void (*scale)(double* x, std::size_t n, double c);
  // (x, y) <- (c*x - s*y, s*x + c*y)
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  // out[r] = dot(rows + r*dim, q) for r in [0, n_rows)
  void (*dot_rows)(const double* rows, std::size_t n_rows, std::size_t dim, const double* q, double* out);
};

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

// Throws std::invalid_argument if `isa` is not compiled in or not supported by this CPU.
const KernelTable& kernels(Isa isa);

// Best supported table, unless MAB_SIMD=scalar|avx2|neon pins one.
const KernelTable& active();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

namespace detail {
extern const KernelTable kScalarTable;
#if defined(MAB_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Table;
#endif
#if defined(MAB_HAVE_NEON_KERNELS)
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace mab::simd
