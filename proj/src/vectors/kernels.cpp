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

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mab::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#if defined(MAB_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(MAB_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("kernel set '" + std::string(isa_name(isa)) + "' unavailable");
  switch (isa) {
#if defined(MAB_HAVE_AVX2_KERNELS)
    case Isa::kAvx2: return detail::kAvx2Table;
#endif
#if defined(MAB_HAVE_NEON_KERNELS)
    case Isa::kNeon: return detail::kNeonTable;
#endif
    default: return detail::kScalarTable;
  }
}

namespace {

const KernelTable& select() {
  if (const char* pinned = std::getenv("MAB_SIMD")) {
    const std::string_view want = pinned;
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (want == isa_name(isa) && isa_supported(isa)) return kernels(isa);
    }
  }
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (isa_supported(isa)) return kernels(isa);
  }
  return detail::kScalarTable;
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace mab::simd
