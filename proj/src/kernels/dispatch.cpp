/* Copyright 2026 The hasse-forms Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cstdlib>
#include <string_view>

#include "hasse_forms/kernels.hpp"

namespace hasse_forms::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(HASSE_FORMS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

bool avx2_eligible(const CubicSweepLayout& layout) {
  const std::uint64_t p = layout.p;
  const std::uint64_t terms = 2 * static_cast<std::uint64_t>(layout.n) + 2;
  // Largest digit sum is below terms * p^2; the float quotient v / p must stay
  // well inside 2^22 to be within one of the truth.
  return terms * p * p < (1ull << 31) && terms * p < (1ull << 22) && layout.q < (1u << 31);
}

Isa select_isa(const CubicSweepLayout& layout) {
  if (const char* forced = std::getenv("HASSE_FORMS_KERNEL"); forced != nullptr && std::string_view(forced) == "scalar") {
    return Isa::kScalar;
  }
  return avx2_available() && avx2_eligible(layout) ? Isa::kAvx2 : Isa::kScalar;
}

CharacterSumFn kernel_for(Isa isa) {
#if defined(HASSE_FORMS_HAVE_AVX2)
  if (isa == Isa::kAvx2) return &character_sum_avx2;
#endif
  (void)isa;
  return &character_sum_scalar;
}

}  // namespace hasse_forms::kernels
