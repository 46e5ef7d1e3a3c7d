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

#include "hasse_forms/kernels.hpp"

namespace hasse_forms::kernels {

std::int64_t character_sum_scalar(const CubicSweepLayout& layout, const CubicCoefficients& coeffs) {
  const std::uint32_t n = layout.n;
  const std::int64_t p = layout.p;
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < layout.q; ++x) {
    std::int64_t code = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::int64_t v = static_cast<std::int64_t>(layout.plane(3, i)[x]) + coeffs.a6_digits[i];
      for (std::uint32_t j = 0; j < n; ++j) {
        v += static_cast<std::int64_t>(coeffs.a4_matrix[i * n + j]) * layout.plane(1, j)[x];
        if (coeffs.has_a2) v += static_cast<std::int64_t>(coeffs.a2_matrix[i * n + j]) * layout.plane(2, j)[x];
      }
      code += (v % p) * layout.weights[i];
    }
    sum += layout.chi[code];
  }
  return sum;
}

}  // namespace hasse_forms::kernels
