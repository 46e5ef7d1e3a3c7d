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

#include <immintrin.h>

#include "hasse_forms/kernels.hpp"

namespace hasse_forms::kernels {
namespace {

// v mod p for 0 <= v < 2^31 with v / p small enough that the float quotient is
// off by at most one; avx2_eligible() guarantees both.
inline __m256i mod_p(__m256i v, __m256i vp, __m256 inv_p) {
  const __m256i quot = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(v), inv_p));
  __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(quot, vp));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), vp));
  r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(vp, r), vp));
  return r;
}

}  // namespace

std::int64_t character_sum_avx2(const CubicSweepLayout& layout, const CubicCoefficients& coeffs) {
  const std::uint32_t n = layout.n;
  const std::uint32_t q = layout.q;
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(layout.p));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(layout.p));
  __m256i acc = _mm256_setzero_si256();

  std::uint32_t x = 0;
  for (; x + 8 <= q; x += 8) {
    __m256i code = _mm256_setzero_si256();
    for (std::uint32_t i = 0; i < n; ++i) {
      __m256i v = _mm256_add_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(layout.plane(3, i) + x)),
                                   _mm256_set1_epi32(coeffs.a6_digits[i]));
      for (std::uint32_t j = 0; j < n; ++j) {
        const __m256i xj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(layout.plane(1, j) + x));
        v = _mm256_add_epi32(v, _mm256_mullo_epi32(xj, _mm256_set1_epi32(coeffs.a4_matrix[i * n + j])));
        if (coeffs.has_a2) {
          const __m256i x2j = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(layout.plane(2, j) + x));
          v = _mm256_add_epi32(v, _mm256_mullo_epi32(x2j, _mm256_set1_epi32(coeffs.a2_matrix[i * n + j])));
        }
      }
      code = _mm256_add_epi32(code, _mm256_mullo_epi32(mod_p(v, vp, inv_p), _mm256_set1_epi32(layout.weights[i])));
    }
    acc = _mm256_add_epi32(acc, _mm256_i32gather_epi32(layout.chi.data(), code, 4));
  }

  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t sum = 0;
  for (std::int32_t lane : lanes) sum += lane;

  const std::int64_t p = layout.p;
  for (; x < q; ++x) {
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
