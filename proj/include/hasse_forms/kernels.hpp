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

#ifndef HASSE_FORMS_KERNELS_HPP_
#define HASSE_FORMS_KERNELS_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

// Character-sum kernels behind exhaustive point counting.
//
// For a cubic f(x) = x^3 + a2 x^2 + a4 x + a6 over F_q the kernels compute
// sum_{x in F_q} chi(f(x)). Multiplication by a fixed field element is F_p-linear
// on coefficient digits, so with the digits of x, x^2 and x^3 laid out as planes
// the digits of f(x) are a small matrix-vector product mod p per x. That loop is
// data-parallel over x and is what the SIMD variants vectorize.

namespace hasse_forms::kernels {

/// Per-field tables shared by every curve of a sweep.
struct CubicSweepLayout {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  /// planes[((power - 1) * n + i) * q + x]: digit i of x^power, power in {1, 2, 3}.
  std::vector<std::int32_t> planes;
  /// chi[code] in {-1, 0, 1}, indexed by element code.
  std::vector<std::int32_t> chi;
  /// weights[i] = p^{n-1-i}; code = sum digit_i * weights[i].
  std::vector<std::int32_t> weights;

  const std::int32_t* plane(unsigned power, unsigned digit) const {
    return planes.data() + (static_cast<std::size_t>(power - 1) * n + digit) * q;
  }
};

/// Coefficients of one cubic in digit coordinates.
struct CubicCoefficients {
  std::vector<std::int32_t> a2_matrix;  // n*n row-major, multiplication by a2
  std::vector<std::int32_t> a4_matrix;  // n*n row-major, multiplication by a4
  std::vector<std::int32_t> a6_digits;  // n
  bool has_a2 = false;
};

using CharacterSumFn = std::int64_t (*)(const CubicSweepLayout&, const CubicCoefficients&);

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

std::int64_t character_sum_scalar(const CubicSweepLayout& layout, const CubicCoefficients& coeffs);
#if defined(HASSE_FORMS_HAVE_AVX2)
std::int64_t character_sum_avx2(const CubicSweepLayout& layout, const CubicCoefficients& coeffs);
#endif

/// True when the AVX2 variant is compiled in and the running CPU supports it.
bool avx2_available();
/// The AVX2 variant keeps digit sums in 32-bit lanes and reduces mod p through
/// single-precision quotients; it is only exact when those stay in range.
bool avx2_eligible(const CubicSweepLayout& layout);

/// Best variant for this layout. HASSE_FORMS_KERNEL=scalar forces the
/// reference kernel.
Isa select_isa(const CubicSweepLayout& layout);
CharacterSumFn kernel_for(Isa isa);

}  // namespace hasse_forms::kernels

#endif  // HASSE_FORMS_KERNELS_HPP_
