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

#ifndef HASSE_FORMS_CURVE_HPP_
#define HASSE_FORMS_CURVE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "hasse_forms/gf.hpp"
#include "hasse_forms/kernels.hpp"
#include "hasse_forms/poly.hpp"

namespace hasse_forms {

/// y^2 = x^3 + a2 x^2 + a4 x + a6 over F_q, nonsingular. a2 must vanish for
/// p >= 5; for p = 3 the a2 term carries the Hasse invariant.
class WeierstrassCurve {
 public:
  /// Throws kSingularModel when the discriminant vanishes and
  /// kUnsupportedModel for a2 != 0 with p >= 5.
  WeierstrassCurve(Field field, FieldElement a2, FieldElement a4, FieldElement a6);

  /// Same checks, but a singular model yields nullopt instead of throwing.
  static std::optional<WeierstrassCurve> make(Field field, FieldElement a2, FieldElement a4, FieldElement a6);
  /// Short model y^2 = x^3 + a4 x + a6 from prime-field integers.
  static WeierstrassCurve short_form(Field field, std::int64_t a4, std::int64_t a6);

  const Field& field() const { return field_; }
  FieldElement a2() const { return a2_; }
  FieldElement a4() const { return a4_; }
  FieldElement a6() const { return a6_; }
  /// f(x) = x^3 + a2 x^2 + a4 x + a6.
  Polynomial rhs() const;

  friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
    return a.field_->q() == b.field_->q() && a.a2_ == b.a2_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
  }

 private:
  struct Unchecked {};
  WeierstrassCurve(Unchecked, Field field, FieldElement a2, FieldElement a4, FieldElement a6)
      : field_(std::move(field)), a2_(a2), a4_(a4), a6_(a6) {}

  Field field_;
  FieldElement a2_;
  FieldElement a4_;
  FieldElement a6_;
};

/// Discriminant of the model with a1 = a3 = 0, from the b-invariants.
FieldElement discriminant(const FieldCtx& field, FieldElement a2, FieldElement a4, FieldElement a6);
FieldElement discriminant(const WeierstrassCurve& e);
FieldElement j_invariant(const WeierstrassCurve& e);

struct FrobeniusData {
  std::uint64_t count = 0;  // #E(F_q)
  std::int64_t beta = 0;    // trace, count = q + 1 - beta
  bool ordinary = false;    // beta != 0 mod p
  friend bool operator==(const FrobeniusData&, const FrobeniusData&) = default;
};

/// Exhaustive point counter for all curves over one field. Building it costs
/// O(q); each count is one character-sum kernel call.
class PointCounter {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// Throws kFieldTooLarge beyond kMaxOrder. With `isa` set the given kernel
  /// is used (kAvx2 must be available and eligible), otherwise the best one.
  explicit PointCounter(Field field, std::optional<kernels::Isa> isa = std::nullopt);

  /// Asserts the Hasse bound; a violation throws std::logic_error.
  FrobeniusData count(const WeierstrassCurve& e) const;
  /// sum over x of chi(x^3 + a2 x^2 + a4 x + a6).
  std::int64_t character_sum(FieldElement a2, FieldElement a4, FieldElement a6) const;

  kernels::Isa isa() const { return isa_; }
  const Field& field() const { return field_; }

 private:
  std::vector<std::int32_t> multiplication_matrix(FieldElement a) const;

  Field field_;
  kernels::CubicSweepLayout layout_;
  kernels::Isa isa_;
  kernels::CharacterSumFn kernel_;
};

FrobeniusData point_count(const WeierstrassCurve& e);

enum class HasseLevel {
  kPrime,  // A_p: coefficient of x^{p-1} in f^{(p-1)/2}
  kField,  // A_q: coefficient of x^{q-1} in f^{(q-1)/2}
};

/// Field-level invariants are refused above this order (kFieldTooLarge).
inline constexpr std::uint32_t kMaxFieldLevelHasseOrder = 4096;

FieldElement hasse_invariant(const WeierstrassCurve& e, HasseLevel level = HasseLevel::kPrime);
bool is_ordinary(const WeierstrassCurve& e);

enum class TwistKind { kQuadratic, kQuartic, kSextic };

std::string_view twist_kind_name(TwistKind kind);
/// Order of the automorphism used by the twist: 2, 4 or 6.
unsigned twist_degree(TwistKind kind);

/// Quadratic: (a2, a4, a6) -> (D a2, D^2 a4, D^3 a6). Quartic (j = 1728,
/// p = 1 mod 4): a4 -> D a4. Sextic (j = 0, p = 1 mod 3): a6 -> D a6.
/// Throws kZeroTwistParameter, kWrongJInvariant, kBadCongruence (checked in
/// that order).
WeierstrassCurve twist(const WeierstrassCurve& e, FieldElement d, TwistKind kind);

}  // namespace hasse_forms

#endif  // HASSE_FORMS_CURVE_HPP_
