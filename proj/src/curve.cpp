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

#include "hasse_forms/curve.hpp"

#include <stdexcept>
#include <string>

#include "hasse_forms/error.hpp"

namespace hasse_forms {
namespace {

void check_model(const FieldCtx& k, FieldElement a2) {
  if (k.p() >= 5 && !a2.is_zero()) {
    throw Error(ErrorKind::kUnsupportedModel, "a2 must be 0 in characteristic " + std::to_string(k.p()));
  }
}

std::string model_string(const FieldCtx& k, FieldElement a2, FieldElement a4, FieldElement a6) {
  std::string out = "y^2 = x^3";
  if (!a2.is_zero()) out += " + " + to_string(k, a2) + "*x^2";
  if (!a4.is_zero()) out += " + " + to_string(k, a4) + "*x";
  if (!a6.is_zero()) out += " + " + to_string(k, a6);
  return out + " over F_" + std::to_string(k.q());
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(Field field, FieldElement a2, FieldElement a4, FieldElement a6)
    : field_(std::move(field)), a2_(a2), a4_(a4), a6_(a6) {
  check_model(*field_, a2_);
  if (discriminant(*field_, a2_, a4_, a6_).is_zero()) {
    throw Error(ErrorKind::kSingularModel, model_string(*field_, a2_, a4_, a6_) + " has zero discriminant");
  }
}

std::optional<WeierstrassCurve> WeierstrassCurve::make(Field field, FieldElement a2, FieldElement a4,
                                                       FieldElement a6) {
  check_model(*field, a2);
  if (discriminant(*field, a2, a4, a6).is_zero()) return std::nullopt;
  return WeierstrassCurve(Unchecked{}, std::move(field), a2, a4, a6);
}

WeierstrassCurve WeierstrassCurve::short_form(Field field, std::int64_t a4, std::int64_t a6) {
  const FieldElement zero = field->zero();
  const FieldElement b = field->from_int(a4);
  const FieldElement c = field->from_int(a6);
  return WeierstrassCurve(std::move(field), zero, b, c);
}

Polynomial WeierstrassCurve::rhs() const { return Polynomial(field_, {a6_, a4_, a2_, field_->one()}); }

FieldElement discriminant(const FieldCtx& k, FieldElement a2, FieldElement a4, FieldElement a6) {
  auto c = [&](std::int64_t v) { return k.from_int(v); };
  const FieldElement b2 = k.mul(c(4), a2);
  const FieldElement b4 = k.mul(c(2), a4);
  const FieldElement b6 = k.mul(c(4), a6);
  const FieldElement b8 = k.sub(k.mul(c(4), k.mul(a2, a6)), k.mul(a4, a4));
  FieldElement delta = k.neg(k.mul(k.mul(b2, b2), b8));
  delta = k.sub(delta, k.mul(c(8), k.mul(b4, k.mul(b4, b4))));
  delta = k.sub(delta, k.mul(c(27), k.mul(b6, b6)));
  delta = k.add(delta, k.mul(c(9), k.mul(b2, k.mul(b4, b6))));
  return delta;
}

FieldElement discriminant(const WeierstrassCurve& e) { return discriminant(*e.field(), e.a2(), e.a4(), e.a6()); }

FieldElement j_invariant(const WeierstrassCurve& e) {
  const FieldCtx& k = *e.field();
  const FieldElement b2 = k.mul(k.from_int(4), e.a2());
  const FieldElement b4 = k.mul(k.from_int(2), e.a4());
  const FieldElement c4 = k.sub(k.mul(b2, b2), k.mul(k.from_int(24), b4));
  return k.div(k.mul(c4, k.mul(c4, c4)), discriminant(e));
}

PointCounter::PointCounter(Field field, std::optional<kernels::Isa> isa) : field_(std::move(field)) {
  const FieldCtx& k = *field_;
  if (k.q() > kMaxOrder) {
    throw Error(ErrorKind::kFieldTooLarge,
                "exhaustive counting is limited to q <= 2^20, got q = " + std::to_string(k.q()));
  }
  const std::uint32_t n = k.n();
  const std::uint32_t q = k.q();
  layout_.p = k.p();
  layout_.n = n;
  layout_.q = q;
  layout_.planes.resize(3 * static_cast<std::size_t>(n) * q);
  layout_.chi.resize(q);
  layout_.weights.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t w = 1;
    for (std::uint32_t j = i + 1; j < n; ++j) w *= k.p();
    layout_.weights[i] = static_cast<std::int32_t>(w);
  }
  for (std::uint32_t code = 0; code < q; ++code) {
    const FieldElement x{code, q};
    layout_.chi[code] = k.quadratic_character(x);
    FieldElement power = x;
    for (unsigned e = 1; e <= 3; ++e) {
      const std::vector<std::uint32_t> digits = k.coeffs(power);
      for (std::uint32_t i = 0; i < n; ++i) {
        layout_.planes[(static_cast<std::size_t>(e - 1) * n + i) * q + code] = static_cast<std::int32_t>(digits[i]);
      }
      power = k.mul(power, x);
    }
  }
  if (isa) {
    if (*isa == kernels::Isa::kAvx2 && !(kernels::avx2_available() && kernels::avx2_eligible(layout_))) {
      throw std::invalid_argument("AVX2 kernel unavailable for F_" + std::to_string(q));
    }
    isa_ = *isa;
  } else {
    isa_ = kernels::select_isa(layout_);
  }
  kernel_ = kernels::kernel_for(isa_);
}

std::vector<std::int32_t> PointCounter::multiplication_matrix(FieldElement a) const {
  const FieldCtx& k = *field_;
  const std::uint32_t n = k.n();
  std::vector<std::int32_t> m(static_cast<std::size_t>(n) * n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<std::uint32_t> basis(n, 0);
    basis[j] = 1;
    const std::vector<std::uint32_t> column = k.coeffs(k.mul(a, k.from_coeffs(basis)));
    for (std::uint32_t i = 0; i < n; ++i) m[i * n + j] = static_cast<std::int32_t>(column[i]);
  }
  return m;
}

std::int64_t PointCounter::character_sum(FieldElement a2, FieldElement a4, FieldElement a6) const {
  kernels::CubicCoefficients coeffs;
  coeffs.has_a2 = !a2.is_zero();
  coeffs.a4_matrix = multiplication_matrix(a4);
  if (coeffs.has_a2) coeffs.a2_matrix = multiplication_matrix(a2);
  for (std::uint32_t d : field_->coeffs(a6)) coeffs.a6_digits.push_back(static_cast<std::int32_t>(d));
  return kernel_(layout_, coeffs);
}

FrobeniusData PointCounter::count(const WeierstrassCurve& e) const {
  if (e.field()->q() != field_->q()) {
    throw Error(ErrorKind::kCtxMismatch, "curve over F_" + std::to_string(e.field()->q()) +
                                             " counted with a counter for F_" + std::to_string(field_->q()));
  }
  const std::int64_t q = field_->q();
  const std::int64_t s = character_sum(e.a2(), e.a4(), e.a6());
  FrobeniusData out;
  out.count = static_cast<std::uint64_t>(q + 1 + s);
  out.beta = -s;
  out.ordinary = out.beta % static_cast<std::int64_t>(field_->p()) != 0;
  if (out.beta * out.beta > 4 * q) {
    throw std::logic_error("Hasse bound violated: beta = " + std::to_string(out.beta) + " over F_" +
                           std::to_string(q));
  }
  return out;
}

FrobeniusData point_count(const WeierstrassCurve& e) { return PointCounter(e.field()).count(e); }

FieldElement hasse_invariant(const WeierstrassCurve& e, HasseLevel level) {
  const FieldCtx& k = *e.field();
  std::uint64_t order = k.p();
  if (level == HasseLevel::kField) {
    if (k.q() > kMaxFieldLevelHasseOrder) {
      throw Error(ErrorKind::kFieldTooLarge,
                  "A_q is only computed for q <= " + std::to_string(kMaxFieldLevelHasseOrder));
    }
    order = k.q();
  }
  return pow_truncated(e.rhs(), (order - 1) / 2, order - 1).coeff(order - 1);
}

bool is_ordinary(const WeierstrassCurve& e) { return !hasse_invariant(e).is_zero(); }

std::string_view twist_kind_name(TwistKind kind) {
  switch (kind) {
    case TwistKind::kQuadratic: return "quadratic";
    case TwistKind::kQuartic: return "quartic";
    case TwistKind::kSextic: return "sextic";
  }
  return "unknown";
}

unsigned twist_degree(TwistKind kind) {
  switch (kind) {
    case TwistKind::kQuadratic: return 2;
    case TwistKind::kQuartic: return 4;
    case TwistKind::kSextic: return 6;
  }
  return 0;
}

WeierstrassCurve twist(const WeierstrassCurve& e, FieldElement d, TwistKind kind) {
  const FieldCtx& k = *e.field();
  if (d.is_zero()) throw Error(ErrorKind::kZeroTwistParameter, "twist parameter must be nonzero");
  switch (kind) {
    case TwistKind::kQuadratic: {
      const FieldElement d2 = k.mul(d, d);
      return WeierstrassCurve(e.field(), k.mul(d, e.a2()), k.mul(d2, e.a4()), k.mul(k.mul(d2, d), e.a6()));
    }
    case TwistKind::kQuartic:
      if (j_invariant(e) != k.from_int(1728) || !e.a6().is_zero() || !e.a2().is_zero()) {
        throw Error(ErrorKind::kWrongJInvariant, "quartic twists need y^2 = x^3 + a4*x (j = 1728)");
      }
      if (k.p() % 4 != 1) throw Error(ErrorKind::kBadCongruence, "quartic twists need p = 1 mod 4");
      return WeierstrassCurve(e.field(), e.a2(), k.mul(d, e.a4()), e.a6());
    case TwistKind::kSextic:
      if (j_invariant(e) != k.zero() || !e.a4().is_zero() || !e.a2().is_zero()) {
        throw Error(ErrorKind::kWrongJInvariant, "sextic twists need y^2 = x^3 + a6 (j = 0)");
      }
      if (k.p() % 3 != 1) throw Error(ErrorKind::kBadCongruence, "sextic twists need p = 1 mod 3");
      return WeierstrassCurve(e.field(), e.a2(), e.a4(), k.mul(d, e.a6()));
  }
  throw std::invalid_argument("unknown twist kind");
}

}  // namespace hasse_forms
