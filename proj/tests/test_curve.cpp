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

#include <doctest.h>

#include <vector>

#include "hasse_forms/curve.hpp"
#include "hasse_forms/error.hpp"
#include "oracles.hpp"

using namespace hasse_forms;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kNotPrime;
}

// Every nonsingular model over F_q, as library curves paired with oracle digits.
template <typename Fn>
void for_each_model(const oracle::Field& o, Fn&& fn) {
  Field k = make_field(o.p, o.n);
  const std::int64_t a2_count = o.p == 3 ? o.q : 1;
  for (std::int64_t a2 = 0; a2 < a2_count; ++a2) {
    for (std::int64_t a4 = 0; a4 < o.q; ++a4) {
      for (std::int64_t a6 = 0; a6 < o.q; ++a6) {
        const auto d2 = o.element(a2), d4 = o.element(a4), d6 = o.element(a6);
        const auto e = WeierstrassCurve::make(k, o.lib(d2), o.lib(d4), o.lib(d6));
        REQUIRE(e.has_value() == !oracle::singular(o, d2, d4, d6));
        if (e) fn(*e, d2, d4, d6);
      }
    }
  }
}

}  // namespace

TEST_CASE("discriminant and j examples") {
  Field k = make_field(5, 1);
  const auto e1 = WeierstrassCurve::short_form(k, 1, 0);
  CHECK(discriminant(e1) == k->from_int(1));
  CHECK(j_invariant(e1) == k->from_int(3));
  CHECK(j_invariant(WeierstrassCurve::short_form(k, 0, 1)) == k->zero());
  CHECK(j_invariant(WeierstrassCurve::short_form(k, 1, 1)) == k->from_int(2));
}

TEST_CASE("model errors") {
  Field k = make_field(5, 1);
  CHECK(kind_of([&] { WeierstrassCurve::short_form(k, 0, 0); }) == ErrorKind::kSingularModel);
  CHECK(kind_of([&] { WeierstrassCurve(k, k->one(), k->one(), k->one()); }) == ErrorKind::kUnsupportedModel);
  CHECK_FALSE(WeierstrassCurve::make(k, k->zero(), k->zero(), k->zero()).has_value());
  // Characteristic 3 keeps a2: y^2 = x^3 + x^2 + 1 is nonsingular.
  Field f3 = make_field(3, 1);
  CHECK(WeierstrassCurve::make(f3, f3->one(), f3->zero(), f3->one()).has_value());
  CHECK_FALSE(WeierstrassCurve::make(f3, f3->zero(), f3->zero(), f3->one()).has_value());
}

TEST_CASE("point count examples") {
  Field k = make_field(5, 1);
  const FrobeniusData a = point_count(WeierstrassCurve::short_form(k, 1, 0));
  CHECK(a.count == 4);
  CHECK(a.beta == 2);
  CHECK(a.ordinary);
  const FrobeniusData b = point_count(WeierstrassCurve::short_form(k, 0, 1));
  CHECK(b.count == 6);
  CHECK(b.beta == 0);
  CHECK_FALSE(b.ordinary);
  const FrobeniusData c = point_count(WeierstrassCurve::short_form(k, 1, 1));
  CHECK(c.count == 9);
  CHECK(c.beta == -3);
  const FrobeniusData d = point_count(WeierstrassCurve::short_form(k, 2, 0));
  CHECK(d.count == 2);
  CHECK(d.beta == 4);
  CHECK(point_count(WeierstrassCurve::short_form(k, 3, 0)).count == 10);
}

TEST_CASE("point counts agree with the (x, y) oracle on every model") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    oracle::Field o(p, n);
    for_each_model(o, [&](const WeierstrassCurve& e, const auto& d2, const auto& d4, const auto& d6) {
      const std::int64_t expected = oracle::brute_count(o, d2, d4, d6);
      const FrobeniusData f = point_count(e);
      REQUIRE(static_cast<std::int64_t>(f.count) == expected);
      REQUIRE(f.beta == o.q + 1 - expected);
      REQUIRE(f.beta * f.beta <= 4 * o.q);
    });
  }
}

TEST_CASE("Hasse invariant examples") {
  Field k = make_field(5, 1);
  CHECK(hasse_invariant(WeierstrassCurve::short_form(k, 0, 1)) == k->zero());
  CHECK(hasse_invariant(WeierstrassCurve::short_form(k, 1, 1)) == k->from_int(2));
  CHECK(is_ordinary(WeierstrassCurve::short_form(k, 1, 0)));
  CHECK_FALSE(is_ordinary(WeierstrassCurve::short_form(k, 0, 1)));
  CHECK(is_ordinary(WeierstrassCurve::short_form(k, 2, 0)));
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if (auto e = WeierstrassCurve::make(k, k->zero(), k->from_int(a), k->from_int(b))) {
        CHECK(hasse_invariant(*e) == k->from_int(2 * a));
      }
    }
  }
}

TEST_CASE("Hasse invariants agree with the untruncated power") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    oracle::Field o(p, n);
    for_each_model(o, [&](const WeierstrassCurve& e, const auto& d2, const auto& d4, const auto& d6) {
      REQUIRE(hasse_invariant(e) == o.lib(oracle::hasse(o, d2, d4, d6)));
    });
  }
}

TEST_CASE("field-level Hasse invariant") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}}) {
    oracle::Field o(p, n);
    Field k = make_field(p, n);
    for_each_model(o, [&](const WeierstrassCurve& e, const auto& d2, const auto& d4, const auto& d6) {
      const FieldElement aq = hasse_invariant(e, HasseLevel::kField);
      const auto full = oracle::power_coefficient(o, {d6, d4, d2, o.constant(1)}, (o.q - 1) / 2, o.q - 1);
      REQUIRE(aq == o.lib(full));
      const std::int64_t count = oracle::brute_count(o, d2, d4, d6);
      REQUIRE(aq == k->from_int(1 - count));
    });
  }
  Field big = make_field(3, 8);
  CHECK(kind_of([&] {
          hasse_invariant(WeierstrassCurve(big, big->zero(), big->one(), big->one()), HasseLevel::kField);
        }) == ErrorKind::kFieldTooLarge);
}

TEST_CASE("twists") {
  Field k = make_field(5, 1);
  const auto e = WeierstrassCurve::short_form(k, 1, 1);
  const auto t = twist(e, k->from_int(2), TwistKind::kQuadratic);
  CHECK(t == WeierstrassCurve::short_form(k, 4, 3));
  CHECK(hasse_invariant(t) == k->from_int(3));
  CHECK(twist(e, k->one(), TwistKind::kQuadratic) == e);

  const auto j1728 = WeierstrassCurve::short_form(k, 1, 0);
  CHECK(kind_of([&] { twist(j1728, k->from_int(2), TwistKind::kSextic); }) == ErrorKind::kWrongJInvariant);
  CHECK(kind_of([&] { twist(e, k->zero(), TwistKind::kQuadratic); }) == ErrorKind::kZeroTwistParameter);
  CHECK(kind_of([&] { twist(e, k->from_int(2), TwistKind::kQuartic); }) == ErrorKind::kWrongJInvariant);
  const auto quartic = twist(j1728, k->from_int(2), TwistKind::kQuartic);
  CHECK(quartic == WeierstrassCurve::short_form(k, 2, 0));
  CHECK(j_invariant(quartic) == j_invariant(j1728));

  Field f7 = make_field(7, 1);
  CHECK(kind_of([&] { twist(WeierstrassCurve::short_form(f7, 1, 0), f7->from_int(3), TwistKind::kQuartic); }) ==
        ErrorKind::kBadCongruence);
  const auto j0 = WeierstrassCurve::short_form(f7, 0, 1);
  CHECK(twist(j0, f7->from_int(3), TwistKind::kSextic) == WeierstrassCurve::short_form(f7, 0, 3));
  Field f11 = make_field(11, 1);
  CHECK(kind_of([&] { twist(WeierstrassCurve::short_form(f11, 0, 1), f11->from_int(2), TwistKind::kSextic); }) ==
        ErrorKind::kBadCongruence);
}

TEST_CASE("point counter guards") {
  Field big = make_field(3, 13);
  CHECK(kind_of([&] { PointCounter counter(big); }) == ErrorKind::kFieldTooLarge);
  // 2^20 itself is not a prime power, so the largest counted fields sit just below.
  Field edge = make_field(1021, 2);
  PointCounter counter(edge);
  const auto e = WeierstrassCurve(edge, edge->zero(), edge->one(), edge->one());
  const FrobeniusData f = counter.count(e);
  CHECK(f.beta * f.beta <= 4 * static_cast<std::int64_t>(edge->q()));
}
