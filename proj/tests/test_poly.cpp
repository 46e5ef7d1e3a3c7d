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

#include <algorithm>
#include <vector>

#include "hasse_forms/error.hpp"
#include "hasse_forms/poly.hpp"
#include "oracles.hpp"

using namespace hasse_forms;

namespace {

std::vector<unsigned> degrees(const Factorization& f) {
  std::vector<unsigned> out;
  for (const auto& [g, m] : f.factors) {
    for (unsigned i = 0; i < m; ++i) out.push_back(static_cast<unsigned>(g.degree()));
  }
  return out;
}

Polynomial expand(const Field& k, const Factorization& f) {
  Polynomial out = Polynomial::constant(k, f.leading);
  for (const auto& [g, m] : f.factors) {
    for (unsigned i = 0; i < m; ++i) out = out * g;
  }
  return out;
}

}  // namespace

TEST_CASE("truncated powers") {
  Field k = make_field(5, 1);
  const Polynomial f = Polynomial::from_ints(k, {1, 1, 0, 1});
  CHECK(pow_truncated(f, 2, 4).coeff(4) == k->from_int(2));
  CHECK(pow_truncated(f, 0, 4) == Polynomial::constant(k, k->one()));
  CHECK((f * f).coeff(4) == k->from_int(2));

  const Polynomial g = Polynomial::from_ints(k, {0, 2, 0, 1});
  CHECK(g.coeff(1) == k->from_int(2));
  CHECK(g.coeff(5) == k->zero());

  // Truncation agrees with the full power on every kept coefficient.
  Field f9 = make_field(3, 2);
  const Polynomial h(f9, {f9->from_code(5), f9->from_code(7), f9->zero(), f9->one()});
  Polynomial full = Polynomial::constant(f9, f9->one());
  for (int e = 0; e < 6; ++e) {
    const Polynomial t = pow_truncated(h, e, 7);
    for (std::size_t i = 0; i <= 7; ++i) REQUIRE(t.coeff(i) == full.coeff(i));
    full = full * h;
  }
}

TEST_CASE("division identities") {
  Field k = make_field(7, 1);
  const Polynomial a = Polynomial::from_ints(k, {3, 0, 5, 1, 6, 2});
  const Polynomial b = Polynomial::from_ints(k, {1, 4, 3});
  auto [quot, rem] = divmod(a, b);
  CHECK(quot * b + rem == a);
  CHECK(rem.degree() < b.degree());
  CHECK(gcd(a * b, b * b) == make_monic(b));
  CHECK(derivative(Polynomial::from_ints(k, {1, 1, 1, 1})) == Polynomial::from_ints(k, {1, 2, 3}));
  try {
    divmod(a, Polynomial(k));
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kZeroPolynomial);
  }
}

TEST_CASE("factoring examples") {
  Field k = make_field(5, 1);
  const Factorization split = factor(Polynomial::from_ints(k, {-1, 0, 0, 0, 1}));
  REQUIRE(split.factors.size() == 4);
  // Sorted by coefficient tuple: x + 1, x + 2, x + 3, x + 4.
  for (int r = 1; r <= 4; ++r) {
    CHECK(split.factors[r - 1].first == Polynomial::from_ints(k, {r, 1}));
    CHECK(split.factors[r - 1].second == 1);
  }
  CHECK(degrees(factor(Polynomial::from_ints(k, {-2, 0, 0, 0, 1}))) == std::vector<unsigned>{4});

  const Factorization purely = factor(Polynomial::from_ints(k, {-2, 0, 0, 0, 0, 1}));
  REQUIRE(purely.factors.size() == 1);
  CHECK(purely.factors[0].first == Polynomial::from_ints(k, {-2, 1}));
  CHECK(purely.factors[0].second == 5);
}

TEST_CASE("factorization of every small polynomial") {
  for (auto [p, n, max_degree] : std::vector<std::tuple<int, int, int>>{{3, 1, 5}, {5, 1, 4}, {3, 2, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    Field k = make_field(p, n);
    const std::uint32_t q = k->q();
    for (int d = 1; d <= max_degree; ++d) {
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= q;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElement> c(d + 1);
        std::uint64_t v = idx;
        for (int i = 0; i < d; ++i) {
          c[i] = k->from_code(static_cast<std::uint32_t>(v % q));
          v /= q;
        }
        c[d] = k->from_code(static_cast<std::uint32_t>(1 + idx % (q - 1)));
        const Polynomial f(k, c);
        const Factorization fac = factor(f);
        REQUIRE(expand(k, fac) == f);
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
          const Polynomial& g = fac.factors[i].first;
          REQUIRE(g.is_monic());
          if (i > 0) REQUIRE(!(fac.factors[i - 1].first == g));
          // Irreducible: no root, and for degree 4/5 no quadratic divisor.
          for (std::uint32_t x = 0; x < q && g.degree() > 1; ++x) {
            REQUIRE(!evaluate(g, k->from_code(x)).is_zero());
          }
          if (n == 1 && g.degree() >= 4) {
            oracle::Digits digits;
            for (FieldElement e : g.coeffs()) digits.push_back(k->prime_value(e));
            REQUIRE(oracle::irreducible(digits, p));
          }
        }
        for (std::size_t i = 1; i < fac.factors.size(); ++i) {
          REQUIRE(fac.factors[i - 1].first.degree() <= fac.factors[i].first.degree());
        }
      }
    }
  }
}

TEST_CASE("formatting") {
  Field k = make_field(5, 1);
  CHECK(to_string(Polynomial::from_ints(k, {1, 2, 0, 1})) == "x^3 + 2*x + 1");
  CHECK(to_string(Polynomial(k)) == "0");
  Field f9 = make_field(3, 2);
  CHECK(to_string(*f9, f9->from_code(5)) == "(1,2)");
}
