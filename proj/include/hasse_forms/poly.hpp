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

#ifndef HASSE_FORMS_POLY_HPP_
#define HASSE_FORMS_POLY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hasse_forms/gf.hpp"

namespace hasse_forms {

/// Dense univariate polynomial over F_q. coeffs()[i] is the coefficient of
/// x^i; trailing zeros are always stripped, so the zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  explicit Polynomial(Field field);
  Polynomial(Field field, std::vector<FieldElement> coeffs);

  static Polynomial constant(Field field, FieldElement c);
  static Polynomial monomial(Field field, FieldElement c, std::size_t degree);
  /// From prime-field integers, low degree first.
  static Polynomial from_ints(Field field, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  /// Coefficient of x^i; zero beyond the degree.
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_->q() == b.field_->q() && a.coeffs_ == b.coeffs_;
  }

 private:
  void strip();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, FieldElement c);

/// Quotient and remainder; throws kZeroPolynomial for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& f);
Polynomial make_monic(const Polynomial& f);
FieldElement evaluate(const Polynomial& f, FieldElement x);
/// base^e mod modulus.
Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// f^e with every coefficient above degree_cap dropped after each product.
Polynomial pow_truncated(const Polynomial& f, std::uint64_t e, std::size_t degree_cap);

struct Factorization {
  FieldElement leading;
  /// Monic irreducible factors with multiplicity, sorted by degree then by
  /// coefficient tuple.
  std::vector<std::pair<Polynomial, unsigned>> factors;
};

/// Complete deterministic factorization into monic irreducibles:
/// square-free decomposition, root stripping by exhaustive evaluation,
/// distinct-degree splitting, then equal-degree splitting with test
/// polynomials taken in canonical order. Throws kZeroPolynomial.
Factorization factor(const Polynomial& f);

/// Human-readable form such as "x^3 + 2*x + 1"; extension coefficients are
/// printed as tuples "(c0,c1)".
std::string to_string(const Polynomial& f, const std::string& var = "x");
std::string to_string(const FieldCtx& field, FieldElement x);

}  // namespace hasse_forms

#endif  // HASSE_FORMS_POLY_HPP_
