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

#ifndef HASSE_FORMS_GF_HPP_
#define HASSE_FORMS_GF_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hasse_forms {

/// An element of some F_q, stored as a packed code.
///
/// The code packs the coefficient tuple (c0, ..., c_{n-1}) of
/// c0 + c1 t + ... + c_{n-1} t^{n-1} as c0 p^{n-1} + c1 p^{n-2} + ... + c_{n-1},
/// so that comparing codes is the same as comparing coefficient tuples
/// lexicographically. That ordering is the canonical element order used for
/// moduli, primitive elements and curve enumeration. For n = 1 the code is the
/// residue itself.
///
/// The element also remembers the order q of the field it came from; mixing
/// elements of different fields is rejected by FieldCtx.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr FieldElement(std::uint32_t code, std::uint32_t field_order) : code_(code), order_(field_order) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t field_order() const { return order_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;
  friend constexpr auto operator<=>(const FieldElement& a, const FieldElement& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  std::uint32_t code_ = 0;
  std::uint32_t order_ = 0;
};

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Builds F_{p^n}. For n >= 2 the modulus is the lexicographically smallest
/// monic irreducible polynomial of degree n. Throws Error with kNotPrime,
/// kEvenCharacteristic or kDegreeTooLarge (n == 0 or p^n > 2^32).
Field make_field(std::uint64_t p, std::uint64_t n);

/// Arithmetic context for F_q, q = p^n, p odd. Immutable after construction.
///
/// Fields with q <= kTableLimit carry exp/log/Zech tables; larger fields fall
/// back to schoolbook arithmetic on coefficient vectors.
class FieldCtx {
 public:
  static constexpr std::uint32_t kTableLimit = 1u << 20;

  struct PrivateTag {};
  FieldCtx(PrivateTag, std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  /// Lower coefficients (m0, ..., m_{n-1}) of the monic modulus; empty when n == 1.
  std::span<const std::uint32_t> modulus() const { return modulus_; }
  bool has_tables() const { return !log_.empty(); }

  FieldElement zero() const { return {0, q_}; }
  FieldElement one() const { return {weight_[0], q_}; }
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  FieldElement from_code(std::uint32_t code) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;

  /// True iff x lies in F_p; prime_value returns its residue (or throws kCtxMismatch).
  bool in_prime_field(FieldElement x) const;
  std::uint32_t prime_value(FieldElement x) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// x^{1 + p + ... + p^{n-1}}, the norm down to F_p.
  FieldElement norm_to_prime(FieldElement x) const;
  /// 0 for zero, +1 for nonzero squares, -1 otherwise.
  int quadratic_character(FieldElement x) const;
  /// Lexicographically smallest element of multiplicative order q - 1.
  FieldElement primitive_element() const { return {primitive_, q_}; }
  /// Exponent e in [0, q-1) with g^e = x for the primitive element g. Throws kZeroElement on 0.
  std::uint64_t discrete_log(FieldElement x) const;
  std::uint64_t multiplicative_order(FieldElement x) const;

  /// Raw code arithmetic without field checks, for inner loops.
  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;

  /// Primes dividing q - 1, ascending.
  std::span<const std::uint64_t> group_order_primes() const { return order_primes_; }

 private:
  void check(FieldElement x) const;
  void unpack(std::uint32_t code, std::uint32_t* out) const;
  std::uint32_t pack(const std::uint32_t* digits) const;
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_generic(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t find_primitive() const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> weight_;  // weight_[i] = p^{n-1-i}
  std::vector<std::uint64_t> order_primes_;
  std::uint32_t primitive_ = 0;

  // Present only when q <= kTableLimit.
  std::vector<std::uint32_t> exp_;   // exp_[k] = g^k for k in [0, 2(q-1))
  std::vector<std::uint32_t> log_;   // log_[code], log_[0] unused
  std::vector<std::uint32_t> zech_;  // zech_[k] = log(1 + g^k), kNoLog when 1 + g^k = 0
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
};

bool is_prime(std::uint64_t v);
/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace hasse_forms

#endif  // HASSE_FORMS_GF_HPP_
