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

#include "hasse_forms/gf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "hasse_forms/error.hpp"

namespace hasse_forms {
namespace {

constexpr std::uint64_t kMaxOrder = std::numeric_limits<std::uint32_t>::max();
// 3^20 < 2^32 < 3^21, so no field we accept has more than 20 digits.
constexpr std::size_t kMaxDegree = 20;

using Digits = std::array<std::uint32_t, kMaxDegree>;

// Remainder of the monic f (low-to-high, degree n implied by size) modulo the
// monic g over F_p. Both are passed with their leading 1 included.
bool divides_monic(const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g, std::uint32_t p) {
  std::vector<std::uint64_t> r(f.begin(), f.end());
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = r.size() - 1; k >= dg; --k) {
    const std::uint64_t c = r[k] % p;
    if (c != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        r[k - dg + i] = (r[k - dg + i] + (p - c) * g[i]) % p;
      }
    }
    if (k == dg) break;
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (r[i] % p != 0) return false;
  }
  return true;
}

bool has_root_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

// Trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return true;
  if (has_root_mod_p(f, p)) return false;
  std::vector<std::uint32_t> g;
  for (std::size_t d = 2; d <= n / 2; ++d) {
    g.assign(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (divides_monic(f, g, p)) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

Field make_field(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorKind::kEvenCharacteristic, "characteristic 2 is not supported");
  if (n == 0) throw Error(ErrorKind::kDegreeTooLarge, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorKind::kDegreeTooLarge,
                  std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^32");
    }
  }
  return std::make_shared<const FieldCtx>(FieldCtx::PrivateTag{}, static_cast<std::uint32_t>(p),
                                          static_cast<std::uint32_t>(n));
}

FieldCtx::FieldCtx(PrivateTag, std::uint32_t p, std::uint32_t n) : p_(p), n_(n), q_(1) {
  weight_.assign(n_, 1);
  for (std::uint32_t i = 0; i < n_; ++i) q_ *= p_;
  for (std::uint32_t i = n_; i-- > 1;) weight_[i - 1] = weight_[i] * p_;

  if (n_ >= 2) {
    // Lower coefficients in lexicographic order of (c0, ..., c_{n-1}) are
    // exactly the element codes in increasing order.
    std::vector<std::uint32_t> f(n_ + 1);
    for (std::uint32_t code = 0; code < q_; ++code) {
      unpack(code, f.data());
      f[n_] = 1;
      if (is_irreducible_mod_p(f, p_)) {
        modulus_.assign(f.begin(), f.begin() + n_);
        break;
      }
    }
  }
  order_primes_ = prime_factors(q_ - 1);
  primitive_ = find_primitive();
  if (q_ <= kTableLimit) build_tables();
}

void FieldCtx::check(FieldElement x) const {
  if (x.field_order() != q_ || x.code() >= q_) {
    throw Error(ErrorKind::kCtxMismatch, "element of F_" + std::to_string(x.field_order()) +
                                             " used with F_" + std::to_string(q_));
  }
}

void FieldCtx::unpack(std::uint32_t code, std::uint32_t* out) const {
  for (std::uint32_t i = n_; i-- > 0;) {
    out[i] = code % p_;
    code /= p_;
  }
}

std::uint32_t FieldCtx::pack(const std::uint32_t* digits) const {
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < n_; ++i) code = code * p_ + digits[i];
  return code;
}

FieldElement FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r) * weight_[0], q_};
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) {
    throw Error(ErrorKind::kCtxMismatch, std::to_string(coeffs.size()) + " coefficients given for F_" +
                                             std::to_string(q_) + " (degree " + std::to_string(n_) + ")");
  }
  Digits d{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % p_;
  return {pack(d.data()), q_};
}

FieldElement FieldCtx::from_code(std::uint32_t code) const {
  FieldElement x{code, q_};
  check(x);
  return x;
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElement x) const {
  check(x);
  std::vector<std::uint32_t> out(n_);
  unpack(x.code(), out.data());
  return out;
}

bool FieldCtx::in_prime_field(FieldElement x) const {
  check(x);
  return x.code() % weight_[0] == 0;
}

std::uint32_t FieldCtx::prime_value(FieldElement x) const {
  if (!in_prime_field(x)) throw Error(ErrorKind::kCtxMismatch, "element is not in the prime field");
  return x.code() / weight_[0];
}

std::uint32_t FieldCtx::add_digits(std::uint32_t a, std::uint32_t b) const {
  Digits da, db;
  unpack(a, da.data());
  unpack(b, db.data());
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t s = da[i] + db[i];
    da[i] = s >= p_ ? s - p_ : s;
  }
  return pack(da.data());
}

std::uint32_t FieldCtx::add_code(std::uint32_t a, std::uint32_t b) const {
  if (n_ == 1) {
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  if (a == 0) return b;
  if (b == 0) return a;
  if (zech_.empty()) return add_digits(a, b);
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
  const std::uint32_t z = zech_[d];
  return z == kNoLog ? 0 : exp_[la + z];
}

std::uint32_t FieldCtx::neg_code(std::uint32_t a) const {
  if (a == 0) return 0;
  if (n_ == 1) return p_ - a;
  if (!log_.empty()) return exp_[log_[a] + (q_ - 1) / 2];
  Digits d;
  unpack(a, d.data());
  for (std::uint32_t i = 0; i < n_; ++i) d[i] = d[i] == 0 ? 0 : p_ - d[i];
  return pack(d.data());
}

std::uint32_t FieldCtx::mul_generic(std::uint32_t a, std::uint32_t b) const {
  if (n_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  Digits da, db;
  unpack(a, da.data());
  unpack(b, db.data());
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j] % p_;
  }
  for (std::uint32_t k = 2 * n_ - 2; k >= n_; --k) {
    const std::uint64_t c = prod[k] % p_;
    if (c != 0) {
      for (std::uint32_t i = 0; i < n_; ++i) prod[k - n_ + i] += (p_ - c) * modulus_[i] % p_;
    }
  }
  Digits out;
  for (std::uint32_t i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
  return pack(out.data());
}

std::uint32_t FieldCtx::mul_code(std::uint32_t a, std::uint32_t b) const {
  if (log_.empty()) return mul_generic(a, b);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t FieldCtx::pow_generic(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = weight_[0];
  while (e != 0) {
    if (e & 1) result = mul_generic(result, a);
    e >>= 1;
    if (e != 0) a = mul_generic(a, a);
  }
  return result;
}

FieldElement FieldCtx::add(FieldElement x, FieldElement y) const {
  check(x);
  check(y);
  return {add_code(x.code(), y.code()), q_};
}

FieldElement FieldCtx::sub(FieldElement x, FieldElement y) const {
  check(x);
  check(y);
  return {add_code(x.code(), neg_code(y.code())), q_};
}

FieldElement FieldCtx::neg(FieldElement x) const {
  check(x);
  return {neg_code(x.code()), q_};
}

FieldElement FieldCtx::mul(FieldElement x, FieldElement y) const {
  check(x);
  check(y);
  return {mul_code(x.code(), y.code()), q_};
}

FieldElement FieldCtx::inv(FieldElement x) const {
  check(x);
  if (x.is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero in F_" + std::to_string(q_));
  if (!log_.empty()) return {exp_[(q_ - 1 - log_[x.code()]) % (q_ - 1)], q_};
  return {pow_generic(x.code(), q_ - 2), q_};
}

FieldElement FieldCtx::pow(FieldElement x, std::uint64_t e) const {
  check(x);
  if (e == 0) return one();
  if (x.is_zero()) return zero();
  if (!log_.empty()) {
    const std::uint64_t k = static_cast<std::uint64_t>(log_[x.code()]) * (e % (q_ - 1)) % (q_ - 1);
    return {exp_[k], q_};
  }
  return {pow_generic(x.code(), e), q_};
}

FieldElement FieldCtx::norm_to_prime(FieldElement x) const {
  check(x);
  if (x.is_zero()) return zero();
  return pow(x, (static_cast<std::uint64_t>(q_) - 1) / (p_ - 1));
}

int FieldCtx::quadratic_character(FieldElement x) const {
  check(x);
  if (x.is_zero()) return 0;
  if (!log_.empty()) return (log_[x.code()] & 1) == 0 ? 1 : -1;
  return pow(x, (static_cast<std::uint64_t>(q_) - 1) / 2) == one() ? 1 : -1;
}

std::uint32_t FieldCtx::find_primitive() const {
  const std::uint64_t group = q_ - 1;
  const std::uint32_t unit = weight_[0];
  for (std::uint32_t code = 1; code < q_; ++code) {
    bool generator = true;
    for (std::uint64_t r : order_primes_) {
      if (pow_generic(code, group / r) == unit) {
        generator = false;
        break;
      }
    }
    if (generator) return code;
  }
  return unit;  // q == 2 is impossible here; F_3 has 2 as generator
}

void FieldCtx::build_tables() {
  const std::uint32_t group = q_ - 1;
  exp_.resize(2 * static_cast<std::size_t>(group));
  log_.assign(q_, 0);
  std::uint32_t acc = weight_[0];
  for (std::uint32_t k = 0; k < group; ++k) {
    exp_[k] = acc;
    exp_[k + group] = acc;
    log_[acc] = k;
    acc = mul_generic(acc, primitive_);
  }
  if (n_ >= 2) {
    zech_.resize(group);
    for (std::uint32_t k = 0; k < group; ++k) {
      const std::uint32_t s = add_digits(weight_[0], exp_[k]);
      zech_[k] = s == 0 ? kNoLog : log_[s];
    }
  }
}

std::uint64_t FieldCtx::discrete_log(FieldElement x) const {
  check(x);
  if (x.is_zero()) throw Error(ErrorKind::kZeroElement, "discrete log of zero");
  if (!log_.empty()) return log_[x.code()];

  // Baby-step giant-step over the primitive element.
  const std::uint64_t group = q_ - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group))));
  std::unordered_map<std::uint32_t, std::uint64_t> baby;
  baby.reserve(m);
  std::uint32_t acc = weight_[0];
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(acc, j);
    acc = mul_generic(acc, primitive_);
  }
  const std::uint32_t giant = pow_generic(primitive_, group - (m % group));  // g^{-m}
  std::uint32_t gamma = x.code();
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return (i * m + it->second) % group;
    gamma = mul_generic(gamma, giant);
  }
  return 0;  // unreachable for a primitive base
}

std::uint64_t FieldCtx::multiplicative_order(FieldElement x) const {
  check(x);
  if (x.is_zero()) throw Error(ErrorKind::kZeroElement, "order of zero");
  std::uint64_t order = q_ - 1;
  for (std::uint64_t r : order_primes_) {
    while (order % r == 0 && pow(x, order / r) == one()) order /= r;
  }
  return order;
}

}  // namespace hasse_forms
