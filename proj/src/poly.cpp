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

#include "hasse_forms/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hasse_forms/error.hpp"

namespace hasse_forms {
namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field()->q() != b.field()->q()) {
    throw Error(ErrorKind::kCtxMismatch, "polynomials over F_" + std::to_string(a.field()->q()) +
                                             " and F_" + std::to_string(b.field()->q()));
  }
}

Polynomial variable(const Field& field) { return Polynomial::monomial(field, field->one(), 1); }

// Inverse Frobenius applied coefficientwise to f(x) = g(x^p); returns g^{1/p}.
Polynomial pth_root(const Polynomial& f) {
  const FieldCtx& k = *f.field();
  const std::uint64_t root_exp = k.q() / k.p();  // a^{q/p} is the p-th root of a
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += k.p()) out.push_back(k.pow(f.coeffs()[i], root_exp));
  return Polynomial(f.field(), std::move(out));
}

void squarefree_parts(const Polynomial& f, unsigned scale_by, std::vector<std::pair<Polynomial, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const std::uint32_t p = f.field()->p();
  const Polynomial fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_parts(pth_root(f), scale_by * p, out);
    return;
  }
  Polynomial c = gcd(f, fp);
  Polynomial w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial part = w / y;
    if (part.degree() > 0) out.emplace_back(make_monic(part), i * scale_by);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(make_monic(c)), scale_by * p, out);
}

// (prod_{i<d} c^{q^i}) mod u with c = a^{(q-1)/2}, i.e. a^{(q^d-1)/2} mod u.
Polynomial half_power(const Polynomial& a, unsigned d, const Polynomial& u) {
  const std::uint64_t q = u.field()->q();
  Polynomial c = pow_mod(a, (q - 1) / 2, u);
  Polynomial acc = c;
  for (unsigned i = 1; i < d; ++i) {
    c = pow_mod(c, q, u);
    acc = (acc * c) % u;
  }
  return acc;
}

// Next monic test polynomial in canonical order: lower coefficients counted
// like digits, degree bumped when they wrap.
void next_test_poly(std::vector<std::uint32_t>& lower, std::uint32_t q) {
  std::size_t i = 0;
  while (i < lower.size() && ++lower[i] == q) lower[i++] = 0;
  if (i == lower.size()) {
    lower.assign(lower.size() + 1, 0);
  }
}

void equal_degree_split(const Polynomial& u, unsigned d, std::vector<Polynomial>& out) {
  if (u.degree() == static_cast<int>(d)) {
    out.push_back(u);
    return;
  }
  const Field& field = u.field();
  const FieldElement one = field->one();
  std::vector<std::uint32_t> lower(1, 0);
  while (static_cast<int>(lower.size()) < u.degree()) {
    std::vector<FieldElement> coeffs;
    for (std::uint32_t code : lower) coeffs.push_back(field->from_code(code));
    coeffs.push_back(one);
    const Polynomial a(field, std::move(coeffs));
    next_test_poly(lower, field->q());

    Polynomial w = gcd(u, a);
    if (w.degree() <= 0 || w.degree() == u.degree()) {
      w = gcd(u, half_power(a, d, u) - Polynomial::constant(field, one));
    }
    if (w.degree() > 0 && w.degree() < u.degree()) {
      equal_degree_split(w, d, out);
      equal_degree_split(make_monic(u / w), d, out);
      return;
    }
  }
  out.push_back(u);  // not reached for a genuine equal-degree product
}

// Monic square-free g into monic irreducibles.
void split_squarefree(Polynomial g, std::vector<Polynomial>& out) {
  const Field& field = g.field();
  const FieldCtx& k = *field;
  const Polynomial x = variable(field);
  for (std::uint32_t code = 0; code < k.q() && g.degree() > 1; ++code) {
    const FieldElement a{code, k.q()};
    if (evaluate(g, a).is_zero()) {
      const Polynomial linear = x - Polynomial::constant(field, a);
      out.push_back(linear);
      g = g / linear;
    }
  }
  if (g.degree() == 1) {
    out.push_back(g);
    return;
  }
  if (g.degree() <= 0) return;

  Polynomial h = pow_mod(x, k.q(), g);
  for (unsigned d = 2; g.degree() > 0; ++d) {
    if (g.degree() < static_cast<int>(2 * d)) {
      out.push_back(g);
      return;
    }
    h = pow_mod(h, k.q(), g);
    Polynomial u = gcd(g, h - x);
    if (u.degree() > 0) {
      equal_degree_split(u, d, out);
      g = g / u;
      h = h % g;
    }
  }
}

bool coeff_tuple_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const FieldElement& c : coeffs_) {
    if (c.field_order() != field_->q()) {
      throw Error(ErrorKind::kCtxMismatch, "coefficient not in F_" + std::to_string(field_->q()));
    }
  }
  strip();
}

Polynomial Polynomial::constant(Field field, FieldElement c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(Field field, FieldElement c, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, field->zero());
  coeffs[degree] = c;
  return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::from_ints(Field field, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> out;
  out.reserve(coeffs.size());
  for (std::int64_t c : coeffs) out.push_back(field->from_int(c));
  return Polynomial(std::move(field), std::move(out));
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

FieldElement Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

FieldElement Polynomial::leading() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const FieldCtx& k = *a.field();
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()), k.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.field(), std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const FieldCtx& k = *a.field();
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()), k.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.field(), std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  const FieldCtx& k = *a.field();
  std::vector<std::uint32_t> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::uint32_t ai = a.coeffs()[i].code();
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = k.add_code(out[i + j], k.mul_code(ai, b.coeffs()[j].code()));
    }
  }
  std::vector<FieldElement> coeffs;
  coeffs.reserve(out.size());
  for (std::uint32_t c : out) coeffs.emplace_back(c, k.q());
  return Polynomial(a.field(), std::move(coeffs));
}

Polynomial scale(const Polynomial& a, FieldElement c) {
  std::vector<FieldElement> out;
  out.reserve(a.coeffs().size());
  for (const FieldElement& x : a.coeffs()) out.push_back(a.field()->mul(x, c));
  return Polynomial(a.field(), std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "division by the zero polynomial");
  const FieldCtx& k = *a.field();
  if (a.degree() < b.degree()) return {Polynomial(a.field()), a};
  std::vector<std::uint32_t> rem;
  rem.reserve(a.coeffs().size());
  for (const FieldElement& c : a.coeffs()) rem.push_back(c.code());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::uint32_t lead_inv = k.inv(b.leading()).code();
  std::vector<std::uint32_t> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const std::uint32_t t = k.mul_code(rem[i], lead_inv);
    quot[i - db] = t;
    const std::uint32_t neg_t = k.neg_code(t);
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = k.add_code(rem[i - db + j], k.mul_code(neg_t, b.coeffs()[j].code()));
    }
  }
  rem.resize(db);
  auto wrap = [&](const std::vector<std::uint32_t>& codes) {
    std::vector<FieldElement> out;
    out.reserve(codes.size());
    for (std::uint32_t c : codes) out.emplace_back(c, k.q());
    return Polynomial(a.field(), std::move(out));
  };
  return {wrap(quot), wrap(rem)};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.field()->inv(f.leading()));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

Polynomial derivative(const Polynomial& f) {
  const FieldCtx& k = *f.field();
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    out.push_back(k.mul(k.from_int(static_cast<std::int64_t>(i % k.p())), f.coeffs()[i]));
  }
  return Polynomial(f.field(), std::move(out));
}

FieldElement evaluate(const Polynomial& f, FieldElement x) {
  const FieldCtx& k = *f.field();
  FieldElement acc = k.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = k.add(k.mul(acc, x), f.coeffs()[i]);
  return acc;
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  if (modulus.degree() == 0) return Polynomial(base.field());
  Polynomial result = Polynomial::constant(base.field(), base.field()->one()) % modulus;
  Polynomial b = base % modulus;
  while (e != 0) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e != 0) b = (b * b) % modulus;
  }
  return result;
}

Polynomial pow_truncated(const Polynomial& f, std::uint64_t e, std::size_t degree_cap) {
  const FieldCtx& k = *f.field();
  const std::size_t len = degree_cap + 1;
  auto mul_trunc = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(std::min(len, a.size() + b.size() - 1), 0);
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
      if (a[i] == 0) continue;
      const std::size_t jmax = std::min(b.size(), out.size() - i);
      for (std::size_t j = 0; j < jmax; ++j) {
        if (b[j] != 0) out[i + j] = k.add_code(out[i + j], k.mul_code(a[i], b[j]));
      }
    }
    return out;
  };

  std::vector<std::uint32_t> result{k.one().code()};
  std::vector<std::uint32_t> base;
  for (std::size_t i = 0; i < f.coeffs().size() && i < len; ++i) base.push_back(f.coeffs()[i].code());
  if (base.empty() && e != 0) return Polynomial(f.field());
  while (e != 0) {
    if (e & 1) result = mul_trunc(result, base);
    e >>= 1;
    if (e != 0) base = mul_trunc(base, base);
  }
  std::vector<FieldElement> coeffs;
  coeffs.reserve(result.size());
  for (std::uint32_t c : result) coeffs.emplace_back(c, k.q());
  return Polynomial(f.field(), std::move(coeffs));
}

Factorization factor(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  std::vector<std::pair<Polynomial, unsigned>> parts;
  squarefree_parts(make_monic(f), 1, parts);
  for (const auto& [part, multiplicity] : parts) {
    std::vector<Polynomial> irreducibles;
    split_squarefree(part, irreducibles);
    for (Polynomial& g : irreducibles) {
      auto it = std::find_if(result.factors.begin(), result.factors.end(),
                             [&](const auto& entry) { return entry.first == g; });
      if (it != result.factors.end()) {
        it->second += multiplicity;
      } else {
        result.factors.emplace_back(std::move(g), multiplicity);
      }
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return coeff_tuple_less(a.first, b.first); });
  return result;
}

std::string to_string(const FieldCtx& field, FieldElement x) {
  const std::vector<std::uint32_t> c = field.coeffs(x);
  if (field.n() == 1) return std::to_string(c[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string to_string(const Polynomial& f, const std::string& var) {
  if (f.is_zero()) return "0";
  const FieldCtx& k = *f.field();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const FieldElement c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == k.one();
    if (i == 0) {
      os << to_string(k, c);
      continue;
    }
    if (!unit) os << to_string(k, c) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace hasse_forms
