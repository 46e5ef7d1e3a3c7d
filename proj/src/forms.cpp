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

#include "hasse_forms/forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hasse_forms/error.hpp"
#include "hasse_forms/poly.hpp"

namespace hasse_forms {

UnitClass::UnitClass(Field field, std::uint32_t exp) : field_(std::move(field)), exp_(exp % (field_->p() - 1)) {
  rep_ = field_->pow(field_->primitive_element(), exp_);
}

UnitClass unit_class_of(const Field& field, FieldElement x) {
  if (x.is_zero()) throw Error(ErrorKind::kZeroElement, "zero has no unit class");
  return UnitClass(field, static_cast<std::uint32_t>(field->discrete_log(x) % (field->p() - 1)));
}

std::vector<UnitClass> enumerate_classes(const Field& field) {
  std::vector<UnitClass> out;
  out.reserve(field->p() - 1);
  for (std::uint32_t e = 0; e + 1 < field->p(); ++e) out.emplace_back(field, e);
  return out;
}

UnitClass class_product(const UnitClass& a, const UnitClass& b) {
  if (a.field()->q() != b.field()->q()) throw Error(ErrorKind::kCtxMismatch, "classes over different fields");
  return UnitClass(a.field(), a.exp() + b.exp());
}

UnitClass class_inverse(const UnitClass& c) { return UnitClass(c.field(), c.field()->p() - 1 - c.exp()); }

std::uint32_t class_order(const UnitClass& c) {
  const std::uint32_t group = c.field()->p() - 1;
  return group / std::gcd(group, c.exp());
}

std::uint32_t twisted_form_count(std::uint32_t p) { return p == 2 ? 1 : p - 1; }

FieldElement phi(const UnitClass& c) { return c.field()->norm_to_prime(c.rep()); }

std::uint32_t phi_residue(const UnitClass& c) { return c.field()->prime_value(phi(c)); }

std::vector<std::uint32_t> realizable_set(std::uint32_t p, std::uint64_t q) {
  if (p == 2) return {1};
  std::set<std::uint32_t> residues;
  for (std::int64_t beta = 1; static_cast<std::uint64_t>(beta * beta) < 4 * q; ++beta) {
    if (beta % p == 0) continue;
    residues.insert(static_cast<std::uint32_t>(beta % p));
    residues.insert(static_cast<std::uint32_t>(p - beta % p));
  }
  return {residues.begin(), residues.end()};
}

UnitClass twist_class_action(const UnitClass& h, FieldElement d, TwistKind kind) {
  const FieldCtx& k = *h.field();
  if (d.is_zero()) throw Error(ErrorKind::kZeroTwistParameter, "twist parameter must be nonzero");
  const unsigned degree = twist_degree(kind);
  if ((k.p() - 1) % degree != 0) {
    throw Error(ErrorKind::kBadCongruence, std::string(twist_kind_name(kind)) + " twists need p = 1 mod " +
                                               std::to_string(degree == 6 ? 3 : degree));
  }
  return unit_class_of(h.field(), k.mul(h.rep(), k.pow(d, (k.p() - 1) / degree)));
}

FrobeniusKernelClass kernel_of_frobenius(const WeierstrassCurve& e) {
  const FieldElement a = hasse_invariant(e);
  if (a.is_zero()) return SupersingularKernel{};
  return OrdinaryKernel{unit_class_of(e.field(), a)};
}

PTorsionDescription ptorsion_description(const WeierstrassCurve& e) {
  const Field& field = e.field();
  const FieldCtx& k = *field;
  const FieldElement h = hasse_invariant(e);
  if (h.is_zero()) return SupersingularM2{};

  OrdinaryScheme out{unit_class_of(field, h), h, j_invariant(e), {}, {}};
  out.j_root = k.pow(out.j, k.q() / k.p());
  const Polynomial kummer = Polynomial::monomial(field, k.one(), k.p() - 1) - Polynomial::constant(field, h);
  for (const auto& [g, multiplicity] : factor(kummer).factors) {
    for (unsigned i = 0; i < multiplicity; ++i) out.etale_degrees.push_back(static_cast<unsigned>(g.degree()));
  }
  return out;
}

}  // namespace hasse_forms
