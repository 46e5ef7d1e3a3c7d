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

#ifndef HASSE_FORMS_FORMS_HPP_
#define HASSE_FORMS_FORMS_HPP_

#include <cstdint>
#include <variant>
#include <vector>

#include "hasse_forms/curve.hpp"
#include "hasse_forms/gf.hpp"

namespace hasse_forms {

/// A class in F_q^x / F_q^{x(p-1)}. Classes are identified by the residue
/// exp = dlog_g(x) mod (p-1) for the canonical primitive element g; the
/// representative is g^exp.
class UnitClass {
 public:
  UnitClass(Field field, std::uint32_t exp);

  const Field& field() const { return field_; }
  FieldElement rep() const { return rep_; }
  std::uint32_t exp() const { return exp_; }
  bool is_trivial() const { return exp_ == 0; }

  friend bool operator==(const UnitClass& a, const UnitClass& b) {
    return a.field_->q() == b.field_->q() && a.exp_ == b.exp_;
  }

 private:
  Field field_;
  FieldElement rep_;
  std::uint32_t exp_;
};

/// Throws kZeroElement for x = 0.
UnitClass unit_class_of(const Field& field, FieldElement x);
/// The p - 1 classes, exp = 0, ..., p - 2.
std::vector<UnitClass> enumerate_classes(const Field& field);
UnitClass class_product(const UnitClass& a, const UnitClass& b);
/// Converts between the Hasse-invariant class and the p-Lie algebra class of ker(F).
UnitClass class_inverse(const UnitClass& c);
/// Order of the class in the cyclic group of order p - 1.
std::uint32_t class_order(const UnitClass& c);

/// Number of twisted forms of mu_p over a field of characteristic p: p - 1,
/// and 1 in characteristic 2 where mu_2 has no nontrivial forms.
std::uint32_t twisted_form_count(std::uint32_t p);

/// rep^{(q-1)/(p-1)}, an element of F_p^x.
FieldElement phi(const UnitClass& c);
/// phi(c) as an integer residue in [1, p).
std::uint32_t phi_residue(const UnitClass& c);

/// { beta mod p : beta in Z, p does not divide beta, beta^2 < 4q }, ascending.
/// For p = 2 this is {1}.
std::vector<std::uint32_t> realizable_set(std::uint32_t p, std::uint64_t q);

/// Class of rep * D^{(p-1)/k} for the twist of degree k. Throws
/// kZeroTwistParameter or kBadCongruence.
UnitClass twist_class_action(const UnitClass& h, FieldElement d, TwistKind kind);

struct OrdinaryKernel {
  UnitClass hasse_class;  // [A_p]; ker(F) itself has the inverse class
};
struct SupersingularKernel {};  // ker(F) = alpha_p
using FrobeniusKernelClass = std::variant<OrdinaryKernel, SupersingularKernel>;

FrobeniusKernelClass kernel_of_frobenius(const WeierstrassCurve& e);

/// E[p] = Spec(k + M + L) with M = k[y]/(y^{p-1} - h) and L = M[x]/(x^p - j).
struct OrdinaryScheme {
  UnitClass hasse_class;
  FieldElement h;      // A_p
  FieldElement j;      // j(E)
  FieldElement j_root;  // the p-th root of j; x^p - j = (x - j_root)^p
  std::vector<unsigned> etale_degrees;  // degrees of the factors of y^{p-1} - h, with multiplicity
};
struct SupersingularM2 {};  // E[p] = M_2
using PTorsionDescription = std::variant<OrdinaryScheme, SupersingularM2>;

PTorsionDescription ptorsion_description(const WeierstrassCurve& e);

}  // namespace hasse_forms

#endif  // HASSE_FORMS_FORMS_HPP_
