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

#include "hasse_forms/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hasse_forms/curve.hpp"
#include "hasse_forms/error.hpp"
#include "hasse_forms/forms.hpp"
#include "hasse_forms/poly.hpp"
#include "hasse_forms/search.hpp"

namespace hasse_forms::verify {
namespace {

struct Recorder {
  SuiteResult& result;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result.cases;
    if (ok) return;
    fail(describe());
  }
  void fail(const std::string& message) {
    ++result.failures;
    if (result.failure_samples.size() < kMaxSamples) result.failure_samples.push_back(message);
  }
};

std::string describe(const WeierstrassCurve& e) {
  return "y^2 = " + to_string(e.rhs()) + " over F_" + std::to_string(e.field()->q());
}

// Every nonsingular model in canonical (a2, a4, a6) order.
void for_each_curve(const Field& field, const std::function<void(const WeierstrassCurve&)>& fn) {
  const std::uint32_t q = field->q();
  const std::uint32_t a2_count = field->p() == 3 ? q : 1;
  for (std::uint32_t a2 = 0; a2 < a2_count; ++a2) {
    for (std::uint32_t a4 = 0; a4 < q; ++a4) {
      for (std::uint32_t a6 = 0; a6 < q; ++a6) {
        if (auto e = WeierstrassCurve::make(field, {a2, q}, {a4, q}, {a6, q})) fn(*e);
      }
    }
  }
}

std::int64_t residue(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

void run_classification(const Field& field, Recorder& rec) {
  const FieldCtx& k = *field;
  const std::uint32_t p = k.p();
  const std::vector<UnitClass> classes = enumerate_classes(field);
  rec.check(classes.size() == p - 1, [&] {
    return "F_" + std::to_string(k.q()) + " has " + std::to_string(classes.size()) + " classes";
  });
  for (const UnitClass& c : classes) {
    rec.check(unit_class_of(field, c.rep()) == c, [&] { return "representative of class " + std::to_string(c.exp()); });
  }
  for (const UnitClass& a : classes) {
    for (const UnitClass& b : classes) {
      rec.check(phi(class_product(a, b)) == k.mul(phi(a), phi(b)), [&] {
        return "phi not multiplicative on classes " + std::to_string(a.exp()) + ", " + std::to_string(b.exp()) +
               " over F_" + std::to_string(k.q());
      });
    }
  }
  std::vector<std::uint32_t> images;
  for (const UnitClass& c : classes) images.push_back(phi_residue(c));
  std::sort(images.begin(), images.end());
  rec.check(std::adjacent_find(images.begin(), images.end()) == images.end() && images.front() >= 1,
            [&] { return "phi not injective over F_" + std::to_string(k.q()); });
}

void run_bridge(const Field& field, Recorder& rec) {
  const PointCounter counter(field);
  const std::uint32_t p = field->p();
  for_each_curve(field, [&](const WeierstrassCurve& e) {
    FrobeniusData frob;
    try {
      frob = counter.count(e);
    } catch (const std::logic_error& err) {
      rec.check(false, [&] { return describe(e) + ": " + err.what(); });
      return;
    }
    const FieldElement a = hasse_invariant(e);
    bool ok = frob.ordinary == !a.is_zero();
    const auto bound = 4 * static_cast<std::int64_t>(field->q());
    if (frob.ordinary) ok = ok && frob.beta * frob.beta < bound;
    if (ok && !a.is_zero()) ok = residue(frob.beta, p) == phi_residue(unit_class_of(field, a));
    rec.check(ok, [&] { return describe(e) + ": beta = " + std::to_string(frob.beta); });
  });
}

void run_twists(const Field& field, Recorder& rec) {
  const FieldCtx& k = *field;
  const std::uint32_t p = k.p();
  const bool small = k.q() <= 13;
  std::optional<PointCounter> counter;
  if (small) counter.emplace(field);
  for_each_curve(field, [&](const WeierstrassCurve& e) {
    const FieldElement h = hasse_invariant(e);
    if (h.is_zero()) return;
    const UnitClass cls = unit_class_of(field, h);
    const FieldElement j = j_invariant(e);
    std::vector<TwistKind> kinds{TwistKind::kQuadratic};
    if (p % 4 == 1 && e.a2().is_zero() && e.a6().is_zero()) kinds.push_back(TwistKind::kQuartic);
    if (p % 3 == 1 && e.a2().is_zero() && e.a4().is_zero()) kinds.push_back(TwistKind::kSextic);
    for (std::uint32_t code = 1; code < k.q(); ++code) {
      const FieldElement d{code, k.q()};
      for (TwistKind kind : kinds) {
        const WeierstrassCurve ed = twist(e, d, kind);
        const FieldElement hd = hasse_invariant(ed);
        const FieldElement law = k.mul(h, k.pow(d, (p - 1) / twist_degree(kind)));
        bool ok = j_invariant(ed) == j && hd == law && !hd.is_zero() &&
                  unit_class_of(field, hd) == twist_class_action(cls, d, kind);
        if (ok && small && kind == TwistKind::kQuadratic && k.quadratic_character(d) == 1) {
          ok = counter->count(ed) == counter->count(e);
        }
        rec.check(ok, [&] {
          return std::string(twist_kind_name(kind)) + " twist of " + describe(e) + " by " + to_string(k, d);
        });
      }
    }
  });
}

void run_closed_forms(const Field& field, Recorder& rec) {
  const FieldCtx& k = *field;
  for_each_curve(field, [&](const WeierstrassCurve& e) {
    FieldElement expected;
    switch (k.p()) {
      case 5: expected = k.mul(k.from_int(2), e.a4()); break;
      case 7: expected = k.mul(k.from_int(3), e.a6()); break;
      default: expected = k.mul(k.from_int(9), k.mul(e.a4(), e.a6())); break;
    }
    rec.check(hasse_invariant(e) == expected, [&] { return describe(e) + ": A_p differs from the closed form"; });
  });
}

void run_norm(const Field& field, Recorder& rec) {
  const FieldCtx& k = *field;
  const PointCounter counter(field);
  const std::uint64_t m = (static_cast<std::uint64_t>(k.q()) - 1) / (k.p() - 1);
  for_each_curve(field, [&](const WeierstrassCurve& e) {
    const FieldElement ap = hasse_invariant(e, HasseLevel::kPrime);
    const FieldElement aq = hasse_invariant(e, HasseLevel::kField);
    const FrobeniusData frob = counter.count(e);
    bool ok = aq == k.pow(ap, m) && k.in_prime_field(aq);
    if (ok) ok = k.prime_value(aq) == residue(1 - static_cast<std::int64_t>(frob.count), k.p());
    rec.check(ok, [&] { return describe(e) + ": A_q = " + to_string(k, aq) + ", #E = " + std::to_string(frob.count); });
  });
}

void run_etale(const Field& field, Recorder& rec) {
  const FieldCtx& k = *field;
  const std::uint32_t p = k.p();
  struct Kummer {
    std::vector<unsigned> degrees;
    bool product_ok = false;
  };
  std::map<std::uint32_t, Kummer> cache;
  for_each_curve(field, [&](const WeierstrassCurve& e) {
    const PTorsionDescription d = ptorsion_description(e);
    if (std::holds_alternative<SupersingularM2>(d)) return;
    const auto& s = std::get<OrdinaryScheme>(d);
    auto it = cache.find(s.h.code());
    if (it == cache.end()) {
      const Polynomial kummer = Polynomial::monomial(field, k.one(), p - 1) - Polynomial::constant(field, s.h);
      const Factorization f = factor(kummer);
      Polynomial product = Polynomial::constant(field, f.leading);
      for (const auto& [g, mult] : f.factors) {
        for (unsigned i = 0; i < mult; ++i) product = product * g;
      }
      it = cache.emplace(s.h.code(), Kummer{s.etale_degrees, product == kummer}).first;
    }
    unsigned sum = 0;
    const unsigned order = class_order(s.hasse_class);
    bool ok = it->second.product_ok && it->second.degrees == s.etale_degrees;
    for (unsigned deg : s.etale_degrees) {
      sum += deg;
      ok = ok && deg == order;
    }
    ok = ok && sum == p - 1 && k.pow(s.j_root, p) == s.j;
    rec.check(ok, [&] { return describe(e) + ": etale decomposition mismatch"; });
  });
}

void run_census(const FieldSpec& spec, const Field& field, unsigned threads, Recorder& rec) {
  SearchOptions options;
  options.trace_shortcut = false;
  options.cross_check = true;
  options.threads = threads;
  RealizabilityReport report;
  try {
    report = census(field, options);
  } catch (const std::logic_error& err) {
    rec.fail(err.what());
    return;
  }
  const std::string where = "F_" + std::to_string(field->q());
  rec.result.cases += report.stats->models - report.stats->singular;
  if (!report.consistent_with_formula) rec.fail(where + ": census disagrees with the realizable-set formula");
  if (report.stats->bridge_failures != 0) rec.fail(where + ": trace and Hasse class disagree");
  if (report.stats->ordinariness_failures != 0) rec.fail(where + ": ordinariness routes disagree");
  const bool expect_complete = spec.p <= 17 || spec.n >= 2;
  if (report.complete != expect_complete) rec.fail(where + ": unexpected census verdict");
  if (!report.entries.front().witness) rec.fail(where + ": trivial class not realized");
  if (!report.missing.empty()) {
    const std::vector<std::uint32_t> r = realizable_set(spec.p, field->q());
    bool closed = true;
    for (std::uint32_t a : r) {
      for (std::uint32_t b : r) {
        if (!std::binary_search(r.begin(), r.end(), static_cast<std::uint32_t>(std::uint64_t{a} * b % spec.p))) {
          closed = false;
        }
      }
    }
    if (closed) rec.fail(where + ": realizable set is multiplicatively closed");
  }
}

std::uint64_t field_order(const FieldSpec& f) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f.n && q <= (1ull << 40); ++i) q *= f.p;
  return q;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::kClassification, Suite::kBridge, Suite::kTwists, Suite::kClosedForms,
          Suite::kNorm,           Suite::kEtale,  Suite::kCensus};
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kClassification: return "classification";
    case Suite::kBridge: return "bridge";
    case Suite::kTwists: return "twists";
    case Suite::kClosedForms: return "closed-forms";
    case Suite::kNorm: return "norm";
    case Suite::kEtale: return "etale";
    case Suite::kCensus: return "census";
  }
  return "unknown";
}

std::string_view suite_property(Suite suite) {
  switch (suite) {
    case Suite::kClassification:
      return "twisted forms of mu_p <-> F_q^x/F_q^x(p-1) has p-1 classes; phi(x) = x^((q-1)/(p-1)) is an isomorphism onto F_p^x";
    case Suite::kBridge:
      return "beta^2 <= 4q, strict when ordinary; A_p != 0 iff p does not divide beta; beta = phi([A_p]) mod p for ordinary curves";
    case Suite::kTwists:
      return "Hasse class of a twist E^D is [h D^((p-1)/k)] for k = 2, 4, 6; j is twist invariant";
    case Suite::kClosedForms:
      return "A_p = 2a (p = 5), 3b (p = 7), 9ab (p = 11) on y^2 = x^3 + ax + b";
    case Suite::kNorm:
      return "A_q = A_p^((q-1)/(p-1)) and A_q = 1 - #E(F_q) mod p";
    case Suite::kEtale:
      return "E[p] = Spec(k + M + L): y^(p-1) - h splits into factors of degree ord[h], summing to p-1";
    case Suite::kCensus:
      return "realized Hasse classes = { beta mod p : beta^2 < 4q, p does not divide beta }; complete iff p <= 17 or n >= 2";
  }
  return "";
}

std::vector<FieldSpec> default_fields(Suite suite) {
  switch (suite) {
    case Suite::kClassification:
      return {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}, {7, 2}};
    case Suite::kBridge:
      return {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {7, 2}};
    case Suite::kTwists: return {{5, 1}, {13, 1}};
    case Suite::kClosedForms: return {{5, 1}, {7, 1}, {11, 1}};
    case Suite::kNorm: return {{3, 2}, {5, 2}};
    case Suite::kEtale: return {{5, 1}, {7, 1}};
    case Suite::kCensus: return {{3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}};
  }
  return {};
}

std::string guard_violation(Suite suite, const FieldSpec& f) {
  if (!is_prime(f.p) || f.p == 2) return "p = " + std::to_string(f.p) + " is not an odd prime";
  if (f.n == 0) return "n must be at least 1";
  const std::uint64_t q = field_order(f);
  if (q > (1ull << 20)) return "q = p^n exceeds 2^20";
  const std::uint64_t models = f.p == 3 ? q * q * q : q * q;
  const std::string where = "F_" + std::to_string(q);
  switch (suite) {
    case Suite::kClassification:
      if (std::uint64_t{f.p} * f.p > (1ull << 24)) return where + ": too many class pairs";
      break;
    case Suite::kBridge:
    case Suite::kCensus:
      if (models * q > (1ull << 31)) return where + ": sweep exceeds the desk-scale budget";
      break;
    case Suite::kTwists:
      if (models * q > (1ull << 24)) return where + ": twist sweep exceeds the desk-scale budget";
      break;
    case Suite::kClosedForms:
      if (f.p != 5 && f.p != 7 && f.p != 11) return "closed forms are tabulated for p = 5, 7, 11 only";
      if (models > (1ull << 24)) return where + ": sweep exceeds the desk-scale budget";
      break;
    case Suite::kNorm:
      if (q > 64) return where + ": A_q sweeps are limited to q <= 64";
      break;
    case Suite::kEtale:
      if (models > (1ull << 22)) return where + ": sweep exceeds the desk-scale budget";
      break;
  }
  return {};
}

SuiteResult run_suite(Suite suite, const std::vector<FieldSpec>& fields, unsigned threads) {
  for (const FieldSpec& f : fields) {
    if (std::string why = guard_violation(suite, f); !why.empty()) throw std::invalid_argument(why);
  }
  SuiteResult result;
  result.suite = suite;
  result.fields = fields;
  Recorder rec{result};
  for (const FieldSpec& spec : fields) {
    const Field field = make_field(spec.p, spec.n);
    switch (suite) {
      case Suite::kClassification: run_classification(field, rec); break;
      case Suite::kBridge: run_bridge(field, rec); break;
      case Suite::kTwists: run_twists(field, rec); break;
      case Suite::kClosedForms: run_closed_forms(field, rec); break;
      case Suite::kNorm: run_norm(field, rec); break;
      case Suite::kEtale: run_etale(field, rec); break;
      case Suite::kCensus: run_census(spec, field, threads, rec); break;
    }
  }
  return result;
}

}  // namespace hasse_forms::verify
