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

#include "hasse_forms/report.hpp"

#include "hasse_forms/poly.hpp"

namespace hasse_forms::report {

using nlohmann::json;

json element_json(const FieldCtx& field, FieldElement x) {
  const std::vector<std::uint32_t> c = field.coeffs(x);
  if (field.n() == 1) return c[0];
  return c;
}

json field_json(const FieldCtx& field) {
  json out = {{"p", field.p()}, {"n", field.n()}, {"q", field.q()}};
  if (field.n() > 1) {
    std::vector<std::uint32_t> modulus(field.modulus().begin(), field.modulus().end());
    modulus.push_back(1);
    out["modulus"] = modulus;
  }
  return out;
}

json curve_json(const WeierstrassCurve& e) {
  const FieldCtx& k = *e.field();
  return {{"a2", element_json(k, e.a2())},
          {"a4", element_json(k, e.a4())},
          {"a6", element_json(k, e.a6())},
          {"equation", "y^2 = " + to_string(e.rhs())}};
}

json frobenius_json(const FrobeniusData& f) {
  return {{"count", f.count}, {"beta", f.beta}, {"ordinary", f.ordinary}};
}

json class_json(const UnitClass& c) {
  return {{"exp", c.exp()}, {"rep", element_json(*c.field(), c.rep())}, {"phi", phi_residue(c)}};
}

json census_json(const RealizabilityReport& r) {
  json entries = json::array();
  for (const CensusEntry& entry : r.entries) {
    json item = {{"residue", entry.residue}};
    if (entry.witness) {
      item["realizable"] = true;
      item["curve"] = curve_json(entry.witness->curve);
      item["frobenius"] = frobenius_json(entry.witness->frobenius);
      item["hasse_class"] = class_json(entry.witness->hasse_class);
    } else {
      item["realizable"] = false;
      item["reason"] = entry.absence == Absence::kNoAdmissibleTrace ? "no_admissible_trace" : "exhausted";
    }
    entries.push_back(std::move(item));
  }
  json out = {{"field", {{"p", r.p}, {"n", r.n}, {"q", r.q}}},
              {"entries", entries},
              {"realizable", r.realizable},
              {"absent", r.absent},
              {"verdict", r.complete ? "Complete" : "ProperSubset"},
              {"missing", r.missing},
              {"consistent_with_formula", r.consistent_with_formula}};
  if (r.stats) {
    out["sweep"] = {{"models", r.stats->models},
                    {"singular", r.stats->singular},
                    {"ordinary", r.stats->ordinary},
                    {"supersingular", r.stats->supersingular},
                    {"bridge_failures", r.stats->bridge_failures},
                    {"ordinariness_failures", r.stats->ordinariness_failures}};
  }
  return out;
}

json ptorsion_json(const WeierstrassCurve& e, const PTorsionDescription& d) {
  const FieldCtx& k = *e.field();
  json out = {{"curve", curve_json(e)}};
  if (std::holds_alternative<SupersingularM2>(d)) {
    out["kind"] = "supersingular";
    out["scheme"] = "M2";
    out["kernel_of_frobenius"] = "alpha_p";
    return out;
  }
  const auto& s = std::get<OrdinaryScheme>(d);
  out["kind"] = "ordinary";
  out["h"] = element_json(k, s.h);
  out["hasse_class"] = class_json(s.hasse_class);
  out["j"] = element_json(k, s.j);
  out["etale_degrees"] = s.etale_degrees;
  out["l_component"] = {{"connected", true}, {"j_root", element_json(k, s.j_root)}};
  return out;
}

json to_json(const Envelope& e) {
  return {{"tool_version", kToolVersion},
          {"command", e.command},
          {"params", e.params},
          {"result", e.result},
          {"timing_ms", e.timing_ms}};
}

std::string serialize(const Envelope& e) { return to_json(e).dump(2) + "\n"; }

}  // namespace hasse_forms::report
