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

#ifndef HASSE_FORMS_REPORT_HPP_
#define HASSE_FORMS_REPORT_HPP_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hasse_forms/curve.hpp"
#include "hasse_forms/forms.hpp"
#include "hasse_forms/search.hpp"

// Machine-readable payloads. nlohmann::json keeps object keys sorted, which
// makes every dump byte-stable for identical inputs.

namespace hasse_forms::report {

inline constexpr const char* kToolVersion = "1.0.0";

/// Residue for prime fields, coefficient list [c0, ..., c_{n-1}] otherwise.
nlohmann::json element_json(const FieldCtx& field, FieldElement x);
/// {p, n, q} plus the monic modulus [m0, ..., m_{n-1}, 1] for extensions.
nlohmann::json field_json(const FieldCtx& field);
nlohmann::json curve_json(const WeierstrassCurve& e);
nlohmann::json frobenius_json(const FrobeniusData& f);
nlohmann::json class_json(const UnitClass& c);
nlohmann::json census_json(const RealizabilityReport& r);
nlohmann::json ptorsion_json(const WeierstrassCurve& e, const PTorsionDescription& d);

struct Envelope {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::int64_t timing_ms = 0;
};

nlohmann::json to_json(const Envelope& e);
/// Indented, key-sorted, newline-terminated.
std::string serialize(const Envelope& e);

}  // namespace hasse_forms::report

#endif  // HASSE_FORMS_REPORT_HPP_
