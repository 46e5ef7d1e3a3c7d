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

#ifndef HASSE_FORMS_VERIFY_HPP_
#define HASSE_FORMS_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Exhaustive property suites run by `hasse-forms verify`.

namespace hasse_forms::verify {

enum class Suite { kClassification, kBridge, kTwists, kClosedForms, kNorm, kEtale, kCensus };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
/// One-line statement of what the suite checks.
std::string_view suite_property(Suite suite);
std::vector<Suite> all_suites();

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct SuiteResult {
  Suite suite = Suite::kClassification;
  std::vector<FieldSpec> fields;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_samples;  // at most kMaxSamples
  bool passed() const { return failures == 0; }
};

inline constexpr std::size_t kMaxSamples = 10;

std::vector<FieldSpec> default_fields(Suite suite);
/// Empty when the field is within the suite's desk-scale guard, otherwise the reason.
std::string guard_violation(Suite suite, const FieldSpec& field);
/// Throws std::invalid_argument when any field violates the suite's guard.
SuiteResult run_suite(Suite suite, const std::vector<FieldSpec>& fields, unsigned threads = 1);

}  // namespace hasse_forms::verify

#endif  // HASSE_FORMS_VERIFY_HPP_
