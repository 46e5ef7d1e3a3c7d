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

#ifndef HASSE_FORMS_SEARCH_HPP_
#define HASSE_FORMS_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "hasse_forms/curve.hpp"
#include "hasse_forms/forms.hpp"
#include "hasse_forms/gf.hpp"

namespace hasse_forms {

/// { beta in Z : beta^2 < 4q, beta = h mod p }, ascending; p is the
/// characteristic of q.
std::vector<std::int64_t> admissible_traces(std::uint64_t q, std::uint32_t h);

struct SearchOptions {
  /// Answer "not realizable" straight away when no admissible trace exists.
  bool trace_shortcut = true;
  /// Sweep every model and check both routes to the trace (point count and
  /// Hasse invariant) on each; implies a full sweep.
  bool cross_check = false;
  /// Worker count; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

struct Witness {
  WeierstrassCurve curve;
  FrobeniusData frobenius;
  UnitClass hasse_class;
};

enum class Absence {
  kNoAdmissibleTrace,  // decided by the trace shortcut
  kExhausted,          // every model was examined
};

struct CensusEntry {
  std::uint32_t residue = 0;  // h in F_p^x
  std::optional<Witness> witness;
  std::optional<Absence> absence;
};

/// Totals from a cross-checked sweep. Independent of the thread count.
struct SweepStats {
  std::uint64_t models = 0;
  std::uint64_t singular = 0;
  std::uint64_t ordinary = 0;
  std::uint64_t supersingular = 0;
  std::uint64_t bridge_failures = 0;      // beta mod p != phi([A_p])
  std::uint64_t ordinariness_failures = 0;  // A_p != 0 disagrees with p not dividing beta
  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

struct RealizabilityReport {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<CensusEntry> entries;  // h = 1, ..., p - 1
  std::uint32_t realizable = 0;
  std::uint32_t absent = 0;
  bool complete = false;                 // no absent entries
  std::vector<std::uint32_t> missing;    // absent residues
  bool consistent_with_formula = false;  // missing == F_p^x minus realizable_set(p, q)
  std::optional<SweepStats> stats;       // present for cross-checked runs
};

/// First ordinary curve in canonical (a2, a4, a6) order with phi([A_p]) = h,
/// or nullopt when there is none. Throws kFieldTooLarge beyond 2^20.
std::optional<Witness> find_curve_with_class(const Field& field, std::uint32_t h, const SearchOptions& options = {});

/// Realizability census over every h in F_p^x. Witnesses are re-counted from
/// scratch before insertion; a witness whose trace disagrees with its class
/// throws std::logic_error.
RealizabilityReport census(const Field& field, const SearchOptions& options = {});

/// Number of curve models in the sweep: q^3 for p = 3, q^2 otherwise.
std::uint64_t model_count(const FieldCtx& field);

}  // namespace hasse_forms

#endif  // HASSE_FORMS_SEARCH_HPP_
