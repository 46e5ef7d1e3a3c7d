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

#include "hasse_forms/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "hasse_forms/error.hpp"

namespace hasse_forms {
namespace {

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();

struct ChunkResult {
  std::vector<std::uint64_t> first_hit;  // indexed by residue
  SweepStats stats;
};

struct Model {
  FieldElement a2, a4, a6;
};

Model decode(const FieldCtx& k, std::uint64_t index) {
  const std::uint64_t q = k.q();
  const auto a6 = static_cast<std::uint32_t>(index % q);
  const auto a4 = static_cast<std::uint32_t>((index / q) % q);
  const auto a2 = static_cast<std::uint32_t>(index / q / q);
  return {{a2, k.q()}, {a4, k.q()}, {a6, k.q()}};
}

std::int64_t residue_mod(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

void sweep_range(const Field& field, const PointCounter* counter, std::uint64_t begin, std::uint64_t end,
                 const std::vector<bool>& targets, bool full, ChunkResult& out) {
  const FieldCtx& k = *field;
  const std::uint32_t p = k.p();
  out.first_hit.assign(p, kNoHit);
  std::size_t remaining = static_cast<std::size_t>(std::count(targets.begin(), targets.end(), true));
  for (std::uint64_t index = begin; index < end; ++index) {
    if (!full && remaining == 0) break;
    const Model m = decode(k, index);
    ++out.stats.models;
    std::optional<WeierstrassCurve> curve = WeierstrassCurve::make(field, m.a2, m.a4, m.a6);
    if (!curve) {
      ++out.stats.singular;
      continue;
    }
    const FieldElement a = hasse_invariant(*curve);
    // phi([A_p]) is the norm of A_p itself: changing the representative by a
    // (p-1)-st power multiplies the norm by y^{q-1} = 1.
    const std::uint32_t h = a.is_zero() ? 0 : k.prime_value(k.norm_to_prime(a));
    if (h == 0) {
      ++out.stats.supersingular;
    } else {
      ++out.stats.ordinary;
    }
    if (counter != nullptr) {
      const FrobeniusData frob = counter->count(*curve);
      if (frob.ordinary != (h != 0)) ++out.stats.ordinariness_failures;
      if (h != 0 && residue_mod(frob.beta, p) != h) ++out.stats.bridge_failures;
    }
    if (h != 0 && targets[h] && out.first_hit[h] == kNoHit) {
      out.first_hit[h] = index;
      --remaining;
    }
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// First hit per residue over [0, total), independent of the thread count: each
// chunk reports its own first hits and the merge keeps the smallest index.
ChunkResult sweep(const Field& field, const PointCounter* counter, const std::vector<bool>& targets, bool full,
                  unsigned threads) {
  const std::uint64_t total = model_count(*field);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), total));
  const std::uint64_t chunk_count = workers == 1 ? 1 : static_cast<std::uint64_t>(workers) * 4;
  const std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;
  std::vector<ChunkResult> results(chunk_count);

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunk_count; c = next++) {
      const std::uint64_t begin = std::min(total, c * chunk_size);
      const std::uint64_t end = std::min(total, begin + chunk_size);
      sweep_range(field, counter, begin, end, targets, full, results[c]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  ChunkResult merged;
  merged.first_hit.assign(field->p(), kNoHit);
  for (const ChunkResult& r : results) {
    for (std::size_t h = 0; h < r.first_hit.size(); ++h) merged.first_hit[h] = std::min(merged.first_hit[h], r.first_hit[h]);
    merged.stats.models += r.stats.models;
    merged.stats.singular += r.stats.singular;
    merged.stats.ordinary += r.stats.ordinary;
    merged.stats.supersingular += r.stats.supersingular;
    merged.stats.bridge_failures += r.stats.bridge_failures;
    merged.stats.ordinariness_failures += r.stats.ordinariness_failures;
  }
  return merged;
}

void check_guard(const FieldCtx& k) {
  if (k.q() > PointCounter::kMaxOrder) {
    throw Error(ErrorKind::kFieldTooLarge, "curve searches are limited to q <= 2^20, got q = " + std::to_string(k.q()));
  }
}

Witness make_witness(const Field& field, const PointCounter& counter, std::uint64_t index, std::uint32_t h) {
  const Model m = decode(*field, index);
  WeierstrassCurve curve(field, m.a2, m.a4, m.a6);
  const FrobeniusData frob = counter.count(curve);
  const UnitClass cls = unit_class_of(field, hasse_invariant(curve));
  if (phi_residue(cls) != h || residue_mod(frob.beta, field->p()) != h) {
    throw std::logic_error("witness for class " + std::to_string(h) + " over F_" + std::to_string(field->q()) +
                           " failed revalidation (beta = " + std::to_string(frob.beta) + ")");
  }
  return Witness{std::move(curve), frob, cls};
}

}  // namespace

std::uint64_t model_count(const FieldCtx& field) {
  const std::uint64_t q = field.q();
  return field.p() == 3 ? q * q * q : q * q;
}

std::vector<std::int64_t> admissible_traces(std::uint64_t q, std::uint32_t h) {
  const std::uint64_t p = prime_factors(q).front();
  std::vector<std::int64_t> out;
  auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(4 * q)));
  while (static_cast<std::uint64_t>(bound * bound) >= 4 * q) --bound;
  while (static_cast<std::uint64_t>((bound + 1) * (bound + 1)) < 4 * q) ++bound;
  for (std::int64_t beta = -bound; beta <= bound; ++beta) {
    if (residue_mod(beta - static_cast<std::int64_t>(h), static_cast<std::uint32_t>(p)) == 0) out.push_back(beta);
  }
  return out;
}

std::optional<Witness> find_curve_with_class(const Field& field, std::uint32_t h, const SearchOptions& options) {
  check_guard(*field);
  if (h == 0 || h >= field->p()) {
    throw std::out_of_range("class residue " + std::to_string(h) + " is not in F_" + std::to_string(field->p()) + "^x");
  }
  if (options.trace_shortcut && admissible_traces(field->q(), h).empty()) return std::nullopt;
  std::vector<bool> targets(field->p(), false);
  targets[h] = true;
  const PointCounter counter(field);
  const ChunkResult result =
      sweep(field, options.cross_check ? &counter : nullptr, targets, options.cross_check, options.threads);
  if (result.first_hit[h] == kNoHit) return std::nullopt;
  return make_witness(field, counter, result.first_hit[h], h);
}

RealizabilityReport census(const Field& field, const SearchOptions& options) {
  check_guard(*field);
  const std::uint32_t p = field->p();
  RealizabilityReport report;
  report.p = p;
  report.n = field->n();
  report.q = field->q();

  std::vector<bool> targets(p, false);
  std::vector<bool> shortcut(p, false);
  for (std::uint32_t h = 1; h < p; ++h) {
    shortcut[h] = options.trace_shortcut && admissible_traces(field->q(), h).empty();
    targets[h] = !shortcut[h];
  }
  const PointCounter counter(field);
  const ChunkResult result =
      sweep(field, options.cross_check ? &counter : nullptr, targets, options.cross_check, options.threads);

  for (std::uint32_t h = 1; h < p; ++h) {
    CensusEntry entry;
    entry.residue = h;
    if (result.first_hit[h] != kNoHit) {
      entry.witness = make_witness(field, counter, result.first_hit[h], h);
      ++report.realizable;
    } else {
      entry.absence = shortcut[h] ? Absence::kNoAdmissibleTrace : Absence::kExhausted;
      report.missing.push_back(h);
      ++report.absent;
    }
    report.entries.push_back(std::move(entry));
  }
  report.complete = report.absent == 0;

  const std::vector<std::uint32_t> formula = realizable_set(p, field->q());
  std::vector<std::uint32_t> expected_missing;
  for (std::uint32_t h = 1; h < p; ++h) {
    if (!std::binary_search(formula.begin(), formula.end(), h)) expected_missing.push_back(h);
  }
  report.consistent_with_formula = expected_missing == report.missing;
  if (options.cross_check) report.stats = result.stats;
  return report;
}

}  // namespace hasse_forms
