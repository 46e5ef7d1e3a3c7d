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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hasse_forms/curve.hpp"
#include "hasse_forms/forms.hpp"
#include "hasse_forms/search.hpp"
#include "hasse_forms/verify.hpp"
#include "oracles.hpp"

using namespace hasse_forms;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && elapsed >= limit_s) {
    out.require(false, "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_s) + " s");
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
  std::cout << (out.ok ? "PASS" : "FAIL") << " [" << (id < 10 ? " " : "") << id << "] " << name << " (" << timing;
  if (limit_s > 0) std::cout << ", limit " << limit_s << " s";
  std::cout << ")";
  if (!out.ok) std::cout << ": " << out.detail;
  std::cout << std::endl;
  if (!out.ok) ++failures;
}

std::vector<verify::FieldSpec> fields_of(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& list) {
  std::vector<verify::FieldSpec> out;
  for (auto [p, n] : list) out.push_back({p, n});
  return out;
}

void require_suite(Outcome& out, verify::Suite suite, const std::vector<verify::FieldSpec>& fields) {
  const verify::SuiteResult r = verify::run_suite(suite, fields);
  out.require(r.cases > 0, std::string(verify::suite_name(suite)) + ": no cases");
  out.require(r.passed(), std::string(verify::suite_name(suite)) + ": " + std::to_string(r.failures) +
                              " failures" + (r.failure_samples.empty() ? "" : ", e.g. " + r.failure_samples[0]));
}

std::string render(const std::vector<std::uint32_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<std::uint32_t> complement(std::uint32_t p, const std::vector<std::uint32_t>& set) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t h = 1; h < p; ++h) {
    if (!std::binary_search(set.begin(), set.end(), h)) out.push_back(h);
  }
  return out;
}

std::string cli_report(const std::string& args, const std::string& env) {
  const std::string cmd = env + " " + HASSE_FORMS_CLI + " --json " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) throw std::runtime_error(cmd + " failed");
  return out;
}

// Drops the timing line, the only field allowed to differ between runs.
std::string without_timing(const std::string& report) {
  std::istringstream in(report);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.find("\"timing_ms\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "p-1 classes and phi is a bijective homomorphism for q in {3,5,7,9,11,13,25,27,49}", 1.0,
            [](Outcome& out) {
              for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                       {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}, {7, 2}}) {
                Field k = make_field(p, n);
                const std::string tag = "F_" + std::to_string(k->q());
                const auto classes = enumerate_classes(k);
                out.require(classes.size() == p - 1, tag + ": " + std::to_string(classes.size()) + " classes");
                std::set<std::uint32_t> images;
                for (const UnitClass& c : classes) {
                  const std::uint32_t img = phi_residue(c);
                  out.require(img >= 1 && img < p, tag + ": phi image outside F_p^x");
                  images.insert(img);
                  for (const UnitClass& d : classes) {
                    out.require(phi_residue(class_product(c, d)) == img * phi_residue(d) % p,
                                tag + ": phi is not multiplicative");
                  }
                }
                out.require(images.size() == p - 1, tag + ": phi is not injective");
              }
            });

  criterion(2, "census over F_p is Complete for p in {3,5,7,11,13,17}", 1.0, [](Outcome& out) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
      const RealizabilityReport r = census(make_field(p, 1));
      out.require(r.complete && r.consistent_with_formula, "F_" + std::to_string(p) + " missing " + render(r.missing));
    }
  });

  criterion(3, "F_19 misses exactly {9,10}; F_23 misses the complement of the realizable set", 1.0,
            [](Outcome& out) {
              const RealizabilityReport r19 = census(make_field(19, 1));
              out.require(r19.missing == std::vector<std::uint32_t>{9, 10}, "F_19 missing " + render(r19.missing));
              const RealizabilityReport r23 = census(make_field(23, 1));
              const auto formula = realizable_set(23, 23);
              out.require(r23.missing == complement(23, formula), "F_23 missing " + render(r23.missing));
              // {+-1, ..., +-9 mod 23} directly.
              std::set<std::uint32_t> pm;
              for (std::uint32_t b = 1; b <= 9; ++b) {
                pm.insert(b);
                pm.insert(23 - b);
              }
              out.require(std::vector<std::uint32_t>(pm.begin(), pm.end()) == formula,
                          "realizable_set(23, 23) = " + render(formula));
            });

  criterion(4, "census over F_361 is Complete; full sweep with the trace shortcut disabled on every class", 30.0,
            [](Outcome& out) {
              Field k = make_field(19, 2);
              const RealizabilityReport fast = census(k);
              out.require(fast.complete && fast.consistent_with_formula, "shortcut census not Complete");
              SearchOptions full;
              full.trace_shortcut = false;
              full.cross_check = true;
              const RealizabilityReport slow = census(k, full);
              out.require(slow.complete && slow.consistent_with_formula, "cross-checked census not Complete");
              out.require(slow.stats && slow.stats->models == 361ull * 361ull, "sweep did not cover every model");
              out.require(slow.stats && slow.stats->bridge_failures == 0 && slow.stats->ordinariness_failures == 0,
                          "cross-check mismatches");
              for (std::size_t i = 0; i < fast.entries.size(); ++i) {
                out.require(fast.entries[i].witness && slow.entries[i].witness &&
                                fast.entries[i].witness->curve == slow.entries[i].witness->curve,
                            "shortcut and full sweep disagree on h = " + std::to_string(i + 1));
              }
            });

  criterion(5, "beta = phi([A_p]) mod p on every ordinary curve, q in {5,7,9,11,13,25,49}", 5.0, [](Outcome& out) {
    require_suite(out, verify::Suite::kBridge, fields_of({{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {7, 2}}));
  });

  criterion(6, "A_q = A_p^((q-1)/(p-1)) = 1 - #E mod p on every curve over F_9 and F_25", 5.0,
            [](Outcome& out) { require_suite(out, verify::Suite::kNorm, fields_of({{3, 2}, {5, 2}})); });

  criterion(7, "A_p = 2a, 3b, 9ab for p = 5, 7, 11 on every nonsingular (a, b)", 1.0, [](Outcome& out) {
    require_suite(out, verify::Suite::kClosedForms, fields_of({{5, 1}, {7, 1}, {11, 1}}));
  });

  criterion(8, "twist class law for every admissible (curve, D, kind) over F_5 and F_13", 2.0,
            [](Outcome& out) { require_suite(out, verify::Suite::kTwists, fields_of({{5, 1}, {13, 1}})); });

  criterion(9, "a witness with trivial Hasse class exists over F_p for every p <= 23", 1.0, [](Outcome& out) {
    out.require(realizable_set(2, 2) == std::vector<std::uint32_t>{1}, "p = 2 has more than the trivial class");
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
      Field k = make_field(p, 1);
      const auto w = find_curve_with_class(k, 1);
      out.require(w.has_value(), "no trivial-class witness over F_" + std::to_string(p));
      if (!w) continue;
      out.require(w->hasse_class.is_trivial(), "witness class is not trivial over F_" + std::to_string(p));
      // Recount independently.
      oracle::Field o(p, 1);
      const std::int64_t count = oracle::brute_count(o, o.from_lib(w->curve.a2()), o.from_lib(w->curve.a4()),
                                                     o.from_lib(w->curve.a6()));
      out.require(oracle::mod(static_cast<std::int64_t>(p) + 1 - count, p) == 1,
                  "witness trace is not 1 mod " + std::to_string(p));
    }
  });

  criterion(10, "R(19) contains 3 but not 9 = 3*3", 0.5, [](Outcome& out) {
    const auto r = realizable_set(19, 19);
    out.require(std::binary_search(r.begin(), r.end(), 3u), "3 not in R(19)");
    out.require(!std::binary_search(r.begin(), r.end(), 9u), "9 in R(19)");
    Field k = make_field(19, 1);
    out.require(find_curve_with_class(k, 3).has_value(), "no witness for 3 over F_19");
    out.require(!find_curve_with_class(k, 9).has_value(), "witness for 9 over F_19");
  });

  criterion(11, "etale degrees sum to p-1 over F_5 and F_7; fixtures h = 2 -> {4}, h = 1 -> {1,1,1,1}", 2.0,
            [](Outcome& out) {
              require_suite(out, verify::Suite::kEtale, fields_of({{5, 1}, {7, 1}}));
              Field k = make_field(5, 1);
              const auto two = ptorsion_description(WeierstrassCurve::short_form(k, 1, 1));
              out.require(std::holds_alternative<OrdinaryScheme>(two) &&
                              std::get<OrdinaryScheme>(two).h == k->from_int(2) &&
                              std::get<OrdinaryScheme>(two).etale_degrees == std::vector<unsigned>{4},
                          "y^2 = x^3 + x + 1 fixture");
              const auto one = ptorsion_description(WeierstrassCurve::short_form(k, 3, 0));
              out.require(std::holds_alternative<OrdinaryScheme>(one) &&
                              std::get<OrdinaryScheme>(one).h == k->one() &&
                              std::get<OrdinaryScheme>(one).etale_degrees == std::vector<unsigned>{1, 1, 1, 1},
                          "y^2 = x^3 + 3x fixture");
            });

  criterion(12, "A_p != 0 agrees with p not dividing beta on every curve, q <= 49", 5.0, [](Outcome& out) {
    for (std::uint64_t q = 3; q <= 49; ++q) {
      const auto primes = prime_factors(q);
      if (primes.size() != 1 || primes[0] == 2) continue;
      const std::uint32_t p = static_cast<std::uint32_t>(primes[0]);
      std::uint32_t n = 0;
      for (std::uint64_t v = q; v > 1; v /= p) ++n;
      Field k = make_field(p, n);
      const PointCounter counter(k);
      const std::uint32_t a2_count = p == 3 ? k->q() : 1;
      for (std::uint32_t a2 = 0; a2 < a2_count; ++a2) {
        for (std::uint32_t a4 = 0; a4 < k->q(); ++a4) {
          for (std::uint32_t a6 = 0; a6 < k->q(); ++a6) {
            auto e = WeierstrassCurve::make(k, k->from_code(a2), k->from_code(a4), k->from_code(a6));
            if (!e) continue;
            const FrobeniusData f = counter.count(*e);
            out.require(is_ordinary(*e) == (f.beta % static_cast<std::int64_t>(p) != 0),
                        "ordinariness disagrees over F_" + std::to_string(q));
          }
        }
      }
    }
  });

  criterion(13, "serial and parallel F_361 census reports are byte-identical", 30.0, [](Outcome& out) {
    const unsigned wide = std::max(8u, std::thread::hardware_concurrency());
    for (const char* args : {"census -p 19 -n 2", "census -p 19 -n 2 --cross-check"}) {
      const std::string serial = cli_report(args, "HASSE_FORMS_THREADS=1");
      const std::string parallel = cli_report(args, "HASSE_FORMS_THREADS=" + std::to_string(wide));
      out.require(!serial.empty() && without_timing(serial) == without_timing(parallel),
                  std::string(args) + ": reports differ");
      out.require(nlohmann::json::parse(serial)["result"]["verdict"] == "Complete", std::string(args) + ": verdict");
    }
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
