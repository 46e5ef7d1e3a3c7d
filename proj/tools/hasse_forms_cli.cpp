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

// hasse-forms: command-line front end.
//
// Exit codes: 0 computed answer (including "not realizable"), 1 verification
// failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hasse_forms/curve.hpp"
#include "hasse_forms/error.hpp"
#include "hasse_forms/forms.hpp"
#include "hasse_forms/gf.hpp"
#include "hasse_forms/poly.hpp"
#include "hasse_forms/report.hpp"
#include "hasse_forms/search.hpp"
#include "hasse_forms/verify.hpp"

namespace hf = hasse_forms;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json_mode = false;
  std::string out_path;
};

unsigned worker_threads() {
  const char* env = std::getenv("HASSE_FORMS_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1u, std::thread::hardware_concurrency());
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0 || v > 1024) throw UsageError("HASSE_FORMS_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18) {
    throw UsageError("invalid " + what + ": '" + text + "'");
  }
  return std::stoull(text);
}

/// Decimal residue for prime fields, "c0,c1,..." for extensions.
hf::FieldElement parse_element(const hf::FieldCtx& field, const std::string& text, const std::string& flag) {
  std::vector<std::uint32_t> coeffs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    bool negative = !part.empty() && part.front() == '-';
    const std::string digits = negative ? part.substr(1) : part;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18) {
      throw UsageError("invalid field element for " + flag + ": '" + text + "'");
    }
    std::int64_t v = static_cast<std::int64_t>(std::stoull(digits) % field.p());
    if (negative) v = (field.p() - v) % field.p();
    coeffs.push_back(static_cast<std::uint32_t>(v));
  }
  if (coeffs.empty() || coeffs.size() > field.n() || text.back() == ',') {
    throw UsageError("invalid field element for " + flag + ": '" + text + "' (expected " +
                     (field.n() == 1 ? std::string("a residue") : std::to_string(field.n()) + " coefficients") + ")");
  }
  return field.from_coeffs(coeffs);
}

/// "3..23", "5,7,11" or "5". With primes_only, ranges keep primes and listed
/// values must be prime.
std::vector<std::uint32_t> parse_int_set(const std::string& text, const std::string& flag, bool primes_only) {
  std::vector<std::uint32_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint64_t lo = parse_uint(text.substr(0, dots), flag);
    const std::uint64_t hi = parse_uint(text.substr(dots + 2), flag);
    if (lo > hi || hi > (1u << 20)) throw UsageError("invalid range for " + flag + ": '" + text + "'");
    for (std::uint64_t v = lo; v <= hi; ++v) {
      if (!primes_only || (hf::is_prime(v) && v != 2)) out.push_back(static_cast<std::uint32_t>(v));
    }
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const std::uint64_t v = parse_uint(part, flag);
      if (v > (1u << 20)) throw UsageError("value out of range for " + flag + ": " + part);
      if (primes_only && (!hf::is_prime(v) || v == 2)) throw UsageError(flag + " value " + part + " is not an odd prime");
      out.push_back(static_cast<std::uint32_t>(v));
    }
  }
  if (out.empty()) throw UsageError("empty set for " + flag + ": '" + text + "'");
  return out;
}

hf::Field field_from_flags(std::uint64_t p, std::uint64_t n) {
  try {
    return hf::make_field(p, n);
  } catch (const hf::Error& e) {
    throw UsageError(e.what());
  }
}

std::string element_text(const hf::FieldCtx& k, hf::FieldElement x) { return hf::to_string(k, x); }

std::string field_header(const hf::FieldCtx& k) {
  std::string out = "field      F_" + std::to_string(k.q()) + " (p = " + std::to_string(k.p()) +
                    ", n = " + std::to_string(k.n()) + ")";
  if (k.n() > 1) {
    std::vector<hf::FieldElement> coeffs;
    hf::Field prime = hf::make_field(k.p(), 1);
    for (std::uint32_t c : k.modulus()) coeffs.push_back(prime->from_int(c));
    coeffs.push_back(prime->one());
    out += "\nmodulus    " + hf::to_string(hf::Polynomial(prime, coeffs), "t");
  }
  return out;
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

void emit(const Output& out, const hf::report::Envelope& env, const std::string& human) {
  const std::string text = out.json_mode ? hf::report::serialize(env) : human;
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + out.out_path);
  file << text;
}

struct CurveFlags {
  std::uint64_t p = 0;
  std::uint64_t n = 1;
  std::string a2 = "0";
  std::string a4 = "0";
  std::string a6 = "0";
};

hf::WeierstrassCurve curve_from_flags(const hf::Field& field, const CurveFlags& f) {
  const hf::FieldElement a2 = parse_element(*field, f.a2, "--a2");
  const hf::FieldElement a4 = parse_element(*field, f.a4, "--a4");
  const hf::FieldElement a6 = parse_element(*field, f.a6, "--a6");
  return hf::WeierstrassCurve(field, a2, a4, a6);  // kSingularModel / kUnsupportedModel map to exit 2
}

json curve_params(const CurveFlags& f) {
  return {{"p", f.p}, {"n", f.n}, {"a2", f.a2}, {"a4", f.a4}, {"a6", f.a6}};
}

int cmd_hasse(const CurveFlags& flags, hf::report::Envelope& env, std::string& text) {
  const hf::Field field = field_from_flags(flags.p, flags.n);
  const hf::FieldCtx& k = *field;
  const hf::WeierstrassCurve e = curve_from_flags(field, flags);
  const hf::FrobeniusData frob = hf::point_count(e);
  const hf::FieldElement ap = hf::hasse_invariant(e);
  std::optional<hf::FieldElement> aq;
  if (k.q() <= hf::kMaxFieldLevelHasseOrder) aq = hf::hasse_invariant(e, hf::HasseLevel::kField);

  env.params = curve_params(flags);
  json result = {{"field", hf::report::field_json(k)},
                 {"curve", hf::report::curve_json(e)},
                 {"discriminant", hf::report::element_json(k, hf::discriminant(e))},
                 {"j", hf::report::element_json(k, hf::j_invariant(e))},
                 {"frobenius", hf::report::frobenius_json(frob)},
                 {"a_p", hf::report::element_json(k, ap)},
                 {"a_q", aq ? hf::report::element_json(k, *aq) : json(nullptr)},
                 {"ordinary", !ap.is_zero()}};
  std::ostringstream human;
  human << field_header(k) << "\n"
        << "curve      y^2 = " << hf::to_string(e.rhs()) << "\n"
        << "delta      " << element_text(k, hf::discriminant(e)) << "\n"
        << "j          " << element_text(k, hf::j_invariant(e)) << "\n"
        << "#E         " << frob.count << "\n"
        << "beta       " << frob.beta << "\n"
        << "type       " << (ap.is_zero() ? "supersingular" : "ordinary") << "\n"
        << "A_p        " << element_text(k, ap) << "\n"
        << "A_q        " << (aq ? element_text(k, *aq) : std::string("(not computed for q > 4096)")) << "\n";
  if (!ap.is_zero()) {
    const hf::UnitClass cls = hf::unit_class_of(field, ap);
    result["hasse_class"] = hf::report::class_json(cls);
    human << "class exp  " << cls.exp() << "\n"
          << "phi        " << hf::phi_residue(cls) << "\n";
  } else {
    result["hasse_class"] = nullptr;
  }
  env.result = result;
  text = human.str();
  return kExitOk;
}

int cmd_realizable(std::uint64_t p, std::uint64_t n, hf::report::Envelope& env, std::string& text) {
  if (!hf::is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw UsageError("n must be at least 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (q > (1ull << 40) / p) throw UsageError("p^n is too large");
    q *= p;
  }
  const auto prime = static_cast<std::uint32_t>(p);
  const std::vector<std::uint32_t> r = hf::realizable_set(prime, q);
  std::vector<std::uint32_t> missing;
  for (std::uint32_t h = 1; h < std::max<std::uint32_t>(prime, 2); ++h) {
    if (!std::binary_search(r.begin(), r.end(), h)) missing.push_back(h);
  }
  const bool complete = missing.empty();
  env.params = {{"p", p}, {"n", n}};
  env.result = {{"field", {{"p", p}, {"n", n}, {"q", q}}},
                {"twisted_forms", hf::twisted_form_count(prime)},
                {"realizable", r},
                {"missing", missing},
                {"verdict", complete ? "Complete" : "ProperSubset"}};
  std::ostringstream human;
  human << "field      F_" << q << " (p = " << p << ", n = " << n << ")\n"
        << "forms      " << hf::twisted_form_count(prime) << "\n"
        << "realizable " << join(r) << "\n"
        << "missing    " << join(missing) << "\n"
        << "verdict    " << (complete ? "Complete" : "ProperSubset") << "\n";
  text = human.str();
  return kExitOk;
}

int cmd_search(std::uint64_t p, std::uint64_t n, std::int64_t h, bool no_shortcut, hf::report::Envelope& env,
               std::string& text) {
  const hf::Field field = field_from_flags(p, n);
  if (h <= 0 || static_cast<std::uint64_t>(h) >= p) {
    throw UsageError("-h must be in 1.." + std::to_string(p - 1) + ", got " + std::to_string(h));
  }
  const auto residue = static_cast<std::uint32_t>(h);
  hf::SearchOptions options;
  options.trace_shortcut = !no_shortcut;
  options.threads = worker_threads();
  const std::optional<hf::Witness> w = hf::find_curve_with_class(field, residue, options);
  const std::vector<std::int64_t> traces = hf::admissible_traces(field->q(), residue);

  env.params = {{"p", p}, {"n", n}, {"h", h}, {"trace_shortcut", !no_shortcut}};
  json result = {{"field", hf::report::field_json(*field)},
                 {"residue", residue},
                 {"admissible_traces", traces},
                 {"realizable", w.has_value()}};
  std::ostringstream human;
  human << field_header(*field) << "\n"
        << "target     " << residue << "\n";
  if (w) {
    result["curve"] = hf::report::curve_json(w->curve);
    result["frobenius"] = hf::report::frobenius_json(w->frobenius);
    result["hasse_class"] = hf::report::class_json(w->hasse_class);
    human << "witness    y^2 = " << hf::to_string(w->curve.rhs()) << "\n"
          << "#E         " << w->frobenius.count << "\n"
          << "beta       " << w->frobenius.beta << "\n"
          << "A_p class  exp " << w->hasse_class.exp() << ", phi " << hf::phi_residue(w->hasse_class) << "\n";
  } else {
    human << "result     NotRealizable\n";
  }
  env.result = result;
  text = human.str();
  return kExitOk;
}

int cmd_census(std::uint64_t p, std::uint64_t n, bool cross_check, hf::report::Envelope& env, std::string& text) {
  const hf::Field field = field_from_flags(p, n);
  hf::SearchOptions options;
  options.cross_check = cross_check;
  options.trace_shortcut = !cross_check;
  options.threads = worker_threads();
  const hf::RealizabilityReport report = hf::census(field, options);
  env.params = {{"p", p}, {"n", n}, {"cross_check", cross_check}};
  env.result = hf::report::census_json(report);
  env.result["field"] = hf::report::field_json(*field);

  std::ostringstream human;
  human << field_header(*field) << "\n";
  for (const hf::CensusEntry& entry : report.entries) {
    human << "  h = " << entry.residue << ": ";
    if (entry.witness) {
      human << "y^2 = " << hf::to_string(entry.witness->curve.rhs()) << "  (beta = " << entry.witness->frobenius.beta
            << ", #E = " << entry.witness->frobenius.count << ")\n";
    } else {
      human << "absent ("
            << (entry.absence == hf::Absence::kNoAdmissibleTrace ? "no admissible trace" : "exhausted") << ")\n";
    }
  }
  human << "verdict    " << (report.complete ? "Complete" : "ProperSubset " + join(report.missing)) << "\n"
        << "formula    " << (report.consistent_with_formula ? "consistent" : "INCONSISTENT") << "\n";
  bool ok = report.consistent_with_formula;
  if (report.stats) {
    human << "sweep      " << report.stats->models << " models, " << report.stats->singular << " singular, "
          << report.stats->ordinary << " ordinary, " << report.stats->supersingular << " supersingular\n"
          << "failures   bridge " << report.stats->bridge_failures << ", ordinariness "
          << report.stats->ordinariness_failures << "\n";
    ok = ok && report.stats->bridge_failures == 0 && report.stats->ordinariness_failures == 0;
  }
  text = human.str();
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify(const std::string& suite_arg, const std::string& p_arg, const std::string& n_arg, hf::report::Envelope& env,
               std::string& text) {
  std::vector<hf::verify::Suite> suites;
  if (suite_arg == "all") {
    suites = hf::verify::all_suites();
  } else {
    auto s = hf::verify::parse_suite(suite_arg);
    if (!s) throw UsageError("unknown suite '" + suite_arg + "'");
    suites.push_back(*s);
  }
  std::optional<std::vector<hf::verify::FieldSpec>> custom;
  if (!p_arg.empty()) {
    custom.emplace();
    const std::vector<std::uint32_t> ps = parse_int_set(p_arg, "-p", true);
    const std::vector<std::uint32_t> ns = parse_int_set(n_arg.empty() ? "1" : n_arg, "-n", false);
    for (std::uint32_t n : ns) {
      for (std::uint32_t p : ps) custom->push_back({p, n});
    }
  } else if (!n_arg.empty()) {
    throw UsageError("-n needs -p");
  }

  // Validate every requested field before running anything.
  for (hf::verify::Suite s : suites) {
    for (const auto& f : custom ? *custom : hf::verify::default_fields(s)) {
      if (std::string why = hf::verify::guard_violation(s, f); !why.empty()) {
        throw UsageError(std::string(hf::verify::suite_name(s)) + ": " + why);
      }
    }
  }

  const unsigned threads = worker_threads();
  env.params = {{"suite", suite_arg}, {"p", p_arg}, {"n", n_arg}};
  json results = json::array();
  std::ostringstream human;
  bool all_passed = true;
  for (hf::verify::Suite s : suites) {
    const hf::verify::SuiteResult r = hf::verify::run_suite(s, custom ? *custom : hf::verify::default_fields(s), threads);
    all_passed = all_passed && r.passed();
    json fields = json::array();
    std::string field_list;
    for (const auto& f : r.fields) {
      fields.push_back({{"p", f.p}, {"n", f.n}});
      field_list += (field_list.empty() ? "" : " ") + std::to_string(f.p) + "^" + std::to_string(f.n);
    }
    results.push_back({{"suite", hf::verify::suite_name(s)},
                       {"property", hf::verify::suite_property(s)},
                       {"fields", fields},
                       {"cases", r.cases},
                       {"failures", r.failures},
                       {"failure_samples", r.failure_samples},
                       {"passed", r.passed()}});
    human << (r.passed() ? "PASS " : "FAIL ") << hf::verify::suite_name(s) << ": " << r.cases << " cases, "
          << r.failures << " failures  [" << field_list << "]\n"
          << "     " << hf::verify::suite_property(s) << "\n";
    for (const std::string& sample : r.failure_samples) human << "     - " << sample << "\n";
  }
  env.result = {{"suites", results}, {"passed", all_passed}};
  text = human.str();
  return all_passed ? kExitOk : kExitFailed;
}

int cmd_ptorsion(const CurveFlags& flags, hf::report::Envelope& env, std::string& text) {
  const hf::Field field = field_from_flags(flags.p, flags.n);
  const hf::FieldCtx& k = *field;
  const hf::WeierstrassCurve e = curve_from_flags(field, flags);
  const hf::PTorsionDescription d = hf::ptorsion_description(e);
  env.params = curve_params(flags);
  env.result = hf::report::ptorsion_json(e, d);
  env.result["field"] = hf::report::field_json(k);
  std::ostringstream human;
  human << field_header(k) << "\n"
        << "curve      y^2 = " << hf::to_string(e.rhs()) << "\n";
  if (std::holds_alternative<hf::SupersingularM2>(d)) {
    human << "E[p]       M2 (supersingular; ker F = alpha_p)\n";
  } else {
    const auto& s = std::get<hf::OrdinaryScheme>(d);
    std::vector<std::uint32_t> degrees(s.etale_degrees.begin(), s.etale_degrees.end());
    human << "E[p]       Spec(k + M + L), M = k[y]/(y^" << k.p() - 1 << " - h), L = M[x]/(x^" << k.p() << " - j)\n"
          << "h          " << element_text(k, s.h) << " (class exp " << s.hasse_class.exp() << ")\n"
          << "j          " << element_text(k, s.j) << "\n"
          << "etale      degrees " << join(degrees) << "\n"
          << "L          connected, x^" << k.p() << " - j = (x - " << element_text(k, s.j_root) << ")^" << k.p()
          << "\n";
  }
  text = human.str();
  return kExitOk;
}

// CLI11 only accepts single-letter short options; the coefficient flags are
// also spelled -a2/-a4/-a6.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-a2" || a == "-a4" || a == "-a6") a = "-" + a;
    args.push_back(a);
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted forms of mu_p as Frobenius kernels of elliptic curves over finite fields", "hasse-forms"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json_mode, "Emit the machine-readable report envelope");
  app.add_option("--out", out.out_path, "Write the report to this file instead of stdout");

  CurveFlags curve_flags;
  auto add_curve_flags = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("-p", curve_flags.p, "Characteristic")->required();
    sub->add_option("-n", curve_flags.n, "Extension degree")->capture_default_str();
    sub->add_option("--a2", curve_flags.a2, "a2 (p = 3 only); c0,c1,... for extension fields");
    sub->add_option("--a4", curve_flags.a4, "a4; c0,c1,... for extension fields");
    sub->add_option("--a6", curve_flags.a6, "a6; c0,c1,... for extension fields");
    sub->fallthrough();
  };
  CLI::App* hasse = app.add_subcommand("hasse", "Invariants, point count, trace and Hasse invariants of one curve");
  add_curve_flags(hasse);
  CLI::App* ptorsion = app.add_subcommand("ptorsion", "Scheme structure of the p-torsion subgroup");
  add_curve_flags(ptorsion);

  std::uint64_t p = 0;
  std::uint64_t n = 1;
  CLI::App* realizable = app.add_subcommand("realizable", "Realizable Hasse classes from the trace formula");
  realizable->set_help_flag("--help", "Print this help message and exit");
  realizable->add_option("-p", p, "Characteristic")->required();
  realizable->add_option("-n", n, "Extension degree")->capture_default_str();
  realizable->fallthrough();

  std::int64_t h = 0;
  bool no_shortcut = false;
  CLI::App* search = app.add_subcommand("search", "Find a curve whose Hasse class maps to h");
  search->set_help_flag("--help", "Print this help message and exit");
  search->add_option("-p", p, "Characteristic")->required();
  search->add_option("-n", n, "Extension degree")->capture_default_str();
  search->add_option("-h", h, "Target residue in 1..p-1")->required();
  search->add_flag("--no-shortcut", no_shortcut, "Sweep exhaustively even when no trace is admissible");
  search->fallthrough();

  bool cross_check = false;
  CLI::App* census = app.add_subcommand("census", "Witness or absence for every class");
  census->set_help_flag("--help", "Print this help message and exit");
  census->add_option("-p", p, "Characteristic")->required();
  census->add_option("-n", n, "Extension degree")->capture_default_str();
  census->add_flag("--cross-check", cross_check, "Full sweep; recount every curve and compare both trace routes");
  census->fallthrough();

  std::string suite = "all";
  std::string p_range;
  std::string n_range;
  CLI::App* verify = app.add_subcommand("verify", "Run exhaustive property suites");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("--suite", suite, "classification|bridge|twists|closed-forms|norm|etale|census|all")
      ->capture_default_str();
  verify->add_option("-p", p_range, "Primes: 3..23, 5,7,11 or 5");
  verify->add_option("-n", n_range, "Extension degrees: 1..2, 1,2 or 1");
  verify->fallthrough();

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  hf::report::Envelope env;
  std::string human;
  const auto start = std::chrono::steady_clock::now();
  try {
    int code = kExitOk;
    if (*hasse) {
      env.command = "hasse";
      code = cmd_hasse(curve_flags, env, human);
    } else if (*ptorsion) {
      env.command = "ptorsion";
      code = cmd_ptorsion(curve_flags, env, human);
    } else if (*realizable) {
      env.command = "realizable";
      code = cmd_realizable(p, n, env, human);
    } else if (*search) {
      env.command = "search";
      code = cmd_search(p, n, h, no_shortcut, env, human);
    } else if (*census) {
      env.command = "census";
      code = cmd_census(p, n, cross_check, env, human);
    } else if (*verify) {
      env.command = "verify";
      code = cmd_verify(suite, p_range, n_range, env, human);
    }
    env.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    emit(out, env, human);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitFailed;
  }
}
