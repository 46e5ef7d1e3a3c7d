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

#include <doctest.h>

#include <string>

#include "hasse_forms/report.hpp"

using namespace hasse_forms;
using nlohmann::json;

TEST_CASE("element and field encodings") {
  Field f5 = make_field(5, 1);
  CHECK(report::element_json(*f5, f5->from_int(3)) == json(3));
  CHECK(report::field_json(*f5) == json{{"p", 5}, {"n", 1}, {"q", 5}});
  Field f9 = make_field(3, 2);
  CHECK(report::element_json(*f9, f9->from_code(5)) == json{1, 2});
  CHECK(report::field_json(*f9)["modulus"] == json{1, 0, 1});
}

TEST_CASE("curve, Frobenius and class encodings") {
  Field f5 = make_field(5, 1);
  const auto e = WeierstrassCurve::short_form(f5, 1, 1);
  CHECK(report::curve_json(e) ==
        json{{"a2", 0}, {"a4", 1}, {"a6", 1}, {"equation", "y^2 = x^3 + x + 1"}});
  CHECK(report::frobenius_json(point_count(e)) == json{{"count", 9}, {"beta", -3}, {"ordinary", true}});
  CHECK(report::class_json(unit_class_of(f5, f5->from_int(2))) == json{{"exp", 1}, {"rep", 2}, {"phi", 2}});
}

TEST_CASE("census report") {
  const json r = report::census_json(census(make_field(19, 1)));
  CHECK(r["verdict"] == "ProperSubset");
  CHECK(r["missing"] == json{9, 10});
  CHECK(r["entries"].size() == 18);
  CHECK(r["entries"][8]["reason"] == "no_admissible_trace");
  CHECK_FALSE(r.contains("sweep"));
}

TEST_CASE("envelope serialization is key-sorted and stable") {
  report::Envelope env;
  env.command = "realizable";
  env.params = {{"p", 19}, {"n", 1}};
  env.result = {{"zeta", 1}, {"alpha", 2}};
  env.timing_ms = 12;
  const std::string text = report::serialize(env);
  CHECK(text == report::serialize(env));
  CHECK(text.back() == '\n');
  CHECK(text.find("\"alpha\"") < text.find("\"zeta\""));
  CHECK(text.find("\"command\"") < text.find("\"params\""));
  CHECK(text.find("\"result\"") < text.find("\"timing_ms\""));
  CHECK(text.find("\"timing_ms\"") < text.find("\"tool_version\""));
  CHECK(json::parse(text)["tool_version"] == report::kToolVersion);
}
