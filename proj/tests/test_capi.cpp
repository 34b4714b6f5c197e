// Copyright 2026 The furdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "furdyn/furdyn.h"

using nlohmann::json;

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  furdyn_string_free(s);
  return out;
}

const char* kConfig = R"({"seed":3,"horizon":1024,"samples":8,"point_probes":2,"open_set_probes":4,"eps_grid":[0.2]})";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(furdyn_version()) == "0.1.0");
  CHECK(std::string(furdyn_status_name(FURDYN_OK)) != std::string(furdyn_status_name(FURDYN_PARSE)));
  furdyn_string_free(nullptr);
}

TEST_CASE("system handles") {
  furdyn_system* s = nullptr;
  REQUIRE(furdyn_system_parse("rot(golden)", &s) == FURDYN_OK);
  CHECK(std::string(furdyn_last_error()).empty());
  char* d = nullptr;
  REQUIRE(furdyn_system_describe(s, &d) == FURDYN_OK);
  CHECK(json::parse(take(d))["spec"] == "rot(golden)");
  double m = -1;
  REQUIRE(furdyn_system_metric_at(s, 0.1, 0.95, &m) == FURDYN_OK);
  CHECK(m == doctest::Approx(0.15));
  furdyn_system_free(s);
  furdyn_system_free(nullptr);

  furdyn_system* bad = nullptr;
  CHECK(furdyn_system_parse("lorenz", &bad) == FURDYN_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(furdyn_last_error()).find("lorenz") != std::string::npos);
  CHECK(furdyn_system_parse(nullptr, &bad) == FURDYN_INVALID_ARGUMENT);
}

TEST_CASE("family handles and duals") {
  furdyn_family* f = nullptr;
  REQUIRE(furdyn_family_parse("thick", &f) == FURDYN_OK);
  furdyn_family* g = nullptr;
  REQUIRE(furdyn_family_dual(f, &g) == FURDYN_OK);
  char* name = nullptr;
  REQUIRE(furdyn_family_to_string(g, &name) == FURDYN_OK);
  CHECK(take(name) == "synd");
  int ti = 0;
  REQUIRE(furdyn_family_is_translation_invariant(g, &ti) == FURDYN_OK);
  CHECK(ti == 1);
  furdyn_family_free(g);
  furdyn_family_free(f);

  furdyn_family* bad = nullptr;
  CHECK(furdyn_family_parse("ud>x", &bad) == FURDYN_PARSE);
  CHECK_FALSE(std::string(furdyn_last_error()).empty());
}

TEST_CASE("window sets and membership") {
  furdyn_windowset* w = nullptr;
  REQUIRE(furdyn_windowset_from_spec("evens", 1000, &w) == FURDYN_OK);
  size_t n = 0;
  REQUIRE(furdyn_windowset_horizon(w, &n) == FURDYN_OK);
  CHECK(n == 1000);

  char* rle = nullptr;
  REQUIRE(furdyn_windowset_to_rle(w, &rle) == FURDYN_OK);
  furdyn_windowset* back = nullptr;
  REQUIRE(furdyn_windowset_from_rle(take(rle).c_str(), &back) == FURDYN_OK);

  char* dens = nullptr;
  REQUIRE(furdyn_windowset_density_json(back, "evens", &dens) == FURDYN_OK);
  CHECK(json::parse(take(dens))["upper"].get<double>() == doctest::Approx(0.5).epsilon(0.01));

  furdyn_family* synd = nullptr;
  REQUIRE(furdyn_family_parse("synd", &synd) == FURDYN_OK);
  char* v = nullptr;
  REQUIRE(furdyn_contains(synd, w, &v) == FURDYN_OK);
  const json j = json::parse(take(v));
  CHECK(j["outcome"] == "Holds");
  CHECK(j.contains("witness"));
  CHECK(j["horizon_used"] == 1000);
  furdyn_family_free(synd);
  furdyn_windowset_free(back);
  furdyn_windowset_free(w);

  furdyn_windowset* bad = nullptr;
  CHECK(furdyn_windowset_from_spec("primes", 100, &bad) == FURDYN_PARSE);
  CHECK(furdyn_windowset_from_rle("10;1:20", &bad) != FURDYN_OK);
}

TEST_CASE("config checks") {
  char* out = nullptr;
  REQUIRE(furdyn_config_check(kConfig, &out) == FURDYN_OK);
  CHECK(json::parse(take(out))["seed"] == 3);
  CHECK(furdyn_config_check(R"({"horizon":2048})", &out) == FURDYN_INVALID_ARGUMENT);
  CHECK(std::string(furdyn_last_error()).find("seed") != std::string::npos);
  CHECK(furdyn_config_check(R"({"seed":1,"horizon":100})", &out) == FURDYN_INVALID_ARGUMENT);
  CHECK(furdyn_config_check(R"({"seed":1,"colour":"red"})", &out) == FURDYN_INVALID_ARGUMENT);
  CHECK(furdyn_config_check("{not json", &out) == FURDYN_PARSE);
}

TEST_CASE("analysis reports") {
  char* r = nullptr;
  REQUIRE(furdyn_analyze("rot(golden)", "cf", "f_equicontinuity", kConfig, &r) == FURDYN_OK);
  const std::string text = take(r);
  const json rep = json::parse(text);
  CHECK(rep["verdict"] == "Holds");
  CHECK(rep["consistent"] == true);
  CHECK(rep["seed"] == 3);

  char* canon = nullptr;
  REQUIRE(furdyn_canonical_json(text.c_str(), &canon) == FURDYN_OK);
  CHECK(take(canon) == text);
  char* fname = nullptr;
  REQUIRE(furdyn_report_filename(text.c_str(), &fname) == FURDYN_OK);
  CHECK(take(fname) == "rot(golden)__cf__f_equicontinuity__3.json");

  REQUIRE(furdyn_dichotomy("doubling", "thick", kConfig, &r) == FURDYN_OK);
  const json d = json::parse(take(r));
  CHECK(d["verdict"] == "sensitive");
  CHECK(d["consistent"] == true);

  CHECK(furdyn_dichotomy("id(circle)", "thick", kConfig, &r) == FURDYN_HYPOTHESIS);
  CHECK(furdyn_analyze("rot(golden)", "cf", "chaos", kConfig, &r) != FURDYN_OK);
  CHECK(furdyn_analyze("rot(golden)", "cf", "f_equicontinuity", R"({"horizon":2048})", &r) ==
        FURDYN_INVALID_ARGUMENT);

  REQUIRE(furdyn_lemmas("doubling", nullptr, kConfig, &r) == FURDYN_OK);
  const json ls = json::parse(take(r));
  REQUIRE(ls.is_array());
  CHECK(ls.size() >= 2);
}

TEST_CASE("selftest") {
  int passed = 0;
  char* r = nullptr;
  REQUIRE(furdyn_selftest(0, &passed, &r) == FURDYN_OK);
  CHECK(passed == 1);
  CHECK(json::parse(take(r))["passed"] == true);
}
