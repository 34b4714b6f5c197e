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

#include <cmath>

#include "furdyn/classify.hpp"
#include "furdyn/error.hpp"

using namespace furdyn;
using F = FamilyDescriptor;

namespace {

ClassifyConfig small() {
  ClassifyConfig c;
  c.horizon = 4096;
  c.samples = 32;
  c.point_probes = 4;
  c.open_set_probes = 16;
  c.seed = 13;
  return c;
}

// Sturmian neighbours need agreement on long prefixes.
ClassifyConfig deep() {
  ClassifyConfig c = small();
  c.delta_min = 1e-20;
  c.eps_grid = {0.1};
  return c;
}

}  // namespace

TEST_CASE("config") {
  ClassifyConfig c;
  const auto d = c.deltas(0.2);
  REQUIRE(d.size() == 8);
  CHECK(d.front() == 0.2);
  CHECK(d.back() == doctest::Approx(0.2 / 128));
  c.delta_min = 0.01;
  CHECK(c.deltas(0.2).back() >= 0.01);
  CHECK(c.to_json()["horizon"] == 16384);
}

TEST_CASE("pointwise F-equicontinuity") {
  const ClassifyConfig cfg = small();
  const MetricSystem rot = make_system("rot(sqrt2-1)");
  for (const auto& f : implemented_families()) {
    const EquiReport r = f_equi_point(rot, Point::from_double(0.37), f, 0.05, cfg);
    CHECK(r.verdict.holds());
    REQUIRE(r.delta_found);
    CHECK(*r.delta_found == 0.05);
  }
  const MetricSystem dbl = make_system("doubling");
  CHECK(f_equi_point(dbl, Point::from_double(0.0), F::cofinite(), 0.1, cfg).verdict.fails());
  const MetricSystem id = make_system("id(interval)");
  CHECK(f_equi_point(id, Point::from_double(0.4), F::infinite_sets(), 0.1, cfg).verdict.holds());
}

TEST_CASE("global F-equicontinuity") {
  const ClassifyConfig cfg = small();
  const MetricSystem rot = make_system("rot(golden)");
  for (const auto& f : {F::thick(), F::upper_density_above(0.3), F::dual_of(F::thickly_syndetic())}) {
    const EquiReport r = f_equicontinuity(rot, f, cfg.eps_grid, cfg);
    CHECK(r.verdict.holds());
    CHECK(r.delta_found.value() > 0);
  }
  CHECK(f_equicontinuity(make_system("doubling"), F::cofinite(), cfg.eps_grid, cfg).verdict.fails());
  CHECK(f_equicontinuity(make_system("id(circle)"), F::cofinite(), cfg.eps_grid, cfg).verdict.holds());
  CHECK_THROWS_AS(f_equicontinuity(rot, F::thick(), {}, cfg), Error);
}

TEST_CASE("Eq_eps^F membership") {
  const ClassifyConfig cfg = small();
  const MetricSystem rot = make_system("rot(sqrt2-1)");
  const EquiReport r = eq_eps_f_member(rot, Point::from_double(0.1), 0.05, F::cofinite(), cfg);
  CHECK(r.verdict.holds());
  CHECK(r.delta_found.value() == doctest::Approx(0.025));
  const MetricSystem dbl = make_system("doubling");
  CHECK(eq_eps_f_member(dbl, Point::from_double(0.1), 0.1, F::cofinite(), cfg).verdict.fails());
  CHECK(eq_eps_f_member(dbl, Point::from_double(0.1), 0.6, F::cofinite(), cfg).verdict.holds());
}

TEST_CASE("F-sensitivity") {
  const ClassifyConfig cfg = small();
  const MetricSystem dbl = make_system("doubling");
  const SensReport cf = f_sensitivity(dbl, F::cofinite(), 0.25, cfg);
  CHECK(cf.verdict.holds());
  CHECK(cf.witness_sets.size() == 16);
  CHECK(f_sensitivity(dbl, F::thick(), 0.25, cfg).verdict.holds());
  const MetricSystem rot = make_system("rot(sqrt2-1)");
  for (const auto& f : implemented_families()) CHECK(f_sensitivity(rot, f, 0.02, cfg).verdict.fails());
}

TEST_CASE("mean notions") {
  const ClassifyConfig cfg = small();
  CHECK(mean_equicontinuity(make_system("rot(golden)"), cfg).verdict.holds());
  CHECK(mean_l_stable(make_system("rot(golden)"), cfg).verdict.holds());
  CHECK(mean_sensitivity(make_system("doubling"), 0.2, cfg).verdict.holds());
  CHECK(mean_sensitivity(make_system("rot(golden)"), 0.2, cfg).verdict.fails());
  CHECK(mean_equicontinuity(make_system("doubling"), cfg).verdict.fails());
  const EquiReport st = mean_equicontinuity(make_system("sturmian(golden)"), deep());
  CHECK(st.verdict.holds());
  CHECK(st.delta_found.value() > 0);
}

TEST_CASE("dichotomy") {
  const ClassifyConfig cfg = small();
  const DichotomyReport a = dichotomy_report(make_system("doubling"), F::thick(), cfg);
  CHECK(a.consistent);
  CHECK(a.branch == "sensitive");
  CHECK(a.almost_equi.verdict.fails());
  const DichotomyReport b = dichotomy_report(make_system("rot(sqrt2-1)"), F::thick(), cfg);
  CHECK(b.consistent);
  CHECK(b.branch == "almost_equicontinuous");
  CHECK(b.sens.verdict.fails());
  const DichotomyReport c = dichotomy_report(make_system("doubling"), F::cofinite(), cfg);
  CHECK(c.branch == "sensitive");
  CHECK(to_json(c)["dual_family"] == "B");

  try {
    dichotomy_report(make_system("id(circle)"), F::thick(), cfg);
    FAIL("expected a hypothesis error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Hypothesis);
  }
  CHECK_THROWS_AS(dichotomy_report(make_system("prod(rot(golden),doubling)"), F::thick(), cfg), Error);
}

TEST_CASE("delta prime") {
  const ClassifyConfig cfg = small();
  const MetricSystem dbl = make_system("doubling");
  CHECK(lemma45_delta_prime(dbl, 0.2, 0.1) == 0.15);
  CHECK(lemma45_delta_prime(dbl, 0.2, 0.0) == 0.2);
  CHECK_THROWS_AS(lemma45_delta_prime(dbl, 0.2, 0.4), Error);
  const Verdict v = lemma45_check(dbl, 0.2, 0.1, cfg);
  CHECK(v.holds());
  CHECK_FALSE(v.witness.contains("status"));
}

TEST_CASE("mean versus k(ud>a)") {
  const ClassifyConfig cfg = small();
  for (const Verdict& v : lemma43_44_check(make_system("rot(sqrt2-1)"), {0.1, 0.5}, cfg)) CHECK(v.holds());
  const auto d = lemma43_44_check(make_system("doubling"), {0.1, 0.5}, cfg);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(d[i].holds());
    CHECK(d[i].witness["status"] == "not_applicable");
  }
  const auto st = lemma43_44_check(make_system("sturmian(golden)"), {0.25}, deep());
  CHECK(st[0].witness["mean_equicontinuity"] == "Holds");
  CHECK_FALSE(st[0].fails());
}

TEST_CASE("T^-1 invariance of Eq_eps^F") {
  const ClassifyConfig cfg = small();
  const Verdict r = lemma31_invariance_check(make_system("rot(sqrt2-1)"), F::syndetic(), 0.05, cfg);
  CHECK(r.holds());
  CHECK(r.witness["premises_holding"] == cfg.point_probes);
  CHECK(lemma31_invariance_check(make_system("doubling"), F::cofinite(), 0.1, cfg).holds());
  CHECK(lemma31_invariance_check(make_system("id(circle)"), F::thick(), 0.1, cfg).holds());
}
