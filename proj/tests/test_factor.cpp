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

#include <bit>
#include <cstdint>

#include "furdyn/error.hpp"
#include "furdyn/factor.hpp"

using namespace furdyn;
using F = FamilyDescriptor;

namespace {

ClassifyConfig small() {
  ClassifyConfig c;
  c.horizon = 2048;
  c.samples = 16;
  c.point_probes = 2;
  c.open_set_probes = 8;
  c.seed = 5;
  c.eps_grid = {0.1};
  return c;
}

}  // namespace

TEST_CASE("projections commute with the dynamics") {
  const MetricSystem prod = make_system("prod(rot(sqrt2-1),doubling)");
  const FactorMap p1 = projection_factor(prod, Coordinate::First);
  const FactorMap p2 = projection_factor(prod, Coordinate::Second);
  CHECK(p1.openness == Openness::Open);
  CHECK(p1.spec == "proj1(" + prod.spec + ")");
  for (const Point& x : sample_points(prod, 8, 3)) {
    CHECK(commutation_defect(p1, x) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(commutation_defect(p2, x) == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(projection_factor(make_system("doubling"), Coordinate::First), Error);
}

TEST_CASE("sliding block codes") {
  const Point tm = Point::symbolic(Sequence(thue_morse_rule()));

  const FactorMap id = make_factor("sbc(r=1,table=00001111)");
  CHECK(id.openness == Openness::Open);
  const Point same = id.point_map(tm);
  for (std::uint64_t n = 0; n < 1000; ++n) CHECK(same.sequence().at(n) == tm.sequence().at(n));

  const FactorMap cst = make_factor("sbc(r=0,table=11)");
  CHECK(cst.openness == Openness::Open);
  for (std::uint64_t n = 0; n < 100; ++n) CHECK(cst.point_map(tm).sequence().at(n));

  // x_n xor x_{n+1} of Thue-Morse is the period-doubling sequence.
  const FactorMap x = make_factor("sbc(r=1,table=00111100,source=thue_morse)");
  CHECK(x.openness == Openness::Unknown);
  const Point img = x.point_map(tm);
  std::size_t bad = 0;
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const bool pd = ((1 + std::countr_zero(n + 1)) & 1) != 0;
    if (img.sequence().at(n) != pd) ++bad;
  }
  CHECK(bad == 0);
  for (const Point& p : sample_points(x.source, 4, 9)) CHECK(commutation_defect(x, p) == 0.0);
}

TEST_CASE("preservation") {
  const ClassifyConfig cfg = small();
  const Verdict rr = preservation_check(make_factor("proj1(prod(rot(golden),rot(sqrt2-1)))"), F::syndetic(), cfg);
  CHECK(rr.holds());
  CHECK_FALSE(rr.witness.contains("status"));

  const Verdict na = preservation_check(make_factor("proj2(prod(rot(sqrt2-1),doubling))"), F::cofinite(), cfg);
  CHECK(na.holds());
  CHECK(na.witness["status"] == "not_applicable");

  try {
    preservation_check(make_factor("sbc(r=1,table=00111100,source=thue_morse)"), F::thick(), cfg);
    FAIL("expected a hypothesis error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Hypothesis);
  }
}

TEST_CASE("factor grammar") {
  for (const char* bad : {"proj3(prod(doubling,doubling))", "sbc(r=1)", "sbc(table=01)", "sbc(r=x,table=01)",
                          "sbc(r=1,table=0120)", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(make_factor(bad), Error);
  }
  CHECK_THROWS_AS(make_factor("sbc(r=1,table=0101)"), Error);
  CHECK_THROWS_AS(make_factor("sbc(r=1,table=00001111,source=doubling)"), Error);
  try {
    make_factor("proj3(x)");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("grammar:") != std::string::npos);
  }
}
