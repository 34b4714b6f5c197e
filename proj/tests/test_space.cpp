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
#include <string>

#include "furdyn/error.hpp"
#include "furdyn/orbit.hpp"
#include "furdyn/sequence.hpp"
#include "furdyn/space.hpp"

using namespace furdyn;

namespace {

const char* const kZoo[] = {"rot(sqrt2-1)", "rot(golden)", "doubling", "tent", "shift", "sturmian(golden)",
                            "thue_morse", "prod(rot(sqrt2-1),doubling)", "id(circle)", "id(interval)"};

}  // namespace

TEST_CASE("worked examples") {
  const MetricSystem rot = make_system("rot(sqrt2-1)");
  CHECK(rot.metric(Point::from_double(0.0), Point::from_double(0.9)) == doctest::Approx(0.1).epsilon(1e-12));

  const MetricSystem dbl = make_system("doubling");
  CHECK(dbl.step(Point::from_double(0.3)).value() == doctest::Approx(0.6));
  CHECK(dbl.step(Point::from_double(0.6)).value() == doctest::Approx(0.2));

  const MetricSystem prod = make_system("prod(rot(sqrt2-1),doubling)");
  CHECK(prod.diameter == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("iterate") {
  const MetricSystem rot = make_system("rot(golden)");
  const double alpha = unit_from_fixed(named_irrational("golden"));
  const double two = 2 * alpha - std::floor(2 * alpha);
  CHECK(iterate(rot, Point::from_double(0.0), 2).value() == doctest::Approx(two).epsilon(1e-15));

  const MetricSystem dbl = make_system("doubling");
  const Point p = iterate(dbl, Point::from_double(std::ldexp(1.0, -20)), 20);
  CHECK(p.value() == 0.0);
  CHECK(dbl.metric(p, Point::from_double(0.0)) == 0.0);

  const MetricSystem tm = make_system("thue_morse");
  const Point x = Point::symbolic(Sequence(thue_morse_rule()));
  const Point y = iterate(tm, x, 5);
  CHECK(y.sequence().at(0) == false);
  for (std::uint64_t i = 0; i < 64; ++i) CHECK(y.sequence().at(i) == x.sequence().at(i + 5));
}

TEST_CASE("named irrationals") {
  CHECK(unit_from_fixed(named_irrational("sqrt2-1")) == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-15));
  CHECK(unit_from_fixed(named_irrational("pi-3")) == doctest::Approx(M_PI - 3).epsilon(1e-15));
  CHECK_THROWS_AS(named_irrational("0.5"), Error);
  CHECK_THROWS_AS(make_system("rot(0.41)"), Error);
  CHECK_THROWS_AS(make_system("baker"), Error);
  CHECK_THROWS_AS(make_system("prod(doubling)"), Error);
}

TEST_CASE("metric axioms on sampled triples") {
  for (const char* spec : kZoo) {
    CAPTURE(spec);
    const MetricSystem sys = make_system(spec);
    const auto pts = sample_points(sys, 60, 9);
    for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
      const Point &x = pts[i], &y = pts[i + 1], &z = pts[i + 2];
      const double xy = sys.metric(x, y), yz = sys.metric(y, z), xz = sys.metric(x, z);
      CHECK(xy >= 0);
      CHECK(xy == sys.metric(y, x));
      CHECK(sys.metric(x, x) == 0);
      CHECK(xz <= xy + yz + 1e-12);
      CHECK(xy <= sys.diameter + 1e-12);
      // step is total
      CHECK(sys.metric(sys.step(x), sys.step(x)) == 0);
    }
  }
}

TEST_CASE("sample_ball postconditions") {
  const MetricSystem rot = make_system("rot(sqrt2-1)");
  for (const Point& p : sample_ball(rot, Point::from_double(0.0), 0.01, 1, 64, SampleMode::Adversarial)) {
    CHECK(rot.metric(p, Point::from_double(0.0)) < 0.01);
  }

  const MetricSystem shift = make_system("shift");
  const Point zero = Point::symbolic(Sequence(constant_rule(false)));
  for (const Point& p : sample_ball(shift, zero, std::ldexp(1.0, -10), 2, 64, SampleMode::Adversarial)) {
    CHECK(shift.metric(p, zero) < std::ldexp(1.0, -10));
    for (std::uint64_t i = 0; i < 10; ++i) CHECK(p.sequence().at(i) == false);
  }

  // a third-offset neighbour whose difference orbit settles on {1/3, 2/3}
  const MetricSystem dbl = make_system("doubling");
  const Point x = Point::from_double(0.3);
  bool found = false;
  for (const Point& y : sample_ball(dbl, x, 0.01, 3, 16, SampleMode::Adversarial)) {
    CHECK(dbl.metric(x, y) < 0.01);
    const SeparationTrace t = separation_trace(dbl, x, y, 200);
    bool third = true;
    for (std::size_t n = 100; n < 200; ++n) third = third && std::fabs(t.values[n] - 1.0 / 3) < 1e-9;
    found = found || third;
  }
  CHECK(found);
}

TEST_CASE("sample_ball is deterministic and prefix-stable") {
  const MetricSystem dbl = make_system("doubling");
  const auto a = sample_ball(dbl, Point::from_double(0.7), 0.05, 11, 10, SampleMode::Random);
  const auto b = sample_ball(dbl, Point::from_double(0.7), 0.05, 11, 20, SampleMode::Random);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(dbl.metric(a[i], b[i]) == 0);
}

TEST_CASE("subshift points are exact far out") {
  const MetricSystem st = make_system("sturmian(golden)");
  const auto pts = sample_points(st, 4, 1);
  const Point far = iterate(st, pts[0], std::uint64_t{1} << 40);
  CHECK(far.sequence().at(0) == pts[0].sequence().at(std::uint64_t{1} << 40));
}
