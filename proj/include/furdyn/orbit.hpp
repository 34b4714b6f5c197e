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

#pragma once

// Separation traces d(T^n x, T^n y), hitting sets, Birkhoff means and
// open-set diameter traces.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "furdyn/space.hpp"
#include "furdyn/zset.hpp"

namespace furdyn {

/// values[n + period] == values[n] for every n >= start, beyond the window too.
struct EventualPeriod {
  std::size_t start = 0;
  std::size_t period = 1;
};

struct SeparationTrace {
  std::vector<double> values;
  Point x;
  Point y;
  std::string system_id;
  double diameter = 0;
  std::optional<EventualPeriod> tail;
};

struct DiamTrace {
  std::vector<double> values;
  std::size_t sample_size = 0;
  Point center;
  double radius = 0;
  bool exact = false;
  std::optional<EventualPeriod> tail;
};

struct BirkhoffStats {
  double limsup = 0;
  double liminf = 0;
};

/// Steps both orbits once per index. Pair states that recur prove an
/// eventually periodic trace.
SeparationTrace separation_trace(const MetricSystem& sys, const Point& x, const Point& y, std::size_t n);

/// n with values[n] < eps (<= when closed).
WindowSet hitting_set(const SeparationTrace& trace, double eps, bool closed);

/// max and min of the prefix averages over n in [N/2, N].
BirkhoffStats birkhoff(const SeparationTrace& trace);
inline double birkhoff_limsup(const SeparationTrace& trace) { return birkhoff(trace).limsup; }

/// Lower estimates of diam T^n(B(center, radius)). Circle arcs under rotation,
/// doubling or the identity are propagated exactly.
DiamTrace diam_trace(const MetricSystem& sys, const Point& center, double radius, std::size_t n,
                     std::size_t sample_size, std::uint64_t seed);

/// n with values[n] > eps.
WindowSet sensitivity_set(const DiamTrace& dt, double eps);

/// `n,value` rows.
std::string trace_csv(const std::vector<double>& values);

}  // namespace furdyn
