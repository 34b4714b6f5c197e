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

// Factor maps between zoo systems and the preservation checks for
// F-equicontinuity under open factors.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "furdyn/classify.hpp"
#include "furdyn/space.hpp"

namespace furdyn {

enum class Openness { Open, SemiOpen, OpenAtPoints, Unknown };
std::string to_string(Openness o);

struct FactorMap {
  std::string spec;
  MetricSystem source;
  MetricSystem target;
  std::function<Point(const Point&)> point_map;
  Openness openness = Openness::Unknown;
  /// Only for OpenAtPoints.
  std::vector<Point> open_points;
  std::string note;
};

enum class Coordinate { First, Second };

FactorMap projection_factor(const MetricSystem& prod, Coordinate which);
/// y_n = table[x_n x_{n+1} ... x_{n+2r}] with x_n as the most significant bit.
FactorMap sliding_block_factor(const std::vector<bool>& table, unsigned radius,
                               const MetricSystem& source = make_system("shift"));
/// proj1(<prodspec>) | proj2(<prodspec>) | sbc(r=<n>,table=<bits>[,source=<spec>])
FactorMap make_factor(std::string_view spec);

/// d_target(S(pi p), pi(T p)).
double commutation_defect(const FactorMap& fm, const Point& p);

/// Pointwise preservation at sampled points and the global implication.
/// Errors unless the openness of the map is known by construction.
Verdict preservation_check(const FactorMap& fm, const FamilyDescriptor& f, const ClassifyConfig& cfg);

}  // namespace furdyn
