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

// Empirical verdicts for F-equicontinuity, F-sensitivity, the mean notions
// and the sensitive / almost equicontinuous dichotomy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "furdyn/family.hpp"
#include "furdyn/orbit.hpp"
#include "furdyn/space.hpp"

namespace furdyn {

struct ClassifyConfig {
  std::size_t horizon = 16384;
  /// Random points per ball (structured points come on top).
  std::size_t samples = 64;
  /// delta in {eps, eps/2, ...}: this many entries, or down to delta_min if set.
  std::size_t delta_grid = 8;
  std::optional<double> delta_min;
  /// Balls probed for sensitivity: 4 radii times open_set_probes/4 centers.
  std::size_t open_set_probes = 32;
  /// Centers used for global and point searches.
  std::size_t point_probes = 8;
  std::vector<double> eps_grid{0.2, 0.1, 0.05};
  std::uint64_t seed = 0;
  double mean_margin = 0.02;
  VerdictPolicy policy;

  std::vector<double> deltas(double eps) const;
  nlohmann::json to_json() const;
};

struct EquiReport {
  std::string notion;
  Verdict verdict;
  std::optional<double> delta_found;
  nlohmann::json samples = nlohmann::json::object();
  nlohmann::json config_echo = nlohmann::json::object();
};

struct SensReport {
  std::string notion;
  Verdict verdict;
  nlohmann::json witness_sets = nlohmann::json::array();
};

struct DichotomyReport {
  FamilyDescriptor family = FamilyDescriptor::thick();
  bool dual_invariant = false;
  SensReport sens;
  EquiReport almost_equi;
  bool consistent = false;
  /// sensitive | almost_equicontinuous | undetermined | conflicting
  std::string branch;
};

EquiReport f_equi_point(const MetricSystem& sys, const Point& x, const FamilyDescriptor& f, double eps,
                        const ClassifyConfig& cfg);
EquiReport f_equicontinuity(const MetricSystem& sys, const FamilyDescriptor& f, const std::vector<double>& eps_grid,
                            const ClassifyConfig& cfg);
/// Pairs (y, z) both drawn from B(x, delta).
EquiReport eq_eps_f_member(const MetricSystem& sys, const Point& x, double eps, const FamilyDescriptor& f,
                           const ClassifyConfig& cfg);
SensReport f_sensitivity(const MetricSystem& sys, const FamilyDescriptor& f, double eps, const ClassifyConfig& cfg);

EquiReport mean_equicontinuity(const MetricSystem& sys, const ClassifyConfig& cfg);
EquiReport mean_equi_point(const MetricSystem& sys, const Point& x, const ClassifyConfig& cfg);
SensReport mean_sensitivity(const MetricSystem& sys, double eps, const ClassifyConfig& cfg);
EquiReport mean_l_stable(const MetricSystem& sys, const ClassifyConfig& cfg);

/// Requires a transitive system and a translation-invariant dual family.
DichotomyReport dichotomy_report(const MetricSystem& sys, const FamilyDescriptor& f, const ClassifyConfig& cfg);

/// delta' = delta - a * diam(X); requires 0 <= a < delta / diam(X).
double lemma45_delta_prime(const MetricSystem& sys, double delta, double a);
Verdict lemma45_check(const MetricSystem& sys, double delta, double a, const ClassifyConfig& cfg);
/// Mean equicontinuity versus k(ud>a)-equicontinuity in both directions.
std::vector<Verdict> lemma43_44_check(const MetricSystem& sys, const std::vector<double>& a_grid,
                                      const ClassifyConfig& cfg);
/// A Holds membership of Eq_eps^F at T(x) must not be a Fails at x.
Verdict lemma31_invariance_check(const MetricSystem& sys, const FamilyDescriptor& f, double eps,
                                 const ClassifyConfig& cfg);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const EquiReport& r);
nlohmann::json to_json(const SensReport& r);
nlohmann::json to_json(const DichotomyReport& r);

}  // namespace furdyn
