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

// Experiment configuration and report assembly shared by the C API and CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "furdyn/classify.hpp"
#include "furdyn/family.hpp"
#include "furdyn/space.hpp"

namespace furdyn {

struct ExperimentConfig {
  std::vector<std::string> systems;
  std::vector<std::string> families;
  std::vector<std::string> notions;
  std::vector<std::string> sets;
  ClassifyConfig classify;
  std::optional<double> epsilon;
  std::string outputs = "furdyn_out";
  std::string format = "both";
  std::vector<double> a_grid{0.1, 0.25, 0.5};
  double lemma45_delta = 0.2;
  double lemma45_a = 0.1;
};

/// Strict: unknown keys, wrong types, a missing seed, horizon < 1024 or an
/// empty grid raise InvalidArgument naming the key.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);

/// Notions accepted by run_analyze.
const std::vector<std::string>& analyze_notions();

/// Each report is make_report() plus "consistent" and "summary".
/// For "preservation" the system string is a factor spec.
nlohmann::json run_analyze(const std::string& system, const std::string& family, const std::string& notion,
                           const ExperimentConfig& cfg);
nlohmann::json run_dichotomy(const std::string& system, const std::string& family, const ExperimentConfig& cfg);
/// lemma45 and lemma43_44 always; lemma31 when family is non-empty.
std::vector<nlohmann::json> run_lemmas(const std::string& system, const std::string& family,
                                       const ExperimentConfig& cfg);

}  // namespace furdyn
