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

// Report documents with fixed-digit floats so reruns are byte-identical.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace furdyn {

/// Every float rounded to 12 significant digits; NaN/inf become null.
nlohmann::json canonicalize(const nlohmann::json& j);
std::string dump_canonical(const nlohmann::json& j);

struct ReportHeader {
  std::string system;
  std::string family;
  std::string notion;
  double epsilon = 0;
  std::uint64_t seed = 0;
  std::size_t horizon = 0;
};

/// {notion, verdict, witness, horizon, seed, config, system, family, epsilon}
nlohmann::json make_report(const ReportHeader& h, const std::string& verdict, const nlohmann::json& witness,
                           const nlohmann::json& config);
/// <system>__<family>__<notion>__<seed>.json
std::string report_filename(const ReportHeader& h);

}  // namespace furdyn
