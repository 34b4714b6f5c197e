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

// Named subsets of Z+ for the densities subcommand.

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "furdyn/zset.hpp"

namespace furdyn {

/// evens | odds | squares | multiples:<p> | block:<a>-<b> | blocks:2^k | rle:<N;b:len,...>
/// blocks:2^k is the union of [2^(2k), 2^(2k+1)). rle carries its own horizon.
WindowSet window_from_spec(std::string_view spec, std::size_t horizon);

/// set, horizon, upper, lower, banach_upper, banach_lower, spread, max_gap, longest_run
nlohmann::json density_row(const std::string& name, const WindowSet& w);

}  // namespace furdyn
