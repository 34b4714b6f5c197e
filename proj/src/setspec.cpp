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

#include "furdyn/setspec.hpp"

#include <bit>
#include <charconv>
#include <cmath>

#include "furdyn/error.hpp"

namespace furdyn {
namespace {

const char* kSetGrammar = "evens | odds | squares | multiples:<p> | block:<a>-<b> | blocks:2^k | rle:<N;b:len,...>";

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::Parse, "bad number in set '" + std::string(whole) + "'; grammar: " + kSetGrammar);
  }
  return v;
}

}  // namespace

WindowSet window_from_spec(std::string_view spec, std::size_t horizon) {
  if (spec.starts_with("rle:")) return from_rle(spec.substr(4));
  if (horizon < 1) fail(ErrorCode::InvalidArgument, "horizon must be >= 1");
  if (spec == "evens") return WindowSet::from_hint(horizon, EventuallyPeriodic{0, {true, false}});
  if (spec == "odds") return WindowSet::from_hint(horizon, EventuallyPeriodic{0, {false, true}});
  if (spec == "squares") {
    return WindowSet::from_predicate(horizon, [](std::size_t n) {
      auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
      while (r * r > n) --r;
      while ((r + 1) * (r + 1) <= n) ++r;
      return r * r == n;
    });
  }
  if (spec == "blocks:2^k") {
    return WindowSet::from_predicate(horizon, [](std::size_t n) {
      if (n == 0) return false;
      const int top = static_cast<int>(std::bit_width(n)) - 1;  // 2^top <= n < 2^(top+1)
      return top % 2 == 0;
    });
  }
  if (spec.starts_with("multiples:")) {
    const std::size_t p = parse_count(spec.substr(10), spec);
    if (p == 0) fail(ErrorCode::InvalidArgument, "multiples:p needs p >= 1");
    std::vector<bool> pattern(p, false);
    pattern[0] = true;
    return WindowSet::from_hint(horizon, EventuallyPeriodic{0, std::move(pattern)});
  }
  if (spec.starts_with("block:")) {
    const std::string_view body = spec.substr(6);
    const std::size_t dash = body.find('-');
    if (dash == std::string_view::npos) fail(ErrorCode::Parse, "block needs a-b; grammar: " + std::string(kSetGrammar));
    const std::size_t a = parse_count(body.substr(0, dash), spec);
    const std::size_t b = parse_count(body.substr(dash + 1), spec);
    if (b < a) fail(ErrorCode::InvalidArgument, "block:a-b needs a <= b");
    return WindowSet::from_predicate(horizon, [&](std::size_t n) { return n >= a && n < b; }, NoneBeyond{b});
  }
  fail(ErrorCode::Parse, "unknown set '" + std::string(spec) + "'; grammar: " + kSetGrammar);
}

nlohmann::json density_row(const std::string& name, const WindowSet& w) {
  const std::size_t n = w.horizon();
  auto mbw = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  mbw = std::max<std::size_t>(1, mbw);
  const DensityProfile p = density_profile(w, mbw);
  const GapRunStats g = gap_run_stats(w, 0);
  return {{"set", name},
          {"horizon", n},
          {"upper", p.upper_est},
          {"lower", p.lower_est},
          {"banach_upper", p.banach_upper_est},
          {"banach_lower", p.banach_lower_est},
          {"spread", p.convergence_spread},
          {"max_gap", g.max_gap},
          {"longest_run", g.longest_run}};
}

}  // namespace furdyn
