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

#include "furdyn/family.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "furdyn/error.hpp"
#include "furdyn/random.hpp"

namespace furdyn {
namespace {

constexpr std::size_t kProbeHorizon = 4096;

std::string format_param(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// 1 - p rounded to 12 significant digits so that duals round-trip.
double one_minus(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", 1.0 - p);
  return std::strtod(buf, nullptr);
}

void check_upper_param(double a) {
  if (!(a >= 0.0 && a < 1.0)) fail(ErrorCode::InvalidArgument, "density threshold a must lie in [0,1), got " + format_param(a));
}
void check_lower_param(double b) {
  if (!(b > 0.0 && b <= 1.0)) fail(ErrorCode::InvalidArgument, "density threshold b must lie in (0,1], got " + format_param(b));
}

std::size_t isqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

Verdict make(Outcome o, nlohmann::json witness, std::size_t horizon) {
  return Verdict{o, std::move(witness), horizon};
}

// ---------------------------------------------------------------------------
// exact evaluation from a periodic/cofinite/finite tail

Verdict by_hint(const FamilyDescriptor& f, const WindowSet& w) {
  const TailHint& hint = w.tail_hint();
  std::vector<bool> pattern;
  if (std::holds_alternative<AllBeyond>(hint)) {
    pattern = {true};
  } else if (std::holds_alternative<NoneBeyond>(hint)) {
    pattern = {false};
  } else {
    pattern = std::get<EventuallyPeriodic>(hint).pattern;
  }
  const auto ones = static_cast<std::size_t>(std::count(pattern.begin(), pattern.end(), true));
  const std::size_t period = pattern.size();
  const bool all = ones == period;
  const double density = static_cast<double>(ones) / static_cast<double>(period);
  bool member = false;
  switch (f.kind()) {
    case FamilyKind::InfiniteSets:
    case FamilyKind::Syndetic:
      member = ones > 0;
      break;
    case FamilyKind::Cofinite:
    case FamilyKind::Thick:
    case FamilyKind::ThicklySyndetic:
      member = all;
      break;
    case FamilyKind::UpperDensityAbove:
    case FamilyKind::BanachUpperAbove:
      member = static_cast<double>(ones) > f.parameter() * static_cast<double>(period);
      break;
    case FamilyKind::LowerDensityAtLeast:
    case FamilyKind::BanachLowerAtLeast:
      member = static_cast<double>(ones) >= f.parameter() * static_cast<double>(period);
      break;
    case FamilyKind::DualOf:
      break;
  }
  return make(member ? Outcome::Holds : Outcome::Fails,
              {{"rule", "tail_hint"}, {"hint", describe_hint(hint)}, {"tail_density", density}}, w.horizon());
}

// ---------------------------------------------------------------------------
// windowed rules

Verdict window_infinite(const WindowSet& w) {
  const std::size_t n = w.horizon();
  std::size_t last = WindowSet::Bits::npos;
  for (std::size_t i = w.bits().find_first(); i != WindowSet::Bits::npos; i = w.bits().find_next(i)) last = i;
  nlohmann::json wit = {{"rule", "window"}};
  wit["last_member"] = last == WindowSet::Bits::npos ? nlohmann::json(nullptr) : nlohmann::json(last);
  if (last != WindowSet::Bits::npos && last >= n / 2) return make(Outcome::Holds, wit, n);
  if (last == WindowSet::Bits::npos || last < n / 4) return make(Outcome::Fails, wit, n);
  return make(Outcome::Inconclusive, wit, n);
}

Verdict window_cofinite(const WindowSet& w, const VerdictPolicy& policy) {
  const std::size_t n = w.horizon();
  const WindowSet comp = complement(w);
  std::size_t last_out = WindowSet::Bits::npos;
  for (std::size_t i = comp.bits().find_first(); i != WindowSet::Bits::npos; i = comp.bits().find_next(i)) last_out = i;
  nlohmann::json wit = {{"rule", "window"}};
  wit["last_non_member"] = last_out == WindowSet::Bits::npos ? nlohmann::json(nullptr) : nlohmann::json(last_out);
  if (last_out == WindowSet::Bits::npos || last_out < n / 2) return make(Outcome::Holds, wit, n);
  const WindowSet tail = shift(comp, n / 2, ShiftDirection::Minus);
  const double lower = density_profile(tail, 1).lower_est;
  wit["complement_tail_lower_density"] = lower;
  if (lower >= policy.refute_density) return make(Outcome::Fails, wit, n);
  return make(Outcome::Inconclusive, wit, n);
}

Verdict window_syndetic(const WindowSet& w, const VerdictPolicy& policy) {
  const std::size_t n = w.horizon();
  const auto stats = gap_run_stats(w, 0);
  const double hold_bound = policy.syndetic_gap_frac * static_cast<double>(n);
  const double refute_bound = policy.refute_gap_frac * static_cast<double>(n);
  nlohmann::json wit = {{"rule", "window"}, {"max_gap", stats.max_gap}, {"hold_bound", hold_bound},
                        {"refute_bound", refute_bound}};
  const auto gap = static_cast<double>(stats.max_gap);
  if (gap <= hold_bound) return make(Outcome::Holds, wit, n);
  if (gap >= refute_bound) return make(Outcome::Fails, wit, n);
  return make(Outcome::Inconclusive, wit, n);
}

std::vector<std::size_t> run_ladder(std::size_t n) {
  const std::size_t top = std::max<std::size_t>(1, isqrt(n));
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len <= top; len *= 2) out.push_back(len);
  if (out.back() != top) out.push_back(top);
  return out;
}

Verdict window_thick(const WindowSet& w, const VerdictPolicy& policy) {
  const std::size_t n = w.horizon();
  const auto stats = gap_run_stats(w, 0);
  const std::size_t need = std::max<std::size_t>(1, isqrt(n));
  const std::size_t refute = policy.thick_refute_run.value_or(ceil_log2(n));
  nlohmann::json wit = {{"rule", "window"}, {"longest_run", stats.longest_run}, {"required_run", need},
                        {"refute_run", refute}};
  if (stats.longest_run >= need) return make(Outcome::Holds, wit, n);
  if (stats.longest_run <= refute) return make(Outcome::Fails, wit, n);
  return make(Outcome::Inconclusive, wit, n);
}

Verdict window_thickly_syndetic(const WindowSet& w, const VerdictPolicy& policy) {
  const std::size_t n = w.horizon();
  bool all_hold = true;
  nlohmann::json per_length = nlohmann::json::array();
  for (std::size_t len : run_ladder(n)) {
    const Verdict v = window_syndetic(run_starts(w, len), policy);
    per_length.push_back({{"run_length", len}, {"verdict", to_string(v.outcome)}, {"max_gap", v.witness["max_gap"]}});
    if (v.fails()) {
      return make(Outcome::Fails, {{"rule", "window"}, {"refuting_run_length", len}, {"run_starts", per_length}}, n);
    }
    all_hold = all_hold && v.holds();
  }
  return make(all_hold ? Outcome::Holds : Outcome::Inconclusive, {{"rule", "window"}, {"run_starts", per_length}}, n);
}

Verdict window_density(const FamilyDescriptor& f, const WindowSet& w, const VerdictPolicy& policy) {
  const std::size_t n = w.horizon();
  const std::size_t mbw = policy.min_banach_window.value_or(std::max<std::size_t>(1, isqrt(n)));
  const DensityProfile p = density_profile(w, mbw);
  const double a = f.parameter();
  const double m = policy.margin;
  nlohmann::json wit = {{"rule", "window"},
                        {"upper_est", p.upper_est},
                        {"lower_est", p.lower_est},
                        {"banach_upper_est", p.banach_upper_est},
                        {"banach_lower_est", p.banach_lower_est},
                        {"convergence_spread", p.convergence_spread},
                        {"threshold", a},
                        {"margin", m}};
  Outcome o = Outcome::Inconclusive;
  switch (f.kind()) {
    case FamilyKind::UpperDensityAbove:
      if (p.upper_est > a + m) o = Outcome::Holds;
      else if (p.upper_est < a - m && p.convergence_spread < m) o = Outcome::Fails;
      break;
    case FamilyKind::LowerDensityAtLeast:
      if (p.lower_est >= std::min(a + m, 1.0)) o = Outcome::Holds;
      else if (p.lower_est < a - m && p.convergence_spread < m) o = Outcome::Fails;
      break;
    case FamilyKind::BanachUpperAbove:
      if (p.banach_upper_est > a + m) o = Outcome::Holds;
      else if (p.banach_upper_est < a - m) o = Outcome::Fails;
      break;
    case FamilyKind::BanachLowerAtLeast:
      if (p.banach_lower_est >= std::min(a + m, 1.0)) o = Outcome::Holds;
      else if (p.banach_lower_est < a - m) o = Outcome::Fails;
      break;
    default:
      break;
  }
  return make(o, std::move(wit), n);
}

// ---------------------------------------------------------------------------
// canonical members

struct Candidate {
  WindowSet set;
  std::string label;
};

WindowSet periodic_set(std::size_t horizon, std::uint64_t from, std::vector<bool> pattern,
                       const std::vector<bool>& prefix = {}) {
  return WindowSet::from_hint(horizon, EventuallyPeriodic{from, std::move(pattern)}, prefix);
}

std::vector<bool> pattern_with_ones(Rng& rng, std::size_t period, std::size_t ones) {
  std::vector<bool> pattern(period, false);
  std::fill(pattern.begin(), pattern.begin() + static_cast<std::ptrdiff_t>(std::min(ones, period)), true);
  for (std::size_t i = period; i > 1; --i) {
    const std::size_t j = rng.range(0, i - 1);
    const bool tmp = pattern[i - 1];
    pattern[i - 1] = pattern[j];
    pattern[j] = tmp;
  }
  return pattern;
}

std::vector<bool> random_prefix(Rng& rng, std::size_t length) {
  std::vector<bool> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = rng.coin();
  return out;
}

/// On 1, off 1, on 2, off 2, on 4, off 4, ...: thick, with a thick complement.
WindowSet alternating_blocks(std::size_t horizon) {
  WindowSet::Bits bits(horizon);
  std::size_t pos = 0;
  for (std::size_t len = 1; pos < horizon; len *= 2) {
    for (std::size_t k = 0; k < len && pos + k < horizon; ++k) bits.set(pos + k);
    pos += 2 * len;
  }
  return WindowSet(std::move(bits));
}

std::vector<Candidate> adversarial_pool(std::size_t horizon) {
  return {
      {periodic_set(horizon, 0, {true, false}), "evens"},
      {periodic_set(horizon, 0, {false, true}), "odds"},
      {WindowSet::from_hint(horizon, AllBeyond{0}), "complement_of_empty"},
      {alternating_blocks(horizon), "alternating_blocks"},
      {complement(alternating_blocks(horizon)), "alternating_blocks_complement"},
  };
}

std::vector<Candidate> adversarial_members(const FamilyDescriptor& f, std::size_t horizon) {
  std::vector<Candidate> out;
  for (auto& c : adversarial_pool(horizon)) {
    if (contains(f, c.set).holds()) out.push_back(std::move(c));
  }
  return out;
}

WindowSet constructed_member(const FamilyDescriptor& f, std::size_t n, Rng& rng) {
  switch (f.kind()) {
    case FamilyKind::InfiniteSets: {
      const std::size_t p = rng.range(2, 16);
      std::vector<bool> pattern(p, false);
      pattern[rng.range(0, p - 1)] = true;
      return periodic_set(n, 0, std::move(pattern));
    }
    case FamilyKind::Cofinite: {
      const std::size_t c = rng.range(0, n / 2 - 1);
      return WindowSet::from_hint(n, AllBeyond{c}, random_prefix(rng, c));
    }
    case FamilyKind::Syndetic: {
      const std::size_t p = rng.range(2, 12);
      return periodic_set(n, 0, pattern_with_ones(rng, p, rng.range(1, p - 1)));
    }
    case FamilyKind::Thick: {
      WindowSet::Bits bits(n);
      std::size_t pos = rng.range(0, 7);
      for (std::size_t len = 1; pos < n; ++len) {
        for (std::size_t k = 0; k < len && pos + k < n; ++k) bits.set(pos + k);
        pos += len + rng.range(1, 8);
      }
      return WindowSet(std::move(bits));
    }
    case FamilyKind::ThicklySyndetic: {
      // Z+ minus {r + 4^j : j >= 3}.
      const std::size_t r = rng.range(0, 15);
      WindowSet::Bits bits(n);
      bits.set();
      for (std::size_t hole = 64; r + hole < n; hole *= 4) bits.reset(r + hole);
      return WindowSet(std::move(bits));
    }
    case FamilyKind::UpperDensityAbove:
    case FamilyKind::BanachUpperAbove: {
      const std::size_t p = rng.range(8, 32);
      const auto base = static_cast<std::size_t>(std::floor(f.parameter() * static_cast<double>(p))) + 1;
      const std::size_t ones = std::min(p, base + rng.range(0, p - std::min(p, base)));
      return periodic_set(n, 0, pattern_with_ones(rng, p, ones));
    }
    case FamilyKind::LowerDensityAtLeast:
    case FamilyKind::BanachLowerAtLeast: {
      const std::size_t p = rng.range(8, 32);
      const auto base = static_cast<std::size_t>(std::ceil(f.parameter() * static_cast<double>(p)));
      const std::size_t ones = std::min(p, base + rng.range(0, p - std::min(p, base)));
      return periodic_set(n, 0, pattern_with_ones(rng, p, ones));
    }
    case FamilyKind::DualOf:
      return complement(sample_non_member(f.inner(), n, rng.next()));
  }
  fail(ErrorCode::Unsupported, "unsupported family kind");
}

void check_sampler_horizon(std::size_t horizon) {
  if (horizon < 64) fail(ErrorCode::InvalidArgument, "sampler horizon must be >= 64");
}

/// Adversarial pairs first, then sampled pairs.
std::vector<std::pair<Candidate, Candidate>> member_pairs(const FamilyDescriptor& f, std::uint64_t seed,
                                                          std::size_t trials) {
  std::vector<std::pair<Candidate, Candidate>> pairs;
  const auto adv = adversarial_members(f, kProbeHorizon);
  for (std::size_t i = 0; i < adv.size() && pairs.size() < trials; ++i) {
    for (std::size_t j = i; j < adv.size() && pairs.size() < trials; ++j) pairs.emplace_back(adv[i], adv[j]);
  }
  for (std::size_t t = pairs.size(); t < trials; ++t) {
    const auto s1 = derive_seed(seed, t, 1);
    const auto s2 = derive_seed(seed, t, 2);
    pairs.emplace_back(Candidate{sample_member(f, kProbeHorizon, s1), "sample(" + std::to_string(s1) + ")"},
                       Candidate{sample_member(f, kProbeHorizon, s2), "sample(" + std::to_string(s2) + ")"});
  }
  return pairs;
}

struct Partition {
  WindowSet first;
  WindowSet second;
  std::string label;
};

Partition partition(const WindowSet& u, std::size_t kind, std::uint64_t seed) {
  const std::size_t n = u.horizon();
  switch (kind % 4) {
    case 0: {
      const WindowSet evens = periodic_set(n, 0, {true, false});
      return {intersect(u, evens), intersect(u, complement(evens)), "parity"};
    }
    case 1: {
      const WindowSet blocks = periodic_set(n, 0, {true, true, true, true, false, false, false, false});
      return {intersect(u, blocks), intersect(u, complement(blocks)), "alternating_blocks_of_4"};
    }
    case 2: {
      WindowSet::Bits a(n), b(n);
      bool toggle = false;
      for (std::size_t i = u.bits().find_first(); i != WindowSet::Bits::npos; i = u.bits().find_next(i)) {
        (toggle ? b : a).set(i);
        toggle = !toggle;
      }
      return {WindowSet(std::move(a)), WindowSet(std::move(b)), "rank_alternation"};
    }
    default: {
      Rng rng(seed);
      WindowSet::Bits a(n), b(n);
      for (std::size_t i = u.bits().find_first(); i != WindowSet::Bits::npos; i = u.bits().find_next(i)) {
        (rng.coin() ? b : a).set(i);
      }
      return {WindowSet(std::move(a)), WindowSet(std::move(b)), "random"};
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// descriptor

FamilyDescriptor FamilyDescriptor::upper_density_above(double a) {
  check_upper_param(a);
  return FamilyDescriptor(FamilyKind::UpperDensityAbove, a);
}
FamilyDescriptor FamilyDescriptor::lower_density_at_least(double b) {
  check_lower_param(b);
  return FamilyDescriptor(FamilyKind::LowerDensityAtLeast, b);
}
FamilyDescriptor FamilyDescriptor::banach_upper_above(double a) {
  check_upper_param(a);
  return FamilyDescriptor(FamilyKind::BanachUpperAbove, a);
}
FamilyDescriptor FamilyDescriptor::banach_lower_at_least(double b) {
  check_lower_param(b);
  return FamilyDescriptor(FamilyKind::BanachLowerAtLeast, b);
}

FamilyDescriptor FamilyDescriptor::dual_of(const FamilyDescriptor& inner) {
  if (inner.kind_ == FamilyKind::DualOf) return *inner.inner_;
  FamilyDescriptor out(FamilyKind::DualOf);
  out.inner_ = std::make_shared<const FamilyDescriptor>(inner);
  return out;
}

const FamilyDescriptor& FamilyDescriptor::inner() const {
  if (!inner_) fail(ErrorCode::InvalidArgument, "inner() on a non-dual family descriptor");
  return *inner_;
}

bool FamilyDescriptor::operator==(const FamilyDescriptor& other) const {
  if (kind_ != other.kind_ || param_ != other.param_) return false;
  if (kind_ == FamilyKind::DualOf) return *inner_ == *other.inner_;
  return true;
}

std::string FamilyDescriptor::to_string() const {
  switch (kind_) {
    case FamilyKind::InfiniteSets: return "B";
    case FamilyKind::Cofinite: return "cf";
    case FamilyKind::Syndetic: return "synd";
    case FamilyKind::Thick: return "thick";
    case FamilyKind::ThicklySyndetic: return "tsynd";
    case FamilyKind::UpperDensityAbove: return "ud>" + format_param(param_);
    case FamilyKind::LowerDensityAtLeast: return "ld>=" + format_param(param_);
    case FamilyKind::BanachUpperAbove: return "bud>" + format_param(param_);
    case FamilyKind::BanachLowerAtLeast: return "bld>=" + format_param(param_);
    case FamilyKind::DualOf: return "k(" + inner_->to_string() + ")";
  }
  return "?";
}

namespace {

const char* kFamilyGrammar = "B | cf | synd | thick | tsynd | ud>a | ld>=b | bud>a | bld>=b | k(<desc>)";

double parse_number(std::string_view text, std::string_view whole) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::Parse, "bad numeric parameter in family '" + std::string(whole) + "'; grammar: " + kFamilyGrammar);
  }
  return v;
}

}  // namespace

FamilyDescriptor FamilyDescriptor::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s == "B") return infinite_sets();
  if (s == "cf") return cofinite();
  if (s == "synd") return syndetic();
  if (s == "thick") return thick();
  if (s == "tsynd") return thickly_syndetic();
  if (s.starts_with("k(") && s.ends_with(")")) return dual_of(parse(s.substr(2, s.size() - 3)));
  if (s.starts_with("bud>")) return banach_upper_above(parse_number(s.substr(4), text));
  if (s.starts_with("bld>=")) return banach_lower_at_least(parse_number(s.substr(5), text));
  if (s.starts_with("ud>")) return upper_density_above(parse_number(s.substr(3), text));
  if (s.starts_with("ld>=")) return lower_density_at_least(parse_number(s.substr(4), text));
  fail(ErrorCode::Parse, "unknown family '" + std::string(text) + "'; grammar: " + kFamilyGrammar);
}

FamilyDescriptor normalize(const FamilyDescriptor& f) {
  return f.kind() == FamilyKind::DualOf ? dual(f.inner()) : f;
}

FamilyDescriptor dual(const FamilyDescriptor& f) {
  switch (f.kind()) {
    case FamilyKind::InfiniteSets: return FamilyDescriptor::cofinite();
    case FamilyKind::Cofinite: return FamilyDescriptor::infinite_sets();
    case FamilyKind::Thick: return FamilyDescriptor::syndetic();
    case FamilyKind::Syndetic: return FamilyDescriptor::thick();
    case FamilyKind::UpperDensityAbove: return FamilyDescriptor::lower_density_at_least(one_minus(f.parameter()));
    case FamilyKind::LowerDensityAtLeast: return FamilyDescriptor::upper_density_above(one_minus(f.parameter()));
    case FamilyKind::BanachUpperAbove: return FamilyDescriptor::banach_lower_at_least(one_minus(f.parameter()));
    case FamilyKind::BanachLowerAtLeast: return FamilyDescriptor::banach_upper_above(one_minus(f.parameter()));
    case FamilyKind::ThicklySyndetic: return FamilyDescriptor::dual_of(f);
    case FamilyKind::DualOf: return f.inner();
  }
  fail(ErrorCode::Unsupported, "unsupported family kind");
}

bool is_translation_invariant(const FamilyDescriptor& f) {
  if (f.kind() == FamilyKind::DualOf) return is_translation_invariant(f.inner());
  return true;
}

std::vector<FamilyDescriptor> implemented_families() {
  return {
      FamilyDescriptor::infinite_sets(),
      FamilyDescriptor::cofinite(),
      FamilyDescriptor::syndetic(),
      FamilyDescriptor::thick(),
      FamilyDescriptor::thickly_syndetic(),
      FamilyDescriptor::upper_density_above(0.3),
      FamilyDescriptor::lower_density_at_least(0.7),
      FamilyDescriptor::banach_upper_above(0.3),
      FamilyDescriptor::banach_lower_at_least(0.7),
      FamilyDescriptor::dual_of(FamilyDescriptor::thickly_syndetic()),
  };
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Outcome negate(Outcome o) {
  if (o == Outcome::Holds) return Outcome::Fails;
  if (o == Outcome::Fails) return Outcome::Holds;
  return o;
}

// ---------------------------------------------------------------------------
// membership

Verdict contains(const FamilyDescriptor& f, const WindowSet& w, const VerdictPolicy& policy) {
  if (f.kind() == FamilyKind::DualOf) {
    const Verdict inner = contains(f.inner(), complement(w), policy);
    return make(negate(inner.outcome), {{"rule", "dual_via_complement"}, {"inner", inner.witness}}, w.horizon());
  }
  if (hint_known(w.tail_hint())) return by_hint(f, w);
  switch (f.kind()) {
    case FamilyKind::InfiniteSets: return window_infinite(w);
    case FamilyKind::Cofinite: return window_cofinite(w, policy);
    case FamilyKind::Syndetic: return window_syndetic(w, policy);
    case FamilyKind::Thick: return window_thick(w, policy);
    case FamilyKind::ThicklySyndetic: return window_thickly_syndetic(w, policy);
    default: return window_density(f, w, policy);
  }
}

WindowSet sample_member(const FamilyDescriptor& f, std::size_t horizon, std::uint64_t seed) {
  check_sampler_horizon(horizon);
  if (seed % 4 == 0) {
    auto adv = adversarial_members(f, horizon);
    if (!adv.empty()) return std::move(adv[(seed / 4) % adv.size()].set);
  }
  Rng rng(seed);
  return constructed_member(f, horizon, rng);
}

WindowSet sample_non_member(const FamilyDescriptor& f, std::size_t horizon, std::uint64_t seed) {
  check_sampler_horizon(horizon);
  Rng rng(seed);
  const std::size_t n = horizon;
  auto finite = [&] {
    const std::size_t c = rng.range(0, n / 2 - 1);
    return WindowSet::from_hint(n, NoneBeyond{c}, random_prefix(rng, c));
  };
  auto with_zero = [&] {
    const std::size_t p = rng.range(2, 12);
    return periodic_set(n, 0, pattern_with_ones(rng, p, rng.range(0, p - 1)));
  };
  switch (f.kind()) {
    case FamilyKind::InfiniteSets:
    case FamilyKind::Syndetic:
      return finite();
    case FamilyKind::Cofinite:
    case FamilyKind::Thick:
    case FamilyKind::ThicklySyndetic:
      return rng.coin() ? with_zero() : finite();
    case FamilyKind::UpperDensityAbove:
    case FamilyKind::BanachUpperAbove: {
      const std::size_t p = rng.range(8, 32);
      const auto ones = static_cast<std::size_t>(std::floor(f.parameter() * static_cast<double>(p)));
      return periodic_set(n, 0, pattern_with_ones(rng, p, rng.range(0, ones)));
    }
    case FamilyKind::LowerDensityAtLeast:
    case FamilyKind::BanachLowerAtLeast: {
      const std::size_t p = rng.range(8, 32);
      const auto need = static_cast<std::size_t>(std::ceil(f.parameter() * static_cast<double>(p)));
      return periodic_set(n, 0, pattern_with_ones(rng, p, rng.range(0, need - 1)));
    }
    case FamilyKind::DualOf:
      return complement(sample_member(f.inner(), n, rng.next()));
  }
  fail(ErrorCode::Unsupported,
       "unsupported family kind; supported: B, cf, synd, thick, tsynd, ud>a, ld>=b, bud>a, bld>=b, k(...)");
}

Verdict filter_check(const FamilyDescriptor& f, std::uint64_t sampler_seed, std::size_t trials) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "filter_check needs trials >= 1");
  bool all_hold = true;
  std::size_t tested = 0;
  for (const auto& [a, b] : member_pairs(f, sampler_seed, trials)) {
    ++tested;
    const Verdict v = contains(f, intersect(a.set, b.set));
    if (v.fails()) {
      return make(Outcome::Fails,
                  {{"property", "filter"},
                   {"family", f.to_string()},
                   {"counterexample", {a.label, b.label}},
                   {"intersection_rle", to_rle(intersect(a.set, b.set))},
                   {"intersection_verdict", v.witness},
                   {"trials_run", tested}},
                  kProbeHorizon);
    }
    all_hold = all_hold && v.holds();
  }
  return make(all_hold ? Outcome::Holds : Outcome::Inconclusive,
              {{"property", "filter"}, {"family", f.to_string()}, {"trials_run", tested},
               {"note", "no counterexample found"}},
              kProbeHorizon);
}

Verdict ramsey_check(const FamilyDescriptor& f, std::uint64_t sampler_seed, std::size_t trials) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "ramsey_check needs trials >= 1");
  auto unions = adversarial_members(f, kProbeHorizon);
  Outcome outcome = Outcome::Holds;
  nlohmann::json wit = {{"property", "ramsey"}, {"family", f.to_string()}};
  for (std::size_t t = 0; t < trials; ++t) {
    Candidate u = t < unions.size() * 4
                      ? unions[t / 4]
                      : Candidate{sample_member(f, kProbeHorizon, derive_seed(sampler_seed, t)), "sample"};
    const Verdict whole = contains(f, u.set);
    if (!whole.holds()) {
      outcome = Outcome::Inconclusive;
      continue;
    }
    const Partition parts = partition(u.set, t, derive_seed(sampler_seed, t, 7));
    const Verdict v1 = contains(f, parts.first);
    const Verdict v2 = contains(f, parts.second);
    if (v1.fails() && v2.fails()) {
      outcome = Outcome::Fails;
      wit["counterexample"] = {{"union", u.label}, {"partition", parts.label},
                               {"part_verdicts", {v1.witness, v2.witness}}};
      break;
    }
    if (!v1.holds() && !v2.holds()) outcome = Outcome::Inconclusive;
  }
  const Verdict dual_filter = filter_check(dual(f), sampler_seed, trials);
  wit["dual_family"] = dual(f).to_string();
  wit["dual_filter_verdict"] = to_string(dual_filter.outcome);
  wit["consistent_with_dual_filter"] = !((outcome == Outcome::Holds && dual_filter.fails()) ||
                                         (outcome == Outcome::Fails && dual_filter.holds()));
  wit["trials_run"] = trials;
  return make(outcome, std::move(wit), kProbeHorizon);
}

}  // namespace furdyn
