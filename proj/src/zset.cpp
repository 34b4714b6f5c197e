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

#include "furdyn/zset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "furdyn/error.hpp"

namespace furdyn {
namespace {

constexpr std::size_t kMaxCombinedPeriod = std::size_t{1} << 16;

std::optional<EventuallyPeriodic> as_periodic(const TailHint& hint) {
  if (const auto* all = std::get_if<AllBeyond>(&hint)) return EventuallyPeriodic{all->from, {true}};
  if (const auto* none = std::get_if<NoneBeyond>(&hint)) return EventuallyPeriodic{none->from, {false}};
  if (const auto* per = std::get_if<EventuallyPeriodic>(&hint)) return *per;
  return std::nullopt;
}

void check_hint(const WindowSet::Bits& bits, const TailHint& hint) {
  if (!hint_known(hint)) return;
  const std::size_t n = bits.size();
  const std::size_t k = std::min<std::size_t>(n / 4, 1024);
  for (std::size_t i = n - k; i < n; ++i) {
    const auto expected = hint_member(hint, i);
    if (expected && *expected != bits.test(i)) {
      fail(ErrorCode::InvalidArgument, "tail hint " + describe_hint(hint) +
                                           " contradicts window membership at index " + std::to_string(i));
    }
  }
}

template <typename Op>
TailHint combine_hints(const TailHint& a, const TailHint& b, Op op) {
  const auto pa = as_periodic(a);
  const auto pb = as_periodic(b);
  if (!pa || !pb) return UnknownTail{};
  const std::size_t period = std::lcm(pa->pattern.size(), pb->pattern.size());
  if (period > kMaxCombinedPeriod) return UnknownTail{};
  EventuallyPeriodic out{std::max(pa->from, pb->from), std::vector<bool>(period)};
  for (std::size_t k = 0; k < period; ++k) {
    const std::uint64_t n = out.from + k;
    out.pattern[k] = op(pa->pattern[(n - pa->from) % pa->pattern.size()],
                        pb->pattern[(n - pb->from) % pb->pattern.size()]);
  }
  return normalize_hint(std::move(out));
}

std::vector<std::uint32_t> prefix_counts(const WindowSet& w) {
  std::vector<std::uint32_t> cum(w.horizon() + 1, 0);
  for (std::size_t i = 0; i < w.horizon(); ++i) cum[i + 1] = cum[i] + (w.contains(i) ? 1 : 0);
  return cum;
}

}  // namespace

TailHint normalize_hint(TailHint hint) {
  auto* per = std::get_if<EventuallyPeriodic>(&hint);
  if (per == nullptr) return hint;
  if (per->pattern.empty()) fail(ErrorCode::InvalidArgument, "periodic tail hint with empty pattern");
  const auto& pat = per->pattern;
  if (std::all_of(pat.begin(), pat.end(), [](bool b) { return b; })) return AllBeyond{per->from};
  if (std::none_of(pat.begin(), pat.end(), [](bool b) { return b; })) return NoneBeyond{per->from};
  const std::size_t size = pat.size();
  for (std::size_t p = 1; p < size; ++p) {
    if (size % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < size && ok; ++i) ok = pat[i] == pat[i % p];
    if (ok) {
      per->pattern.resize(p);
      break;
    }
  }
  return hint;
}

bool hint_known(const TailHint& hint) { return !std::holds_alternative<UnknownTail>(hint); }

std::optional<bool> hint_member(const TailHint& hint, std::uint64_t n) {
  const auto per = as_periodic(hint);
  if (!per || n < per->from) return std::nullopt;
  return per->pattern[(n - per->from) % per->pattern.size()];
}

std::string describe_hint(const TailHint& hint) {
  std::ostringstream os;
  std::visit(
      [&](const auto& h) {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, UnknownTail>) {
          os << "Unknown";
        } else if constexpr (std::is_same_v<T, AllBeyond>) {
          os << "AllBeyond(" << h.from << ")";
        } else if constexpr (std::is_same_v<T, NoneBeyond>) {
          os << "NoneBeyond(" << h.from << ")";
        } else {
          os << "EventuallyPeriodic(" << h.from << ",";
          for (bool b : h.pattern) os << (b ? '1' : '0');
          os << ")";
        }
      },
      hint);
  return os.str();
}

WindowSet::WindowSet(std::size_t horizon, TailHint hint) : WindowSet(Bits(horizon), std::move(hint)) {}

WindowSet::WindowSet(Bits bits, TailHint hint) : bits_(std::move(bits)), hint_(normalize_hint(std::move(hint))) {
  if (bits_.size() == 0) fail(ErrorCode::InvalidArgument, "window horizon must be >= 1");
  check_hint(bits_, hint_);
}

WindowSet WindowSet::from_hint(std::size_t horizon, const TailHint& hint, const std::vector<bool>& prefix_member) {
  Bits bits(horizon);
  for (std::size_t n = 0; n < horizon; ++n) {
    const auto m = hint_member(hint, n);
    if (m ? *m : (n < prefix_member.size() && prefix_member[n])) bits.set(n);
  }
  return WindowSet(std::move(bits), hint);
}

bool WindowSet::is_subset_of(const WindowSet& other) const {
  if (horizon() != other.horizon()) fail(ErrorCode::InvalidArgument, "subset test across different horizons");
  return bits_.is_subset_of(other.bits_);
}

WindowSet complement(const WindowSet& w) {
  TailHint hint = std::visit(
      [](const auto& h) -> TailHint {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, UnknownTail>) {
          return h;
        } else if constexpr (std::is_same_v<T, AllBeyond>) {
          return NoneBeyond{h.from};
        } else if constexpr (std::is_same_v<T, NoneBeyond>) {
          return AllBeyond{h.from};
        } else {
          EventuallyPeriodic out = h;
          out.pattern.flip();
          return out;
        }
      },
      w.tail_hint());
  return WindowSet(~w.bits(), std::move(hint));
}

WindowSet shift(const WindowSet& w, std::size_t i, ShiftDirection direction) {
  const std::size_t n = w.horizon();
  if (i >= n) {
    fail(ErrorCode::InvalidArgument,
         "shift by " + std::to_string(i) + " exhausts window of horizon " + std::to_string(n));
  }
  const auto per = as_periodic(w.tail_hint());
  if (direction == ShiftDirection::Plus) {
    TailHint hint = UnknownTail{};
    if (per) hint = EventuallyPeriodic{per->from + i, per->pattern};
    return WindowSet(w.bits() << i, std::move(hint));
  }
  WindowSet::Bits bits = w.bits() >> i;
  bits.resize(n - i);
  TailHint hint = UnknownTail{};
  if (per) {
    const std::uint64_t from = per->from > i ? per->from - i : 0;
    const std::size_t p = per->pattern.size();
    EventuallyPeriodic out{from, std::vector<bool>(p)};
    for (std::size_t k = 0; k < p; ++k) out.pattern[k] = per->pattern[(k + from + i - per->from) % p];
    hint = std::move(out);
  }
  return WindowSet(std::move(bits), std::move(hint));
}

WindowSet intersect(const WindowSet& a, const WindowSet& b) {
  if (a.horizon() != b.horizon()) fail(ErrorCode::InvalidArgument, "intersect across different horizons");
  TailHint hint;
  if (const auto* none = std::get_if<NoneBeyond>(&a.tail_hint())) {
    hint = *none;
  } else if (const auto* none_b = std::get_if<NoneBeyond>(&b.tail_hint())) {
    hint = *none_b;
  } else {
    hint = combine_hints(a.tail_hint(), b.tail_hint(), [](bool x, bool y) { return x && y; });
  }
  if (const auto* none = std::get_if<NoneBeyond>(&a.tail_hint()); none && std::get_if<NoneBeyond>(&b.tail_hint())) {
    hint = NoneBeyond{std::min(none->from, std::get<NoneBeyond>(b.tail_hint()).from)};
  }
  return WindowSet(a.bits() & b.bits(), std::move(hint));
}

WindowSet unite(const WindowSet& a, const WindowSet& b) {
  if (a.horizon() != b.horizon()) fail(ErrorCode::InvalidArgument, "unite across different horizons");
  TailHint hint;
  if (const auto* all = std::get_if<AllBeyond>(&a.tail_hint())) {
    hint = *all;
  } else if (const auto* all_b = std::get_if<AllBeyond>(&b.tail_hint())) {
    hint = *all_b;
  } else {
    hint = combine_hints(a.tail_hint(), b.tail_hint(), [](bool x, bool y) { return x || y; });
  }
  if (const auto* all = std::get_if<AllBeyond>(&a.tail_hint()); all && std::get_if<AllBeyond>(&b.tail_hint())) {
    hint = AllBeyond{std::min(all->from, std::get<AllBeyond>(b.tail_hint()).from)};
  }
  return WindowSet(a.bits() | b.bits(), std::move(hint));
}

WindowSet truncate(const WindowSet& w, std::size_t n) {
  if (n == 0 || n > w.horizon()) fail(ErrorCode::InvalidArgument, "truncate length out of range");
  WindowSet::Bits bits = w.bits();
  bits.resize(n);
  return WindowSet(std::move(bits), w.tail_hint());
}

DensityProfile density_profile(const WindowSet& w, std::size_t min_banach_window) {
  if (min_banach_window < 1) fail(ErrorCode::InvalidArgument, "min_banach_window must be >= 1");
  const std::size_t n = w.horizon();
  const auto cum = prefix_counts(w);
  DensityProfile p;

  const std::size_t first = std::max<std::size_t>(1, (n + 1) / 2);
  p.upper_est = 0.0;
  p.lower_est = 1.0;
  for (std::size_t m = first; m <= n; ++m) {
    const double d = static_cast<double>(cum[m]) / static_cast<double>(m);
    p.upper_est = std::max(p.upper_est, d);
    p.lower_est = std::min(p.lower_est, d);
  }

  for (std::size_t j = 0;; ++j) {
    const auto m = static_cast<std::size_t>(std::ceil(std::exp2(static_cast<double>(j) / 4.0)));
    if (m >= n) break;
    if (!p.prefix_densities.empty() && p.prefix_densities.back().first == m) continue;
    p.prefix_densities.emplace_back(m, static_cast<double>(cum[m]) / static_cast<double>(m));
  }
  p.prefix_densities.emplace_back(n, static_cast<double>(cum[n]) / static_cast<double>(n));
  {
    // sampled n in the last half of the window
    double lo = 1.0, hi = 0.0;
    for (const auto& [m, d] : p.prefix_densities) {
      if (2 * m < n) continue;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    p.convergence_spread = hi - lo;
  }

  p.banach_upper_est = p.upper_est;
  p.banach_lower_est = p.lower_est;
  std::vector<std::size_t> lengths;
  for (std::size_t len = min_banach_window; len <= n; len *= 2) lengths.push_back(len);
  if (lengths.empty()) lengths.push_back(n);
  for (std::size_t len : lengths) {
    std::uint32_t best = 0, worst = static_cast<std::uint32_t>(len);
    for (std::size_t start = 0; start + len <= n; ++start) {
      const std::uint32_t c = cum[start + len] - cum[start];
      best = std::max(best, c);
      worst = std::min(worst, c);
    }
    p.banach_upper_est = std::max(p.banach_upper_est, static_cast<double>(best) / static_cast<double>(len));
    p.banach_lower_est = std::min(p.banach_lower_est, static_cast<double>(worst) / static_cast<double>(len));
  }
  return p;
}

WindowSet run_starts(const WindowSet& w, std::size_t run_length) {
  const std::size_t n = w.horizon();
  if (run_length < 1 || run_length > n) fail(ErrorCode::InvalidArgument, "run length out of range");
  std::vector<std::uint32_t> run(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) run[i] = w.contains(i) ? run[i + 1] + 1 : 0;
  const std::size_t out_n = n - run_length + 1;
  WindowSet::Bits bits(out_n);
  for (std::size_t p = 0; p < out_n; ++p) {
    if (run[p] >= run_length) bits.set(p);
  }
  TailHint hint = UnknownTail{};
  if (const auto per = as_periodic(w.tail_hint())) {
    const std::size_t period = per->pattern.size();
    EventuallyPeriodic out{per->from, std::vector<bool>(period)};
    for (std::size_t k = 0; k < period; ++k) {
      bool all = true;
      for (std::size_t t = 0; t < run_length && all; ++t) all = per->pattern[(k + t) % period];
      out.pattern[k] = all;
    }
    hint = std::move(out);
  }
  return WindowSet(std::move(bits), std::move(hint));
}

GapRunStats gap_run_stats(const WindowSet& w, std::size_t max_tracked_run) {
  const std::size_t n = w.horizon();
  if (max_tracked_run > n) fail(ErrorCode::InvalidArgument, "max_tracked_run exceeds the horizon");
  GapRunStats s;
  const auto& bits = w.bits();
  std::size_t pos = bits.find_first();
  if (pos == WindowSet::Bits::npos) {
    s.max_gap = n;
  } else {
    s.max_gap = pos;
    std::size_t run = 1;
    s.longest_run = 1;
    for (std::size_t next = bits.find_next(pos); next != WindowSet::Bits::npos; next = bits.find_next(next)) {
      s.max_gap = std::max(s.max_gap, next - pos);
      run = (next == pos + 1) ? run + 1 : 1;
      s.longest_run = std::max(s.longest_run, run);
      pos = next;
    }
    s.max_gap = std::max(s.max_gap, n - 1 - pos);
  }
  if (max_tracked_run >= 1) {
    for (std::size_t len = 1; len <= max_tracked_run; len *= 2) s.run_starts.emplace(len, run_starts(w, len));
    if (!s.run_starts.count(max_tracked_run)) s.run_starts.emplace(max_tracked_run, run_starts(w, max_tracked_run));
  }
  return s;
}

std::string to_rle(const WindowSet& w) {
  std::string out = std::to_string(w.horizon()) + ";";
  std::size_t i = 0;
  bool first = true;
  while (i < w.horizon()) {
    const bool b = w.contains(i);
    std::size_t j = i;
    while (j < w.horizon() && w.contains(j) == b) ++j;
    if (!first) out += ',';
    out += b ? '1' : '0';
    out += ':';
    out += std::to_string(j - i);
    first = false;
    i = j;
  }
  return out;
}

WindowSet from_rle(std::string_view text) {
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::Parse, "invalid RLE window '" + std::string(text) + "': " + why);
  };
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) bad("missing ';'");
  std::size_t n = 0;
  {
    const auto head = text.substr(0, semi);
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
    if (ec != std::errc{} || ptr != head.data() + head.size() || n == 0) bad("bad horizon");
  }
  WindowSet::Bits bits(n);
  std::size_t pos = 0;
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    if (token.size() < 3 || (token[0] != '0' && token[0] != '1') || token[1] != ':') bad("bad run token");
    std::size_t len = 0;
    const auto digits = token.substr(2);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), len);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || len == 0) bad("bad run length");
    if (pos + len > n) bad("runs exceed horizon");
    if (token[0] == '1') {
      for (std::size_t k = pos; k < pos + len; ++k) bits.set(k);
    }
    pos += len;
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) bad("trailing ','");
  }
  if (pos != n) bad("runs do not cover the horizon");
  return WindowSet(std::move(bits));
}

}  // namespace furdyn
