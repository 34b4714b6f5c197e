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

// Finite-window views of subsets of the non-negative integers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace furdyn {

/// Hint kinds describing what the set does beyond the window. `from` may
/// exceed the horizon.
struct UnknownTail {
  bool operator==(const UnknownTail&) const = default;
};
struct AllBeyond {
  std::uint64_t from = 0;
  bool operator==(const AllBeyond&) const = default;
};
struct NoneBeyond {
  std::uint64_t from = 0;
  bool operator==(const NoneBeyond&) const = default;
};
/// For n >= from, n is a member iff pattern[(n - from) % pattern.size()].
struct EventuallyPeriodic {
  std::uint64_t from = 0;
  std::vector<bool> pattern;
  bool operator==(const EventuallyPeriodic&) const = default;
};

using TailHint = std::variant<UnknownTail, AllBeyond, NoneBeyond, EventuallyPeriodic>;

/// Rewrites all-ones/all-zeros periodic patterns as AllBeyond/NoneBeyond and
/// reduces patterns to their primitive period.
TailHint normalize_hint(TailHint hint);
bool hint_known(const TailHint& hint);
/// Membership of n dictated by the hint, if any.
std::optional<bool> hint_member(const TailHint& hint, std::uint64_t n);
std::string describe_hint(const TailHint& hint);

class WindowSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  /// Empty set on [0, horizon).
  explicit WindowSet(std::size_t horizon, TailHint hint = UnknownTail{});
  explicit WindowSet(Bits bits, TailHint hint = UnknownTail{});

  template <typename Pred>
  static WindowSet from_predicate(std::size_t horizon, Pred&& member, TailHint hint = UnknownTail{}) {
    Bits bits(horizon);
    for (std::size_t n = 0; n < horizon; ++n) {
      if (member(n)) bits.set(n);
    }
    return WindowSet(std::move(bits), std::move(hint));
  }
  /// Window of a set fully described by its hint (periodic/cofinite/finite
  /// tails); indices below the hint's start take `prefix_member`.
  static WindowSet from_hint(std::size_t horizon, const TailHint& hint,
                             const std::vector<bool>& prefix_member = {});

  std::size_t horizon() const noexcept { return bits_.size(); }
  bool contains(std::size_t n) const { return bits_.test(n); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  const Bits& bits() const noexcept { return bits_; }
  const TailHint& tail_hint() const noexcept { return hint_; }
  WindowSet with_hint(TailHint hint) const { return WindowSet(bits_, std::move(hint)); }

  /// Membership + horizon; hints are metadata and not compared.
  bool operator==(const WindowSet& other) const { return bits_ == other.bits_; }
  bool is_subset_of(const WindowSet& other) const;

 private:
  Bits bits_;
  TailHint hint_;
};

enum class ShiftDirection { Plus, Minus };

WindowSet complement(const WindowSet& w);
/// plus: F+i (horizon kept); minus: (F-i) ∩ Z+ (horizon shrinks to N-i).
WindowSet shift(const WindowSet& w, std::size_t i, ShiftDirection direction);
WindowSet intersect(const WindowSet& a, const WindowSet& b);
WindowSet unite(const WindowSet& a, const WindowSet& b);
/// Restriction to [0, n).
WindowSet truncate(const WindowSet& w, std::size_t n);

struct DensityProfile {
  double upper_est = 0;
  double lower_est = 0;
  double banach_upper_est = 0;
  double banach_lower_est = 0;
  std::vector<std::pair<std::size_t, double>> prefix_densities;  // (n, #(F∩[0,n))/n)
  double convergence_spread = 0;
};

/// Lim sup/inf proxies use prefixes n in [ceil(N/2), N]. Banach estimates
/// scan subwindow lengths min_banach_window * 2^k and also include those
/// prefix windows, so upper_est <= banach_upper_est always.
DensityProfile density_profile(const WindowSet& w, std::size_t min_banach_window);

struct GapRunStats {
  std::size_t max_gap = 0;
  std::size_t longest_run = 0;
  /// L -> positions p with [p, p+L) ⊆ F. Horizon N-L+1.
  std::map<std::size_t, WindowSet> run_starts;
};

/// Interior gaps are differences of consecutive members; the boundary gaps
/// count the non-members before the first and after the last member.
GapRunStats gap_run_stats(const WindowSet& w, std::size_t max_tracked_run);

/// Positions where runs of length >= run_length begin.
WindowSet run_starts(const WindowSet& w, std::size_t run_length);

/// `N;b:len,b:len,...`
std::string to_rle(const WindowSet& w);
WindowSet from_rle(std::string_view text);

}  // namespace furdyn
