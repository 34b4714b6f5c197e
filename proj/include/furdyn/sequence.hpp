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

// One-sided binary sequences given by index rules, so that any symbol is
// computable without materializing the prefix.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace furdyn {

class Sequence;

/// (preperiod, period): x[n + period] == x[n] for n >= preperiod.
using Periodicity = std::pair<std::uint64_t, std::uint64_t>;

class SymbolRule {
 public:
  virtual ~SymbolRule() = default;
  virtual bool at(std::uint64_t n) const = 0;
  virtual std::string describe() const = 0;
  virtual std::optional<Periodicity> periodicity() const { return std::nullopt; }
  /// A simpler equivalent for the suffix starting at `start`, if any.
  virtual std::optional<Sequence> normalize(std::uint64_t start, bool flip) const;
};

using RulePtr = std::shared_ptr<const SymbolRule>;

/// Identifies the future of an eventually periodic sequence.
struct StateKey {
  const SymbolRule* rule = nullptr;
  std::uint64_t phase = 0;
  bool flip = false;
  bool operator==(const StateKey&) const = default;
};

/// bit(i) = rule(start + i) xor flip
class Sequence {
 public:
  Sequence();
  explicit Sequence(RulePtr rule, std::uint64_t start = 0, bool flip = false);

  bool at(std::uint64_t i) const { return rule_->at(start_ + i) != flip_; }
  Sequence shifted(std::uint64_t k) const;
  /// In-place shifted(k).
  void advance(std::uint64_t k);
  Sequence flipped() const { return Sequence(rule_, start_, !flip_); }
  std::vector<bool> prefix(std::size_t n) const;

  const RulePtr& rule() const noexcept { return rule_; }
  std::uint64_t start() const noexcept { return start_; }
  bool flip() const noexcept { return flip_; }

  std::optional<Periodicity> periodicity() const;
  std::optional<StateKey> state_key() const;
  std::string describe() const;
  bool same_as(const Sequence& other) const {
    return rule_ == other.rule_ && start_ == other.start_ && flip_ == other.flip_;
  }

 private:
  RulePtr rule_;
  std::uint64_t start_ = 0;
  bool flip_ = false;
};

RulePtr constant_rule(bool bit);
RulePtr periodic_rule(std::vector<bool> word);
/// Word of '0'/'1' characters.
RulePtr periodic_rule(std::string_view word);
/// x_n = floor(((n+1)A + B) / 2^64) - floor((nA + B) / 2^64), i.e. the coding
/// of rotation by A/2^64 with intercept B/2^64.
RulePtr sturmian_rule(std::uint64_t alpha, std::uint64_t beta);
/// (A, B) of a Sturmian rule.
std::optional<std::pair<std::uint64_t, std::uint64_t>> sturmian_parameters(const SymbolRule& rule);
/// Parity of popcount(n).
RulePtr thue_morse_rule();
/// Counter-based pseudo-random bits.
RulePtr random_rule(std::uint64_t seed);
/// x_n = table[x_n x_{n+1} ... x_{n+width-1}] with x_n as the most significant bit.
RulePtr block_code_rule(Sequence source, std::vector<bool> table, unsigned width);

/// `prefix` followed by `rest`.
Sequence splice(std::vector<bool> prefix, Sequence rest);
/// Binary sum of 0.a and 0.b modulo 1 (carries look ahead up to 4096 bits).
Sequence add_expansions(Sequence a, Sequence b);
/// Carry into position from-1 when adding a and b (first j >= from with
/// a_j == b_j decides it).
bool carry_into(const Sequence& a, const Sequence& b, std::uint64_t from);

/// Index of the first disagreement, or `cap` if none below it.
std::uint64_t first_mismatch(const Sequence& a, const Sequence& b, std::uint64_t cap);

inline constexpr std::uint64_t kCarryLookahead = 4096;

}  // namespace furdyn
