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

#include "furdyn/sequence.hpp"

#include <bit>
#include <numeric>

#include "furdyn/error.hpp"
#include "furdyn/random.hpp"

namespace furdyn {
namespace {

using u128 = unsigned __int128;

class ConstantRule final : public SymbolRule {
 public:
  explicit ConstantRule(bool bit) : bit_(bit) {}
  bool at(std::uint64_t) const override { return bit_; }
  std::string describe() const override { return bit_ ? "const(1)" : "const(0)"; }
  std::optional<Periodicity> periodicity() const override { return Periodicity{0, 1}; }
  bool bit() const { return bit_; }

 private:
  bool bit_;
};

class PeriodicRule final : public SymbolRule {
 public:
  explicit PeriodicRule(std::vector<bool> word) : word_(std::move(word)) {}
  bool at(std::uint64_t n) const override { return word_[n % word_.size()]; }
  std::string describe() const override {
    std::string s = "periodic(";
    for (bool b : word_) s += b ? '1' : '0';
    return s + ")";
  }
  std::optional<Periodicity> periodicity() const override { return Periodicity{0, word_.size()}; }

 private:
  std::vector<bool> word_;
};

class SturmianRule final : public SymbolRule {
 public:
  SturmianRule(std::uint64_t alpha, std::uint64_t beta) : alpha_(alpha), beta_(beta) {}
  bool at(std::uint64_t n) const override {
    const u128 lo = static_cast<u128>(n) * alpha_ + beta_;
    const u128 hi = lo + alpha_;
    return (hi >> 64) != (lo >> 64);
  }
  std::string describe() const override {
    return "sturmian(" + std::to_string(alpha_) + "/2^64," + std::to_string(beta_) + "/2^64)";
  }
  std::uint64_t alpha() const { return alpha_; }
  std::uint64_t beta() const { return beta_; }

 private:
  std::uint64_t alpha_;
  std::uint64_t beta_;
};

class ThueMorseRule final : public SymbolRule {
 public:
  bool at(std::uint64_t n) const override { return (std::popcount(n) & 1) != 0; }
  std::string describe() const override { return "thue_morse"; }
};

class RandomRule final : public SymbolRule {
 public:
  explicit RandomRule(std::uint64_t seed) : seed_(seed) {}
  bool at(std::uint64_t n) const override { return ((mix64(seed_ ^ mix64(n >> 6)) >> (n & 63)) & 1) != 0; }
  std::string describe() const override { return "random(" + std::to_string(seed_) + ")"; }

 private:
  std::uint64_t seed_;
};

class SplicedRule final : public SymbolRule {
 public:
  SplicedRule(std::vector<bool> prefix, Sequence rest) : prefix_(std::move(prefix)), rest_(std::move(rest)) {}
  bool at(std::uint64_t n) const override { return n < prefix_.size() ? prefix_[n] : rest_.at(n - prefix_.size()); }
  std::string describe() const override {
    return "splice(" + std::to_string(prefix_.size()) + " bits," + rest_.describe() + ")";
  }
  std::optional<Periodicity> periodicity() const override {
    const auto p = rest_.periodicity();
    if (!p) return std::nullopt;
    return Periodicity{prefix_.size() + p->first, p->second};
  }
  std::optional<Sequence> normalize(std::uint64_t start, bool flip) const override {
    if (start < prefix_.size()) return std::nullopt;
    const Sequence s = rest_.shifted(start - prefix_.size());
    return flip ? s.flipped() : s;
  }

 private:
  std::vector<bool> prefix_;
  Sequence rest_;
};

class SumRule final : public SymbolRule {
 public:
  SumRule(Sequence a, Sequence b) : a_(std::move(a)), b_(std::move(b)) {}
  bool at(std::uint64_t n) const override { return (a_.at(n) != b_.at(n)) != carry_into(a_, b_, n + 1); }
  std::string describe() const override { return "sum(" + a_.describe() + "," + b_.describe() + ")"; }
  std::optional<Periodicity> periodicity() const override {
    const auto pa = a_.periodicity();
    const auto pb = b_.periodicity();
    if (!pa || !pb) return std::nullopt;
    const std::uint64_t period = std::lcm(pa->second, pb->second);
    if (period > (std::uint64_t{1} << 20)) return std::nullopt;
    return Periodicity{std::max(pa->first, pb->first), period};
  }

 private:
  Sequence a_;
  Sequence b_;
};

class BlockCodeRule final : public SymbolRule {
 public:
  BlockCodeRule(Sequence source, std::vector<bool> table, unsigned width)
      : source_(std::move(source)), table_(std::move(table)), width_(width) {}
  bool at(std::uint64_t n) const override {
    std::size_t index = 0;
    for (unsigned k = 0; k < width_; ++k) index = (index << 1) | (source_.at(n + k) ? 1 : 0);
    return table_[index];
  }
  std::string describe() const override {
    std::string t;
    for (bool b : table_) t += b ? '1' : '0';
    return "code(" + t + "," + source_.describe() + ")";
  }
  std::optional<Periodicity> periodicity() const override { return source_.periodicity(); }

 private:
  Sequence source_;
  std::vector<bool> table_;
  unsigned width_;
};

bool is_zero_sequence(const Sequence& s) {
  const auto* c = dynamic_cast<const ConstantRule*>(s.rule().get());
  return c != nullptr && c->bit() == s.flip();
}

}  // namespace

std::optional<Sequence> SymbolRule::normalize(std::uint64_t, bool) const { return std::nullopt; }

Sequence::Sequence() : rule_(constant_rule(false)) {}

Sequence::Sequence(RulePtr rule, std::uint64_t start, bool flip) : rule_(std::move(rule)), start_(start), flip_(flip) {
  if (!rule_) fail(ErrorCode::InvalidArgument, "sequence needs a rule");
  if (auto simpler = rule_->normalize(start_, flip_)) *this = *simpler;
}

Sequence Sequence::shifted(std::uint64_t k) const { return Sequence(rule_, start_ + k, flip_); }

void Sequence::advance(std::uint64_t k) {
  start_ += k;
  if (auto simpler = rule_->normalize(start_, flip_)) *this = *simpler;
}

std::vector<bool> Sequence::prefix(std::size_t n) const {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

std::optional<Periodicity> Sequence::periodicity() const {
  const auto p = rule_->periodicity();
  if (!p) return std::nullopt;
  return Periodicity{p->first > start_ ? p->first - start_ : 0, p->second};
}

std::optional<StateKey> Sequence::state_key() const {
  const auto p = rule_->periodicity();
  if (!p || start_ < p->first) return std::nullopt;
  return StateKey{rule_.get(), (start_ - p->first) % p->second, flip_};
}

std::string Sequence::describe() const {
  std::string s = rule_->describe();
  if (start_ != 0) s += "@" + std::to_string(start_);
  if (flip_) s = "~" + s;
  return s;
}

RulePtr constant_rule(bool bit) {
  static const RulePtr zero = std::make_shared<ConstantRule>(false);
  static const RulePtr one = std::make_shared<ConstantRule>(true);
  return bit ? one : zero;
}

RulePtr periodic_rule(std::vector<bool> word) {
  if (word.empty()) fail(ErrorCode::InvalidArgument, "periodic word must be non-empty");
  return std::make_shared<PeriodicRule>(std::move(word));
}

RulePtr periodic_rule(std::string_view word) {
  std::vector<bool> bits;
  for (char c : word) {
    if (c != '0' && c != '1') fail(ErrorCode::Parse, "periodic word must be a string of 0/1, got '" + std::string(word) + "'");
    bits.push_back(c == '1');
  }
  return periodic_rule(std::move(bits));
}

RulePtr sturmian_rule(std::uint64_t alpha, std::uint64_t beta) { return std::make_shared<SturmianRule>(alpha, beta); }

std::optional<std::pair<std::uint64_t, std::uint64_t>> sturmian_parameters(const SymbolRule& rule) {
  const auto* s = dynamic_cast<const SturmianRule*>(&rule);
  if (s == nullptr) return std::nullopt;
  return std::pair{s->alpha(), s->beta()};
}

RulePtr thue_morse_rule() {
  static const RulePtr tm = std::make_shared<ThueMorseRule>();
  return tm;
}

RulePtr random_rule(std::uint64_t seed) { return std::make_shared<RandomRule>(seed); }

RulePtr block_code_rule(Sequence source, std::vector<bool> table, unsigned width) {
  if (width == 0 || width > 20 || table.size() != (std::size_t{1} << width)) {
    fail(ErrorCode::InvalidArgument, "block code table must have 2^width entries");
  }
  return std::make_shared<BlockCodeRule>(std::move(source), std::move(table), width);
}

Sequence splice(std::vector<bool> prefix, Sequence rest) {
  if (prefix.empty()) return rest;
  return Sequence(std::make_shared<SplicedRule>(std::move(prefix), std::move(rest)));
}

Sequence add_expansions(Sequence a, Sequence b) {
  if (is_zero_sequence(a)) return b;
  if (is_zero_sequence(b)) return a;
  return Sequence(std::make_shared<SumRule>(std::move(a), std::move(b)));
}

bool carry_into(const Sequence& a, const Sequence& b, std::uint64_t from) {
  for (std::uint64_t j = from; j < from + kCarryLookahead; ++j) {
    const bool x = a.at(j);
    if (x == b.at(j)) return x;
  }
  return false;
}

std::uint64_t first_mismatch(const Sequence& a, const Sequence& b, std::uint64_t cap) {
  if (a.same_as(b)) return cap;
  for (std::uint64_t i = 0; i < cap; ++i) {
    if (a.at(i) != b.at(i)) return i;
  }
  return cap;
}

}  // namespace furdyn
