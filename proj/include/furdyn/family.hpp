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

// Symbolic Furstenberg families over Z+ and three-valued finite-horizon
// membership verdicts.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "furdyn/zset.hpp"

namespace furdyn {

enum class FamilyKind {
  InfiniteSets,
  Cofinite,
  Syndetic,
  Thick,
  ThicklySyndetic,
  UpperDensityAbove,
  LowerDensityAtLeast,
  BanachUpperAbove,
  BanachLowerAtLeast,
  DualOf,
};

class FamilyDescriptor {
 public:
  static FamilyDescriptor infinite_sets() { return FamilyDescriptor(FamilyKind::InfiniteSets); }
  static FamilyDescriptor cofinite() { return FamilyDescriptor(FamilyKind::Cofinite); }
  static FamilyDescriptor syndetic() { return FamilyDescriptor(FamilyKind::Syndetic); }
  static FamilyDescriptor thick() { return FamilyDescriptor(FamilyKind::Thick); }
  static FamilyDescriptor thickly_syndetic() { return FamilyDescriptor(FamilyKind::ThicklySyndetic); }
  /// a in [0, 1)
  static FamilyDescriptor upper_density_above(double a);
  /// b in (0, 1]
  static FamilyDescriptor lower_density_at_least(double b);
  static FamilyDescriptor banach_upper_above(double a);
  static FamilyDescriptor banach_lower_at_least(double b);
  /// Symbolic dual; DualOf(DualOf(f)) collapses to f.
  static FamilyDescriptor dual_of(const FamilyDescriptor& inner);

  /// Grammar: B | cf | synd | thick | tsynd | ud>a | ld>=b | bud>a | bld>=b | k(<desc>)
  static FamilyDescriptor parse(std::string_view text);
  std::string to_string() const;

  FamilyKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }
  /// Only valid for DualOf.
  const FamilyDescriptor& inner() const;

  bool operator==(const FamilyDescriptor& other) const;

 private:
  explicit FamilyDescriptor(FamilyKind kind, double param = 0.0) : kind_(kind), param_(param) {}

  FamilyKind kind_;
  double param_;
  std::shared_ptr<const FamilyDescriptor> inner_;
};

/// Normalized dual from the exact table (kB = cf, k(thick) = synd,
/// k(ud>a) = ld>=1-a, k(bud>a) = bld>=1-a, tsynd stays symbolic).
FamilyDescriptor dual(const FamilyDescriptor& f);
/// DualOf(g) rewritten through the dual table; other descriptors unchanged.
FamilyDescriptor normalize(const FamilyDescriptor& f);
bool is_translation_invariant(const FamilyDescriptor& f);
/// Families implemented here, with representative parameters.
std::vector<FamilyDescriptor> implemented_families();

enum class Outcome { Holds, Fails, Inconclusive };
std::string to_string(Outcome o);
Outcome negate(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  nlohmann::json witness = nlohmann::json::object();
  std::size_t horizon_used = 0;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
};

struct VerdictPolicy {
  double syndetic_gap_frac = 0.02;
  double refute_gap_frac = 0.25;
  /// Defaults to ceil(log2 N).
  std::optional<std::size_t> thick_refute_run;
  double margin = 0.02;
  double refute_density = 0.1;
  /// Defaults to floor(sqrt N).
  std::optional<std::size_t> min_banach_window;
};

Verdict contains(const FamilyDescriptor& f, const WindowSet& w, const VerdictPolicy& policy = {});

/// A window with an exact tail hint representing a member of f.
WindowSet sample_member(const FamilyDescriptor& f, std::size_t horizon, std::uint64_t seed);
/// A window representing a set outside f.
WindowSet sample_non_member(const FamilyDescriptor& f, std::size_t horizon, std::uint64_t seed);

/// Sampled refutation search for F·F ⊂ F.
Verdict filter_check(const FamilyDescriptor& f, std::uint64_t sampler_seed, std::size_t trials);
/// Sampled refutation search for the Ramsey property, cross-checked against
/// filter_check(dual(f)).
Verdict ramsey_check(const FamilyDescriptor& f, std::uint64_t sampler_seed, std::size_t trials);

}  // namespace furdyn
