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

#include "furdyn/selftest.hpp"

#include <string>
#include <vector>

#include "furdyn/family.hpp"
#include "furdyn/random.hpp"

namespace furdyn {
namespace {

std::vector<FamilyDescriptor> descriptor_pool() {
  auto pool = implemented_families();
  for (const char* s : {"k(ud>0.3)", "k(B)", "k(k(synd))", "ud>0", "ld>=1", "bud>0.5", "k(bld>=0.25)"}) {
    pool.push_back(FamilyDescriptor::parse(s));
  }
  return pool;
}

}  // namespace

SelftestResult run_selftest(std::uint64_t seed) {
  SelftestResult out;
  out.passed = true;
  auto record = [&](const std::string& name, bool ok, nlohmann::json detail) {
    out.checks.push_back({{"check", name}, {"passed", ok}, {"detail", std::move(detail)}});
    out.passed = out.passed && ok;
  };

  const auto pool = descriptor_pool();
  {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& f : pool) {
      const FamilyDescriptor g = normalize(f);
      if (!(dual(dual(g)) == g) || !(dual(dual(f)) == g)) bad.push_back(f.to_string());
    }
    record("dual_involution", bad.empty(), {{"families", pool.size()}, {"violations", bad}});
  }
  {
    const std::vector<std::pair<std::string, std::string>> table = {
        {"B", "cf"},           {"cf", "B"},          {"thick", "synd"},           {"synd", "thick"},
        {"ud>0.3", "ld>=0.7"}, {"ld>=0.7", "ud>0.3"}, {"bud>0.3", "bld>=0.7"}, {"bld>=0.7", "bud>0.3"},
        {"tsynd", "k(tsynd)"}, {"k(tsynd)", "tsynd"}};
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& [f, kf] : table) {
      if (dual(FamilyDescriptor::parse(f)).to_string() != kf) bad.push_back(f);
    }
    record("dual_table", bad.empty(), {{"violations", bad}});
  }
  {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& f : pool) {
      if (!(FamilyDescriptor::parse(f.to_string()) == f)) bad.push_back(f.to_string());
      if (!is_translation_invariant(f)) bad.push_back("invariance:" + f.to_string());
    }
    record("parse_round_trip_and_invariance", bad.empty(), {{"violations", bad}});
  }
  {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& f : implemented_families()) {
      for (std::uint64_t s = 0; s < 100; ++s) {
        const std::uint64_t k = derive_seed(seed, s);
        if (!contains(f, sample_member(f, 4096, k)).holds()) bad.push_back({f.to_string(), "member", k});
        if (!contains(f, sample_non_member(f, 4096, k)).fails()) bad.push_back({f.to_string(), "non_member", k});
      }
    }
    record("sampler_self_consistency", bad.empty(), {{"seeds_per_family", 100}, {"violations", bad}});
  }
  {
    const std::vector<std::tuple<std::string, std::string, Outcome>> expected = {
        {"filter", "cf", Outcome::Holds},   {"filter", "synd", Outcome::Fails}, {"filter", "B", Outcome::Fails},
        {"ramsey", "B", Outcome::Holds},    {"ramsey", "thick", Outcome::Fails}, {"ramsey", "cf", Outcome::Fails}};
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& [property, fs, want] : expected) {
      const auto f = FamilyDescriptor::parse(fs);
      const Verdict v = property == "filter" ? filter_check(f, seed, 100) : ramsey_check(f, seed, 100);
      const bool row_ok = v.outcome == want;
      ok = ok && row_ok;
      rows.push_back({{"property", property}, {"family", fs}, {"verdict", to_string(v.outcome)}, {"ok", row_ok}});
    }
    record("filter_and_ramsey", ok, {{"rows", rows}});
  }
  {
    nlohmann::json bad = nlohmann::json::array();
    Rng rng(derive_seed(seed, 77));
    for (int t = 0; t < 200; ++t) {
      WindowSet::Bits bits(256);
      const double p = rng.uniform();
      for (std::size_t i = 0; i < 256; ++i) {
        if (rng.uniform() < p) bits.set(i);
      }
      const WindowSet w(std::move(bits));
      for (const auto& f : implemented_families()) {
        const Verdict kv = contains(FamilyDescriptor::dual_of(f), w);
        const Verdict v = contains(f, complement(w));
        if ((kv.holds() && !v.fails()) || (kv.fails() && !v.holds())) bad.push_back({f.to_string(), t});
      }
    }
    record("dual_consistency", bad.empty(), {{"windows", 200}, {"violations", bad}});
  }
  return out;
}

}  // namespace furdyn
