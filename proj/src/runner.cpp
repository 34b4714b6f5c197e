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


#include "furdyn/runner.hpp"

#include <algorithm>
#include <cstdio>

#include "furdyn/error.hpp"
#include "furdyn/factor.hpp"
#include "furdyn/report.hpp"

namespace furdyn {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  fail(ErrorCode::InvalidArgument, "config key '" + key + "': " + why);
}

std::vector<std::string> strings(const json& v, const std::string& key) {
  if (!v.is_array()) bad(key, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(key, "expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) bad(key, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, const std::string& key, double lo, double hi, bool lo_open) {
  if (!v.is_array() || v.empty()) bad(key, "expected a non-empty array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    const double x = number(e, key);
    if ((lo_open ? !(x > lo) : !(x >= lo)) || !(x < hi)) bad(key, "value " + fmt(x) + " out of range");
    out.push_back(x);
  }
  return out;
}

std::uint64_t count(const json& v, const std::string& key, std::uint64_t min) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    bad(key, "expected a non-negative integer");
  }
  const auto n = v.get<std::uint64_t>();
  if (n < min) bad(key, "must be >= " + std::to_string(min));
  return n;
}

struct Cell {
  ReportHeader header;
  bool eps_is_grid = false;
};

json finish(const Cell& c, const std::string& verdict, json witness, const ExperimentConfig& cfg, bool consistent,
            const std::string& summary) {
  json doc = make_report(c.header, verdict, std::move(witness), config_to_json(cfg));
  if (c.eps_is_grid) doc["epsilon"] = nullptr;
  doc["consistent"] = consistent;
  doc["summary"] = summary;
  return canonicalize(doc);
}

Cell cell(const std::string& system, const std::string& family, const std::string& notion,
          const ExperimentConfig& cfg) {
  Cell c;
  c.header.system = system.empty() ? "none" : system;
  c.header.family = family.empty() ? "none" : family;
  c.header.notion = notion;
  c.header.seed = cfg.classify.seed;
  c.header.horizon = cfg.classify.horizon;
  return c;
}

std::vector<double> grid_of(const ExperimentConfig& cfg) {
  return cfg.epsilon ? std::vector<double>{*cfg.epsilon} : cfg.classify.eps_grid;
}

double single_eps(const ExperimentConfig& cfg) { return cfg.epsilon ? *cfg.epsilon : cfg.classify.eps_grid.front(); }

FamilyDescriptor need_family(const std::string& family, const std::string& notion) {
  if (family.empty()) fail(ErrorCode::InvalidArgument, "notion '" + notion + "' needs a family");
  return FamilyDescriptor::parse(family);
}

std::string delta_summary(const EquiReport& r) {
  return r.delta_found ? "delta=" + fmt(*r.delta_found) : std::string("delta=none");
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidArgument, "config must be a JSON object");
  ExperimentConfig c;
  bool seeded = false;
  for (const auto& [key, v] : j.items()) {
    if (key == "systems") c.systems = strings(v, key);
    else if (key == "families") c.families = strings(v, key);
    else if (key == "notions") c.notions = strings(v, key);
    else if (key == "sets") c.sets = strings(v, key);
    else if (key == "eps_grid") c.classify.eps_grid = numbers(v, key, 0, 1e300, true);
    else if (key == "a_grid") c.a_grid = numbers(v, key, 0, 1, true);
    else if (key == "delta_min") {
      if (v.is_null()) c.classify.delta_min.reset();
      else {
        const double d = number(v, key);
        if (!(d > 0)) bad(key, "must be > 0");
        c.classify.delta_min = d;
      }
    } else if (key == "delta_grid") c.classify.delta_grid = count(v, key, 1);
    else if (key == "horizon") c.classify.horizon = count(v, key, 1024);
    else if (key == "samples") c.classify.samples = count(v, key, 1);
    else if (key == "open_set_probes") c.classify.open_set_probes = count(v, key, 4);
    else if (key == "point_probes") c.classify.point_probes = count(v, key, 1);
    else if (key == "seed") {
      c.classify.seed = count(v, key, 0);
      seeded = true;
    } else if (key == "mean_margin") {
      c.classify.mean_margin = number(v, key);
      if (!(c.classify.mean_margin >= 0)) bad(key, "must be >= 0");
    } else if (key == "epsilon") {
      if (v.is_null()) c.epsilon.reset();
      else {
        const double e = number(v, key);
        if (!(e > 0)) bad(key, "must be > 0");
        c.epsilon = e;
      }
    } else if (key == "outputs") {
      if (!v.is_string()) bad(key, "expected a string");
      c.outputs = v.get<std::string>();
    } else if (key == "format") {
      if (!v.is_string()) bad(key, "expected a string");
      c.format = v.get<std::string>();
      if (c.format != "json" && c.format != "csv" && c.format != "both") bad(key, "expected json, csv or both");
    } else if (key == "lemma45_delta") {
      c.lemma45_delta = number(v, key);
      if (!(c.lemma45_delta > 0)) bad(key, "must be > 0");
    } else if (key == "lemma45_a") {
      c.lemma45_a = number(v, key);
      if (!(c.lemma45_a >= 0)) bad(key, "must be >= 0");
    } else {
      bad(key, "unknown key");
    }
  }
  if (!seeded) bad("seed", "seed is mandatory");
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json j = c.classify.to_json();
  j["systems"] = c.systems;
  j["families"] = c.families;
  j["notions"] = c.notions;
  j["sets"] = c.sets;
  j["epsilon"] = c.epsilon ? json(*c.epsilon) : json(nullptr);
  j["format"] = c.format;
  j["a_grid"] = c.a_grid;
  j["lemma45_delta"] = c.lemma45_delta;
  j["lemma45_a"] = c.lemma45_a;
  // outputs is left out so reports do not depend on where they are written
  return j;
}

const std::vector<std::string>& analyze_notions() {
  static const std::vector<std::string> n = {"f_equicontinuity",    "f_sensitivity", "mean_equicontinuity",
                                             "mean_sensitivity",    "mean_l_stable", "filter",
                                             "ramsey",              "preservation"};
  return n;
}

json run_analyze(const std::string& system, const std::string& family, const std::string& notion,
                 const ExperimentConfig& cfg) {
  const auto& known = analyze_notions();
  if (std::find(known.begin(), known.end(), notion) == known.end()) {
    std::string list;
    for (const auto& k : known) list += (list.empty() ? "" : " | ") + k;
    fail(ErrorCode::Parse, "unknown notion '" + notion + "'; expected " + list);
  }
  Cell c = cell(system, family, notion, cfg);
  ClassifyConfig cc = cfg.classify;

  if (notion == "filter" || notion == "ramsey") {
    const FamilyDescriptor f = need_family(family, notion);
    const Verdict v = notion == "filter" ? filter_check(f, cc.seed, cc.samples) : ramsey_check(f, cc.seed, cc.samples);
    c.eps_is_grid = true;
    const bool ok = notion == "filter" || v.witness.value("consistent_with_dual_filter", true);
    return finish(c, to_string(v.outcome), to_json(v), cfg, ok, "trials=" + std::to_string(cc.samples));
  }
  if (notion == "preservation") {
    const FamilyDescriptor f = need_family(family, notion);
    const FactorMap fm = make_factor(system);
    cc.eps_grid = grid_of(cfg);
    c.eps_is_grid = !cfg.epsilon;
    const Verdict v = preservation_check(fm, f, cc);
    return finish(c, to_string(v.outcome), to_json(v), cfg, !v.fails(), "openness=" + to_string(fm.openness));
  }

  const MetricSystem sys = make_system(system);
  const bool iso = sys.flags.isometric;
  if (notion == "f_equicontinuity") {
    const FamilyDescriptor f = need_family(family, notion);
    c.eps_is_grid = !cfg.epsilon;
    const EquiReport r = f_equicontinuity(sys, f, grid_of(cfg), cc);
    return finish(c, to_string(r.verdict.outcome), to_json(r), cfg, !(iso && r.verdict.fails()), delta_summary(r));
  }
  if (notion == "f_sensitivity") {
    const FamilyDescriptor f = need_family(family, notion);
    c.header.epsilon = single_eps(cfg);
    const SensReport r = f_sensitivity(sys, f, c.header.epsilon, cc);
    return finish(c, to_string(r.verdict.outcome), to_json(r), cfg, !(iso && r.verdict.holds()),
                  "open_sets=" + std::to_string(r.witness_sets.size()));
  }
  if (notion == "mean_sensitivity") {
    c.header.epsilon = single_eps(cfg);
    const SensReport r = mean_sensitivity(sys, c.header.epsilon, cc);
    return finish(c, to_string(r.verdict.outcome), to_json(r), cfg, !(iso && r.verdict.holds()),
                  "open_sets=" + std::to_string(r.witness_sets.size()));
  }
  cc.eps_grid = grid_of(cfg);
  c.eps_is_grid = !cfg.epsilon;
  const EquiReport r = notion == "mean_equicontinuity" ? mean_equicontinuity(sys, cc) : mean_l_stable(sys, cc);
  return finish(c, to_string(r.verdict.outcome), to_json(r), cfg, !(iso && r.verdict.fails()), delta_summary(r));
}

json run_dichotomy(const std::string& system, const std::string& family, const ExperimentConfig& cfg) {
  Cell c = cell(system, family, "dichotomy", cfg);
  c.eps_is_grid = true;
  const MetricSystem sys = make_system(system);
  const FamilyDescriptor f = need_family(family, "dichotomy");
  const DichotomyReport d = dichotomy_report(sys, f, cfg.classify);
  return finish(c, d.branch, to_json(d), cfg, d.consistent,
                std::string("branch=") + d.branch + ";consistent=" + (d.consistent ? "true" : "false"));
}

std::vector<json> run_lemmas(const std::string& system, const std::string& family, const ExperimentConfig& cfg) {
  const MetricSystem sys = make_system(system);
  const ClassifyConfig& cc = cfg.classify;
  std::vector<json> out;

  {
    Cell c = cell(system, FamilyDescriptor::upper_density_above(cfg.lemma45_a).to_string(), "lemma45", cfg);
    const double dp = lemma45_delta_prime(sys, cfg.lemma45_delta, cfg.lemma45_a);
    c.header.epsilon = dp;
    const Verdict v = lemma45_check(sys, cfg.lemma45_delta, cfg.lemma45_a, cc);
    out.push_back(finish(c, to_string(v.outcome), to_json(v), cfg, !v.fails(), "delta_prime=" + fmt(dp)));
  }
  {
    Cell c = cell(system, "mean", "lemma43_44", cfg);
    c.eps_is_grid = true;
    const auto vs = lemma43_44_check(sys, cfg.a_grid, cc);
    json arr = json::array();
    bool any_fail = false, all_hold = true;
    std::size_t applied = 0;
    for (const Verdict& v : vs) {
      arr.push_back(to_json(v));
      any_fail = any_fail || v.fails();
      all_hold = all_hold && v.holds();
      if (!v.witness.contains("status")) ++applied;
    }
    out.push_back(finish(c, any_fail ? "Fails" : all_hold ? "Holds" : "Inconclusive", {{"checks", arr}}, cfg, !any_fail,
                         "applied=" + std::to_string(applied) + "/" + std::to_string(vs.size())));
  }
  if (!family.empty()) {
    Cell c = cell(system, family, "lemma31", cfg);
    c.header.epsilon = single_eps(cfg);
    const Verdict v = lemma31_invariance_check(sys, FamilyDescriptor::parse(family), c.header.epsilon, cc);
    out.push_back(finish(c, to_string(v.outcome), to_json(v), cfg, !v.fails(),
                         "premises=" + std::to_string(v.witness.value("premises_holding", std::size_t{0}))));
  }
  return out;
}

}  // namespace furdyn
