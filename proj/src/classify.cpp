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

#include "furdyn/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "furdyn/error.hpp"
#include "furdyn/random.hpp"

namespace furdyn {
namespace {

using nlohmann::json;

/// Judges a single pair trace: Holds = good pair, Fails = separating pair.
using PairJudge = std::function<Verdict(const SeparationTrace&)>;

enum class PairMode { CenterToBall, PairsInBall };

struct GridResult {
  Outcome outcome = Outcome::Inconclusive;
  std::optional<double> delta;
  json per_delta = json::array();
  std::size_t pairs_tested = 0;
};

double round_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

void check_eps(double eps) {
  if (!(eps > 0)) fail(ErrorCode::InvalidArgument, "epsilon must be positive");
}

void check_eps_grid(const std::vector<double>& grid) {
  if (grid.empty()) fail(ErrorCode::InvalidArgument, "eps_grid must be non-empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_eps(grid[i]);
    if (i > 0 && grid[i] >= grid[i - 1]) fail(ErrorCode::InvalidArgument, "eps_grid must be strictly descending");
  }
}

std::vector<std::pair<Point, Point>> make_pairs(const MetricSystem& sys, const Point& x, double delta,
                                                PairMode mode, std::uint64_t seed, std::size_t samples) {
  std::vector<std::pair<Point, Point>> pairs;
  const auto structured = structured_ball_points(sys, x, delta);
  const auto random = sample_ball(sys, x, delta, seed, samples, SampleMode::Random);
  if (mode == PairMode::CenterToBall) {
    for (const Point& y : structured) pairs.emplace_back(x, y);
    for (const Point& y : random) pairs.emplace_back(x, y);
  } else {
    for (std::size_t i = 0; i + 1 < structured.size(); i += 2) pairs.emplace_back(structured[i], structured[i + 1]);
    for (std::size_t i = 0; i + 1 < random.size(); i += 2) pairs.emplace_back(random[i], random[i + 1]);
    if (!random.empty()) pairs.emplace_back(x, random.front());
  }
  return pairs;
}

/// For each delta (descending) test every pair; the first delta with only
/// Holds pairs wins. Fails only if every delta has a separating pair.
/// Long grids try the smallest delta first and, if it holds, bisect upward.
GridResult delta_grid_search(const MetricSystem& sys, const std::vector<Point>& centers, double eps,
                             const PairJudge& judge, PairMode mode, const ClassifyConfig& cfg, std::uint64_t tag) {
  GridResult out;
  const auto deltas = cfg.deltas(eps);
  std::vector<std::optional<Outcome>> seen(deltas.size());
  auto eval = [&](std::size_t k) {
    if (seen[k]) return *seen[k];
    const double delta = deltas[k];
    Outcome at_delta = Outcome::Holds;
    std::size_t tested = 0;
    json entry = {{"delta", delta}};
    for (std::size_t c = 0; c < centers.size() && at_delta != Outcome::Fails; ++c) {
      const auto pairs = make_pairs(sys, centers[c], delta, mode, derive_seed(cfg.seed, tag, c * 64 + k), cfg.samples);
      for (const auto& [y, z] : pairs) {
        const Verdict v = judge(separation_trace(sys, y, z, cfg.horizon));
        ++tested;
        if (v.fails()) {
          at_delta = Outcome::Fails;
          entry["refuting_pair"] = {y.describe(), z.describe()};
          entry["refutation"] = v.witness;
          break;
        }
        if (!v.holds()) at_delta = Outcome::Inconclusive;
      }
    }
    out.pairs_tested += tested;
    entry["verdict"] = to_string(at_delta);
    entry["pairs_tested"] = tested;
    out.per_delta.push_back(std::move(entry));
    seen[k] = at_delta;
    return at_delta;
  };
  auto holds_at = [&](std::size_t k) {
    out.outcome = Outcome::Holds;
    out.delta = deltas[k];
    return out;
  };

  constexpr std::size_t kBisectFrom = 16;
  if (deltas.size() > kBisectFrom && eval(deltas.size() - 1) == Outcome::Holds) {
    std::size_t lo = 0, best = deltas.size() - 1;
    while (lo < best) {
      const std::size_t mid = lo + (best - lo) / 2;
      if (eval(mid) == Outcome::Holds) best = mid;
      else lo = mid + 1;
    }
    return holds_at(best);
  }
  bool all_refuted = true;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const Outcome at_delta = eval(k);
    if (at_delta == Outcome::Holds) return holds_at(k);
    if (at_delta != Outcome::Fails) all_refuted = false;
  }
  out.outcome = all_refuted ? Outcome::Fails : Outcome::Inconclusive;
  return out;
}

PairJudge family_judge(const FamilyDescriptor& f, double eps, const ClassifyConfig& cfg) {
  return [f, eps, &cfg](const SeparationTrace& t) { return contains(f, hitting_set(t, eps, false), cfg.policy); };
}

PairJudge mean_judge(double eps, double margin) {
  return [eps, margin](const SeparationTrace& t) {
    const BirkhoffStats b = birkhoff(t);
    json w = {{"birkhoff_limsup", b.limsup}, {"birkhoff_liminf", b.liminf}, {"eps", eps}, {"margin", margin}};
    Outcome o = Outcome::Inconclusive;
    if (b.limsup < eps - margin) o = Outcome::Holds;
    else if (b.limsup > eps + margin) o = Outcome::Fails;
    return Verdict{o, std::move(w), t.values.size()};
  };
}

PairJudge l_stable_judge(double eps, double margin) {
  return [eps, margin](const SeparationTrace& t) {
    const auto bad = WindowSet::from_predicate(t.values.size(), [&](std::size_t i) { return t.values[i] >= eps; });
    const double upper = density_profile(bad, 1).upper_est;
    json w = {{"bad_time_upper_density", upper}, {"eps", eps}, {"margin", margin}};
    Outcome o = Outcome::Inconclusive;
    if (upper < eps - margin) o = Outcome::Holds;
    else if (upper > eps + margin) o = Outcome::Fails;
    return Verdict{o, std::move(w), t.values.size()};
  };
}

EquiReport point_report(std::string notion, const GridResult& g, double eps, const ClassifyConfig& cfg,
                        json extra) {
  EquiReport r;
  r.notion = std::move(notion);
  extra["eps"] = eps;
  extra["per_delta"] = g.per_delta;
  if (g.delta) extra["delta_found"] = *g.delta;
  r.verdict = Verdict{g.outcome, std::move(extra), cfg.horizon};
  r.delta_found = g.delta;
  r.samples = {{"pairs_tested", g.pairs_tested}, {"samples_per_ball", cfg.samples}};
  r.config_echo = cfg.to_json();
  return r;
}

/// For every eps some delta: Holds; some eps refuted at every delta: Fails.
EquiReport global_report(std::string notion, const MetricSystem& sys, const std::vector<double>& eps_grid,
                         const std::function<PairJudge(double)>& judge_for, const ClassifyConfig& cfg,
                         std::uint64_t tag, json extra) {
  check_eps_grid(eps_grid);
  const auto centers = sample_points(sys, cfg.point_probes, derive_seed(cfg.seed, tag));
  bool all_hold = true;
  bool any_refuted = false;
  std::size_t tested = 0;
  std::optional<double> delta;
  json per_eps = json::array();
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double eps = eps_grid[i];
    const GridResult g = delta_grid_search(sys, centers, eps, judge_for(eps), PairMode::CenterToBall, cfg, tag + i + 1);
    tested += g.pairs_tested;
    per_eps.push_back({{"eps", eps}, {"verdict", to_string(g.outcome)}, {"per_delta", g.per_delta}});
    if (g.outcome == Outcome::Holds) {
      delta = g.delta;
    } else {
      all_hold = false;
    }
    if (g.outcome == Outcome::Fails) {
      any_refuted = true;
      break;
    }
  }
  EquiReport r;
  r.notion = std::move(notion);
  const Outcome o = any_refuted ? Outcome::Fails : (all_hold ? Outcome::Holds : Outcome::Inconclusive);
  extra["per_eps"] = std::move(per_eps);
  extra["centers"] = cfg.point_probes;
  if (o == Outcome::Holds) {
    r.delta_found = delta;
    extra["delta_found"] = *delta;
  }
  r.verdict = Verdict{o, std::move(extra), cfg.horizon};
  r.samples = {{"pairs_tested", tested}, {"samples_per_ball", cfg.samples}, {"centers", cfg.point_probes}};
  r.config_echo = cfg.to_json();
  return r;
}

struct Probe {
  Point center;
  double radius;
};

std::vector<Probe> open_set_probes(const MetricSystem& sys, double eps, const ClassifyConfig& cfg,
                                   std::uint64_t tag) {
  const std::size_t per_radius = std::max<std::size_t>(1, cfg.open_set_probes / 4);
  const auto centers = sample_points(sys, per_radius, derive_seed(cfg.seed, tag));
  std::vector<Probe> out;
  for (double div : {4.0, 8.0, 16.0, 32.0}) {
    for (const Point& c : centers) out.push_back({c, eps / div});
  }
  return out;
}

Verdict not_applicable(std::string reason, json extra, std::size_t horizon) {
  extra["status"] = "not_applicable";
  extra["reason"] = std::move(reason);
  return Verdict{Outcome::Holds, std::move(extra), horizon};
}

}  // namespace

std::vector<double> ClassifyConfig::deltas(double eps) const {
  std::vector<double> out;
  if (delta_min) {
    for (double d = eps; d >= *delta_min && out.size() < 1100; d /= 2) out.push_back(d);
    if (out.empty()) out.push_back(eps);
  } else {
    for (std::size_t k = 0; k < std::max<std::size_t>(1, delta_grid); ++k) out.push_back(std::ldexp(eps, -static_cast<int>(k)));
  }
  return out;
}

json ClassifyConfig::to_json() const {
  json j = {{"horizon", horizon},
            {"samples", samples},
            {"delta_grid", delta_grid},
            {"open_set_probes", open_set_probes},
            {"point_probes", point_probes},
            {"eps_grid", eps_grid},
            {"seed", seed},
            {"mean_margin", mean_margin},
            {"policy",
             {{"syndetic_gap_frac", policy.syndetic_gap_frac},
              {"refute_gap_frac", policy.refute_gap_frac},
              {"margin", policy.margin},
              {"refute_density", policy.refute_density}}}};
  j["delta_min"] = delta_min ? json(*delta_min) : json(nullptr);
  if (policy.thick_refute_run) j["policy"]["thick_refute_run"] = *policy.thick_refute_run;
  if (policy.min_banach_window) j["policy"]["min_banach_window"] = *policy.min_banach_window;
  return j;
}

EquiReport f_equi_point(const MetricSystem& sys, const Point& x, const FamilyDescriptor& f, double eps,
                        const ClassifyConfig& cfg) {
  check_eps(eps);
  const GridResult g = delta_grid_search(sys, {x}, eps, family_judge(f, eps, cfg), PairMode::CenterToBall, cfg, 101);
  return point_report("f_equi_point", g, eps, cfg, {{"family", f.to_string()}, {"point", x.describe()}});
}

EquiReport f_equicontinuity(const MetricSystem& sys, const FamilyDescriptor& f, const std::vector<double>& eps_grid,
                            const ClassifyConfig& cfg) {
  return global_report(
      "f_equicontinuity", sys, eps_grid, [&](double eps) { return family_judge(f, eps, cfg); }, cfg, 200,
      {{"family", f.to_string()}});
}

EquiReport eq_eps_f_member(const MetricSystem& sys, const Point& x, double eps, const FamilyDescriptor& f,
                           const ClassifyConfig& cfg) {
  check_eps(eps);
  const GridResult g = delta_grid_search(sys, {x}, eps, family_judge(f, eps, cfg), PairMode::PairsInBall, cfg, 301);
  return point_report("eq_eps_f", g, eps, cfg, {{"family", f.to_string()}, {"point", x.describe()}});
}

SensReport f_sensitivity(const MetricSystem& sys, const FamilyDescriptor& f, double eps, const ClassifyConfig& cfg) {
  check_eps(eps);
  SensReport r;
  r.notion = "f_sensitivity";
  bool all_hold = true;
  bool refuted = false;
  std::size_t probed = 0;
  const auto probes = open_set_probes(sys, eps, cfg, 400);
  for (std::size_t i = 0; i < probes.size() && !refuted; ++i) {
    const auto& [center, radius] = probes[i];
    const DiamTrace dt = diam_trace(sys, center, radius, cfg.horizon, cfg.samples, derive_seed(cfg.seed, 401, i));
    const WindowSet s = sensitivity_set(dt, eps);
    const Verdict v = contains(f, s, cfg.policy);
    ++probed;
    r.witness_sets.push_back({{"center", center.describe()},
                              {"radius", radius},
                              {"exact", dt.exact},
                              {"verdict", to_string(v.outcome)},
                              {"set", to_rle(s)},
                              {"tail_hint", describe_hint(s.tail_hint())}});
    if (v.fails()) refuted = true;
    if (!v.holds()) all_hold = false;
  }
  const Outcome o = refuted ? Outcome::Fails : (all_hold ? Outcome::Holds : Outcome::Inconclusive);
  r.verdict = Verdict{o, {{"family", f.to_string()}, {"eps", eps}, {"open_sets_probed", probed}}, cfg.horizon};
  return r;
}

EquiReport mean_equicontinuity(const MetricSystem& sys, const ClassifyConfig& cfg) {
  return global_report(
      "mean_equicontinuity", sys, cfg.eps_grid, [&](double eps) { return mean_judge(eps, cfg.mean_margin); }, cfg,
      500, json::object());
}

EquiReport mean_equi_point(const MetricSystem& sys, const Point& x, const ClassifyConfig& cfg) {
  check_eps_grid(cfg.eps_grid);
  EquiReport last;
  for (double eps : cfg.eps_grid) {
    const GridResult g =
        delta_grid_search(sys, {x}, eps, mean_judge(eps, cfg.mean_margin), PairMode::CenterToBall, cfg, 501);
    last = point_report("mean_equi_point", g, eps, cfg, {{"point", x.describe()}});
    if (!last.verdict.holds()) break;
  }
  return last;
}

SensReport mean_sensitivity(const MetricSystem& sys, double eps, const ClassifyConfig& cfg) {
  check_eps(eps);
  SensReport r;
  r.notion = "mean_sensitivity";
  const double m = cfg.mean_margin;
  bool all_hold = true;
  bool refuted = false;
  const auto probes = open_set_probes(sys, eps, cfg, 600);
  for (std::size_t i = 0; i < probes.size() && !refuted; ++i) {
    const auto& [center, radius] = probes[i];
    Outcome probe = Outcome::Fails;
    double best = 0;
    for (const auto& [y, z] :
         make_pairs(sys, center, radius, PairMode::CenterToBall, derive_seed(cfg.seed, 601, i), cfg.samples)) {
      const double b = birkhoff(separation_trace(sys, y, z, cfg.horizon)).limsup;
      best = std::max(best, b);
      if (b > eps + m) {
        probe = Outcome::Holds;
        break;
      }
      if (b >= eps - m) probe = Outcome::Inconclusive;
    }
    r.witness_sets.push_back({{"center", center.describe()},
                              {"radius", radius},
                              {"verdict", to_string(probe)},
                              {"max_birkhoff_limsup", best}});
    if (probe == Outcome::Fails) refuted = true;
    if (probe != Outcome::Holds) all_hold = false;
  }
  const Outcome o = refuted ? Outcome::Fails : (all_hold ? Outcome::Holds : Outcome::Inconclusive);
  r.verdict = Verdict{o, {{"eps", eps}, {"margin", m}, {"open_sets_probed", r.witness_sets.size()}}, cfg.horizon};
  return r;
}

EquiReport mean_l_stable(const MetricSystem& sys, const ClassifyConfig& cfg) {
  return global_report(
      "mean_l_stable", sys, cfg.eps_grid, [&](double eps) { return l_stable_judge(eps, cfg.mean_margin); }, cfg, 700,
      json::object());
}

DichotomyReport dichotomy_report(const MetricSystem& sys, const FamilyDescriptor& f, const ClassifyConfig& cfg) {
  if (!sys.flags.transitive) {
    fail(ErrorCode::Hypothesis, "dichotomy needs a system known to be transitive; '" + sys.spec + "' is not flagged");
  }
  const FamilyDescriptor kf = dual(f);
  if (!is_translation_invariant(kf)) {
    fail(ErrorCode::Hypothesis, "dichotomy needs a translation-invariant dual family; " + kf.to_string() + " is not");
  }
  check_eps_grid(cfg.eps_grid);
  DichotomyReport d;
  d.family = f;
  d.dual_invariant = true;

  // sensitive branch: some eps with every probed open set in F
  bool sens_hold = false;
  bool sens_all_fail = true;
  json per_eps = json::array();
  for (double eps : cfg.eps_grid) {
    SensReport s = f_sensitivity(sys, f, eps, cfg);
    per_eps.push_back({{"eps", eps}, {"verdict", to_string(s.verdict.outcome)}, {"witness", s.verdict.witness},
                       {"open_sets", s.witness_sets}});
    if (s.verdict.holds()) sens_hold = true;
    if (!s.verdict.fails()) sens_all_fail = false;
    if (sens_hold) break;
  }
  d.sens.notion = "f_sensitivity";
  d.sens.witness_sets = per_eps;
  d.sens.verdict = Verdict{sens_hold ? Outcome::Holds : (sens_all_fail ? Outcome::Fails : Outcome::Inconclusive),
                           {{"family", f.to_string()}, {"eps_grid", cfg.eps_grid}}, cfg.horizon};

  // almost equicontinuous branch: a kF-equicontinuous point among the samples
  const auto points = sample_points(sys, cfg.point_probes, derive_seed(cfg.seed, 800));
  bool some_point = false;
  bool all_points_fail = true;
  std::optional<double> delta;
  std::size_t tested = 0;
  json per_point = json::array();
  for (const Point& x : points) {
    Outcome point = Outcome::Holds;
    json eps_results = json::array();
    for (double eps : cfg.eps_grid) {
      const EquiReport r = f_equi_point(sys, x, kf, eps, cfg);
      tested += r.samples["pairs_tested"].get<std::size_t>();
      eps_results.push_back({{"eps", eps}, {"verdict", to_string(r.verdict.outcome)},
                             {"per_delta", r.verdict.witness["per_delta"]}});
      if (r.verdict.fails()) {
        point = Outcome::Fails;
        break;
      }
      if (!r.verdict.holds()) point = Outcome::Inconclusive;
      if (r.delta_found) delta = r.delta_found;
    }
    per_point.push_back({{"point", x.describe()}, {"verdict", to_string(point)}, {"per_eps", eps_results}});
    if (point == Outcome::Holds) some_point = true;
    if (point != Outcome::Fails) all_points_fail = false;
  }
  d.almost_equi.notion = "almost_equicontinuity";
  const Outcome ae = some_point ? Outcome::Holds : (all_points_fail ? Outcome::Fails : Outcome::Inconclusive);
  json ae_w = {{"dual_family", kf.to_string()}, {"points", per_point}};
  if (ae == Outcome::Holds) {
    d.almost_equi.delta_found = delta;
    ae_w["delta_found"] = *delta;
  }
  d.almost_equi.verdict = Verdict{ae, std::move(ae_w), cfg.horizon};
  d.almost_equi.samples = {{"pairs_tested", tested}, {"points", points.size()}};
  d.almost_equi.config_echo = cfg.to_json();

  const Outcome so = d.sens.verdict.outcome;
  d.consistent = !(so == Outcome::Holds && ae == Outcome::Holds) && !(so == Outcome::Fails && ae == Outcome::Fails);
  if (!d.consistent) d.branch = "conflicting";
  else if (so == Outcome::Holds) d.branch = "sensitive";
  else if (ae == Outcome::Holds) d.branch = "almost_equicontinuous";
  else d.branch = "undetermined";
  return d;
}

double lemma45_delta_prime(const MetricSystem& sys, double delta, double a) {
  if (!(delta > 0)) fail(ErrorCode::InvalidArgument, "lemma45 needs delta > 0");
  const double bound = delta / sys.diameter;
  if (!(a >= 0 && a < bound)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "lemma45 needs 0 <= a < delta/diam(X) = %.12g, got a = %.12g", bound, a);
    fail(ErrorCode::InvalidArgument, buf);
  }
  // decimal inputs give decimal answers (0.2 - 0.1*0.5 = 0.15)
  return round_sig(delta - a * sys.diameter, 15);
}

Verdict lemma45_check(const MetricSystem& sys, double delta, double a, const ClassifyConfig& cfg) {
  const double dp = lemma45_delta_prime(sys, delta, a);
  const SensReport mean = mean_sensitivity(sys, delta, cfg);
  json w = {{"delta", delta},
            {"a", a},
            {"diameter", sys.diameter},
            {"delta_prime", dp},
            {"mean_sensitivity", to_string(mean.verdict.outcome)}};
  if (!mean.verdict.holds()) {
    return not_applicable("mean sensitivity at delta not established", std::move(w), cfg.horizon);
  }
  const auto f = FamilyDescriptor::upper_density_above(a);
  const SensReport s = f_sensitivity(sys, f, dp, cfg);
  w["family"] = f.to_string();
  w["f_sensitivity"] = to_json(s);
  return Verdict{s.verdict.outcome, std::move(w), cfg.horizon};
}

std::vector<Verdict> lemma43_44_check(const MetricSystem& sys, const std::vector<double>& a_grid,
                                      const ClassifyConfig& cfg) {
  for (double a : a_grid) {
    if (!(a > 0 && a < 1)) fail(ErrorCode::InvalidArgument, "lemma43 needs every a in (0, 1)");
  }
  std::vector<Verdict> out;
  const EquiReport mean = mean_equicontinuity(sys, cfg);
  for (double a : a_grid) {
    const FamilyDescriptor f = dual(FamilyDescriptor::upper_density_above(a));
    json w = {{"lemma", "mean_to_kud"}, {"a", a}, {"family", f.to_string()},
              {"mean_equicontinuity", to_string(mean.verdict.outcome)}};
    if (!mean.verdict.holds()) {
      out.push_back(not_applicable("mean equicontinuity not established", std::move(w), cfg.horizon));
      continue;
    }
    std::vector<double> grid;
    for (double e0 : cfg.eps_grid) grid.push_back(e0 / a);
    const EquiReport r = f_equicontinuity(sys, f, grid, cfg);
    w["eps_grid"] = grid;
    w["f_equicontinuity"] = to_string(r.verdict.outcome);
    w["f_equicontinuity_witness"] = r.verdict.witness;
    out.push_back(Verdict{r.verdict.outcome, std::move(w), cfg.horizon});
  }
  const FamilyDescriptor k0 = FamilyDescriptor::lower_density_at_least(1.0);
  const EquiReport r = f_equicontinuity(sys, k0, cfg.eps_grid, cfg);
  json w = {{"lemma", "kud0_to_mean"}, {"family", k0.to_string()}, {"f_equicontinuity", to_string(r.verdict.outcome)},
            {"mean_equicontinuity", to_string(mean.verdict.outcome)}};
  if (!r.verdict.holds()) {
    out.push_back(not_applicable("k(ud>0)-equicontinuity not established", std::move(w), cfg.horizon));
  } else {
    out.push_back(Verdict{mean.verdict.outcome, std::move(w), cfg.horizon});
  }
  return out;
}

Verdict lemma31_invariance_check(const MetricSystem& sys, const FamilyDescriptor& f, double eps,
                                 const ClassifyConfig& cfg) {
  if (!is_translation_invariant(f)) {
    fail(ErrorCode::Hypothesis, "lemma31 needs a translation-invariant family; " + f.to_string() + " is not");
  }
  check_eps(eps);
  const auto points = sample_points(sys, cfg.point_probes, derive_seed(cfg.seed, 900));
  std::size_t premises = 0;
  json checked = json::array();
  for (const Point& x : points) {
    const EquiReport at_tx = eq_eps_f_member(sys, sys.step(x), eps, f, cfg);
    if (!at_tx.verdict.holds()) {
      checked.push_back({{"point", x.describe()}, {"at_Tx", to_string(at_tx.verdict.outcome)}});
      continue;
    }
    ++premises;
    const EquiReport at_x = eq_eps_f_member(sys, x, eps, f, cfg);
    checked.push_back({{"point", x.describe()}, {"at_Tx", "Holds"}, {"at_x", to_string(at_x.verdict.outcome)}});
    if (at_x.verdict.fails()) {
      return Verdict{Outcome::Fails,
                     {{"family", f.to_string()}, {"eps", eps}, {"violating_point", x.describe()}, {"points", checked}},
                     cfg.horizon};
    }
  }
  json w = {{"family", f.to_string()}, {"eps", eps}, {"points", checked}, {"premises_holding", premises}};
  if (premises == 0) return not_applicable("no sampled T(x) in Eq_eps^F", std::move(w), cfg.horizon);
  return Verdict{Outcome::Holds, std::move(w), cfg.horizon};
}

json to_json(const Verdict& v) {
  return {{"outcome", to_string(v.outcome)}, {"witness", v.witness}, {"horizon_used", v.horizon_used}};
}

json to_json(const EquiReport& r) {
  json j = {{"notion", r.notion}, {"verdict", to_json(r.verdict)}, {"samples", r.samples}};
  j["delta_found"] = r.delta_found ? json(*r.delta_found) : json(nullptr);
  return j;
}

json to_json(const SensReport& r) {
  return {{"notion", r.notion}, {"verdict", to_json(r.verdict)}, {"witness_sets", r.witness_sets}};
}

json to_json(const DichotomyReport& r) {
  return {{"family", r.family.to_string()},
          {"dual_family", dual(r.family).to_string()},
          {"dual_invariant", r.dual_invariant},
          {"sens", to_json(r.sens)},
          {"almost_equi", to_json(r.almost_equi)},
          {"consistent", r.consistent},
          {"branch", r.branch}};
}

}  // namespace furdyn
