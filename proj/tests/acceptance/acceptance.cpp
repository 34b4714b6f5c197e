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


// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "furdyn/classify.hpp"
#include "furdyn/factor.hpp"
#include "furdyn/family.hpp"
#include "furdyn/furdyn.h"
#include "furdyn/orbit.hpp"
#include "furdyn/random.hpp"
#include "furdyn/report.hpp"
#include "furdyn/runner.hpp"
#include "furdyn/space.hpp"
#include "furdyn/zset.hpp"

using namespace furdyn;

namespace {

struct Result {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Result()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

constexpr std::uint64_t kSeed = 7;

// ---------------------------------------------------------------- 1

Result family_algebra() {
  std::vector<FamilyDescriptor> pool = implemented_families();
  for (double a : {0.0, 0.1, 0.3, 0.5, 0.9}) {
    pool.push_back(FamilyDescriptor::upper_density_above(a));
    pool.push_back(FamilyDescriptor::banach_upper_above(a));
  }
  for (double b : {0.1, 0.5, 0.7, 1.0}) {
    pool.push_back(FamilyDescriptor::lower_density_at_least(b));
    pool.push_back(FamilyDescriptor::banach_lower_at_least(b));
  }
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i) pool.push_back(FamilyDescriptor::dual_of(pool[i]));

  int bad = 0;
  std::string first;
  auto note = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  for (const auto& f : pool) {
    const FamilyDescriptor g = normalize(f);
    if (!(dual(dual(g)) == g)) note("dual(dual(" + g.to_string() + "))");
    if (!(dual(dual(f)) == g)) note("dual(dual(" + f.to_string() + ")) vs normal form");
    if (!(FamilyDescriptor::parse(f.to_string()) == f)) note("round trip " + f.to_string());
  }
  using F = FamilyDescriptor;
  const std::vector<std::pair<F, F>> table = {
      {F::infinite_sets(), F::cofinite()},
      {F::cofinite(), F::infinite_sets()},
      {F::thick(), F::syndetic()},
      {F::syndetic(), F::thick()},
      {F::upper_density_above(0.3), F::lower_density_at_least(0.7)},
      {F::lower_density_at_least(0.7), F::upper_density_above(0.3)},
      {F::banach_upper_above(0.3), F::banach_lower_at_least(0.7)},
      {F::banach_lower_at_least(0.7), F::banach_upper_above(0.3)},
      {F::upper_density_above(0.0), F::lower_density_at_least(1.0)},
      {F::thickly_syndetic(), F::dual_of(F::thickly_syndetic())},
      {F::parse("k(B)"), F::infinite_sets()},
  };
  for (const auto& [f, want] : table) {
    if (!(dual(f) == want)) note("dual(" + f.to_string() + ") = " + dual(f).to_string());
  }
  if (!(F::parse("k(thick)").to_string() == "k(thick)") || !(normalize(F::parse("k(thick)")) == F::syndetic())) {
    note("k(thick) normal form");
  }
  return {bad == 0, fmt("%zu descriptors, %zu table rows, %d violations%s", pool.size(), table.size(), bad,
                        bad ? (" first: " + first).c_str() : "")};
}

// ---------------------------------------------------------------- 2

// Independent scanners over the raw bits.
std::size_t naive_gap(const WindowSet& w) {
  std::size_t best = 0, zeros = 0;
  for (std::size_t i = 0; i < w.horizon(); ++i) {
    if (w.contains(i)) {
      best = std::max(best, zeros + 1);
      zeros = 0;
    } else {
      ++zeros;
    }
  }
  return std::max(best, zeros + 1);
}

std::size_t naive_run(const WindowSet& w) {
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < w.horizon(); ++i) {
    run = w.contains(i) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

Outcome oracle_syndetic(const WindowSet& w) {
  const double n = static_cast<double>(w.horizon());
  const auto g = static_cast<double>(naive_gap(w));
  if (g <= 0.02 * n) return Outcome::Holds;
  if (g >= 0.25 * n + 1) return Outcome::Fails;
  return Outcome::Inconclusive;
}

Outcome oracle_thick(const WindowSet& w) {
  const std::size_t r = naive_run(w);
  const auto n = w.horizon();
  const auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  const auto lg = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
  if (r >= root) return Outcome::Holds;
  if (r <= lg) return Outcome::Fails;
  return Outcome::Inconclusive;
}

// Exact truth for a set given by its tail.
Outcome oracle_cofinite(const WindowSet& w) {
  const TailHint& h = w.tail_hint();
  if (std::holds_alternative<AllBeyond>(h)) return Outcome::Holds;
  if (std::holds_alternative<NoneBeyond>(h)) return Outcome::Fails;
  for (bool b : std::get<EventuallyPeriodic>(h).pattern) {
    if (!b) return Outcome::Fails;
  }
  return Outcome::Holds;
}

Outcome oracle_upper_density(const WindowSet& w, double a) {
  const std::size_t n = w.horizon();
  double hi = 0, lo = 1;
  for (std::size_t m = (n + 1) / 2; m <= n; ++m) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i) c += w.contains(i);
    const double d = static_cast<double>(c) / static_cast<double>(m);
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  if (hi > a + 0.02) return Outcome::Holds;
  if (hi < a - 0.02 && hi - lo < 0.02) return Outcome::Fails;
  return Outcome::Inconclusive;
}

WindowSet random_window(Rng& rng, std::size_t n) {
  WindowSet::Bits bits(n);
  switch (rng.range(0, 4)) {
    case 0: {  // Bernoulli
      const double p = rng.uniform();
      for (std::size_t i = 0; i < n; ++i) bits[i] = rng.uniform() < p;
      break;
    }
    case 1: {  // random gaps
      const std::size_t maxgap = rng.range(1, n / 2);
      for (std::size_t i = rng.range(0, maxgap); i < n; i += rng.range(1, maxgap)) bits.set(i);
      break;
    }
    case 2: {  // alternating runs
      std::size_t i = 0;
      bool on = rng.coin();
      const std::size_t maxrun = rng.range(1, 64);
      while (i < n) {
        const std::size_t len = rng.range(1, maxrun);
        for (std::size_t k = i; k < std::min(n, i + len); ++k) bits[k] = on;
        i += len;
        on = !on;
      }
      break;
    }
    case 3: {  // periodic
      const std::size_t period = rng.range(1, 12);
      std::vector<bool> pat(period);
      for (std::size_t k = 0; k < period; ++k) pat[k] = rng.coin();
      for (std::size_t i = 0; i < n; ++i) bits[i] = pat[i % period];
      break;
    }
    default: {  // dense prefix then sparse, or the reverse
      const std::size_t cut = rng.range(0, n);
      const double p1 = rng.uniform(), p2 = rng.uniform();
      for (std::size_t i = 0; i < n; ++i) bits[i] = rng.uniform() < (i < cut ? p1 : p2);
      break;
    }
  }
  return WindowSet(std::move(bits));
}

WindowSet random_hinted_window(Rng& rng, std::size_t n) {
  const std::uint64_t from = rng.range(0, n / 2);
  std::vector<bool> prefix(from);
  for (std::size_t i = 0; i < from; ++i) prefix[i] = rng.coin();
  switch (rng.range(0, 2)) {
    case 0: return WindowSet::from_hint(n, AllBeyond{from}, prefix);
    case 1: return WindowSet::from_hint(n, NoneBeyond{from}, prefix);
    default: {
      std::vector<bool> pat(rng.range(1, 8));
      for (std::size_t k = 0; k < pat.size(); ++k) pat[k] = rng.uniform() < 0.8;
      return WindowSet::from_hint(n, EventuallyPeriodic{from, pat}, prefix);
    }
  }
}

Result windowed_oracle() {
  constexpr std::size_t kN = 256;
  Rng rng(derive_seed(kSeed, 2));
  const auto synd = FamilyDescriptor::syndetic();
  const auto thick = FamilyDescriptor::thick();
  const auto cf = FamilyDescriptor::cofinite();
  const auto ud = FamilyDescriptor::upper_density_above(0.3);
  int contradictions = 0;
  int decided[4] = {0, 0, 0, 0};
  std::string first;
  auto cmp = [&](int k, const char* name, Outcome got, Outcome want, const WindowSet& w) {
    if (got != Outcome::Inconclusive) ++decided[k];
    const bool clash = (got == Outcome::Holds && want == Outcome::Fails) ||
                       (got == Outcome::Fails && want == Outcome::Holds);
    if (clash && contradictions++ == 0) first = std::string(name) + " on " + to_rle(w);
  };
  for (int t = 0; t < 1000; ++t) {
    const WindowSet w = random_window(rng, kN);
    cmp(0, "synd", contains(synd, w).outcome, oracle_syndetic(w), w);
    cmp(1, "thick", contains(thick, w).outcome, oracle_thick(w), w);
    cmp(3, "ud>0.3", contains(ud, w).outcome, oracle_upper_density(w, 0.3), w);
    const WindowSet h = random_hinted_window(rng, kN);
    const Outcome got = contains(cf, h).outcome;
    cmp(2, "cf", got, oracle_cofinite(h), h);
    if (got != oracle_cofinite(h) && contradictions++ == 0) first = "cf with hint not exact on " + to_rle(h);
  }
  return {contradictions == 0,
          fmt("1000 windows at N=256, decided synd=%d thick=%d cf=%d ud>0.3=%d, contradictions=%d%s", decided[0],
              decided[1], decided[2], decided[3], contradictions, contradictions ? (" first: " + first).c_str() : "")};
}

// ---------------------------------------------------------------- 3

Result isometry_baseline() {
  const MetricSystem rot = make_system("rot(sqrt2-1)");
  ClassifyConfig cfg;
  cfg.seed = kSeed;
  cfg.horizon = 1 << 14;
  cfg.open_set_probes = 32;
  int deviations = 0;
  std::string bad;
  for (const auto& f : implemented_families()) {
    const EquiReport e = f_equicontinuity(rot, f, cfg.eps_grid, cfg);
    if (!e.verdict.holds()) {
      ++deviations;
      bad += " equi(" + f.to_string() + ")=" + to_string(e.verdict.outcome);
    }
    const SensReport s = f_sensitivity(rot, f, 0.02, cfg);
    const std::size_t probes = s.verdict.witness.value("open_sets_probed", std::size_t{0});
    if (!s.verdict.fails() || (s.verdict.fails() && probes == 0)) {
      ++deviations;
      bad += " sens(" + f.to_string() + ")=" + to_string(s.verdict.outcome);
    }
  }
  return {deviations == 0, fmt("%zu families, horizon 16384, deviations=%d%s", implemented_families().size(),
                               deviations, bad.c_str())};
}

// ---------------------------------------------------------------- 4

Result doubling_arcs() {
  const MetricSystem dbl = make_system("doubling");
  constexpr std::size_t kN = 4096;
  int mismatches = 0;
  int verdict_bad = 0;
  std::string detail;
  std::vector<FamilyDescriptor> fams = {FamilyDescriptor::cofinite(), FamilyDescriptor::thick(),
                                        FamilyDescriptor::syndetic()};
  for (double a : {0.0, 0.3, 0.5, 0.9, 0.99}) fams.push_back(FamilyDescriptor::upper_density_above(a));
  const auto centers = sample_points(dbl, 4, derive_seed(kSeed, 4));
  for (int e : {8, 10, 12}) {
    const double len = std::ldexp(1.0, -e);
    const auto k = static_cast<std::size_t>(std::ceil(std::log2(0.5 / len)));
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const DiamTrace dt = diam_trace(dbl, centers[c], len / 2, kN, 16, derive_seed(kSeed, 40, c));
      if (!dt.exact) ++mismatches;
      const WindowSet s = sensitivity_set(dt, 0.25);
      for (std::size_t n = 0; n < kN; ++n) {
        if (s.contains(n) != (n >= k)) ++mismatches;
      }
      for (std::uint64_t n : {std::uint64_t{kN}, std::uint64_t{1} << 40}) {
        const auto m = hint_member(s.tail_hint(), n);
        if (!m || !*m) ++mismatches;
      }
      for (const auto& f : fams) {
        if (!contains(f, s).holds()) ++verdict_bad;
      }
    }
    detail += fmt(" |U|=2^-%d:k=%zu", e, k);
  }
  return {mismatches == 0 && verdict_bad == 0,
          fmt("S_T(U,0.25)=[k,N) checked index by index;%s; index mismatches=%d, non-Holds verdicts=%d",
              detail.c_str(), mismatches, verdict_bad)};
}

// ---------------------------------------------------------------- 5 and 10

const std::vector<std::string> kDichSystems = {"rot(sqrt2-1)", "doubling"};
const std::vector<std::string> kDichFamilies = {"thick", "cf", "ud>0.3"};
std::vector<std::string> g_sweep;

Result dichotomy_cells() {
  ExperimentConfig cfg;
  cfg.classify.seed = kSeed;
  int ok = 0;
  std::string rows;
  g_sweep.clear();
  for (const auto& s : kDichSystems) {
    for (const auto& f : kDichFamilies) {
      const auto doc = run_dichotomy(s, f, cfg);
      g_sweep.push_back(dump_canonical(doc));
      const bool consistent = doc["consistent"].get<bool>();
      const std::string branch = doc["verdict"].get<std::string>();
      const std::string want = s == "doubling" ? "sensitive" : "almost_equicontinuous";
      if (consistent && branch == want) ++ok;
      rows += " " + s + "/" + f + "=" + branch;
    }
  }
  return {ok == 6, fmt("%d/6 cells consistent on the expected branch;%s", ok, rows.c_str())};
}

Result determinism() {
  if (g_sweep.size() != 6) return {false, "criterion 5 sweep did not run"};
  int same = 0;
  std::size_t i = 0;
  for (const auto& s : kDichSystems) {
    for (const auto& f : kDichFamilies) {
      char* out = nullptr;
      const std::string cfg = "{\"seed\": " + std::to_string(kSeed) + "}";
      if (furdyn_dichotomy(s.c_str(), f.c_str(), cfg.c_str(), &out) == FURDYN_OK && out && g_sweep[i] == out) ++same;
      furdyn_string_free(out);
      ++i;
    }
  }
  return {same == 6, fmt("%d/6 reports byte-identical on rerun (through the C API)", same)};
}

// ---------------------------------------------------------------- 6

Result lemma45() {
  const MetricSystem dbl = make_system("doubling");
  const double dp = lemma45_delta_prime(dbl, 0.2, 0.1);
  ClassifyConfig cfg;
  cfg.seed = kSeed;
  const SensReport s = f_sensitivity(dbl, FamilyDescriptor::upper_density_above(0.1), 0.15, cfg);
  const Verdict full = lemma45_check(dbl, 0.2, 0.1, cfg);
  const bool applied = !full.witness.contains("status");
  const bool ok = dp == 0.15 && s.verdict.holds() && full.holds() && applied;
  return {ok, fmt("delta'=%.15g (exact 0.15: %s), ud>0.1-sensitivity at 0.15: %s, lemma check: %s%s", dp, dp == 0.15 ? "yes" : "no",
                  to_string(s.verdict.outcome).c_str(), to_string(full.outcome).c_str(),
                  applied ? "" : " (not applied)")};
}

// ---------------------------------------------------------------- 7

Result birkhoff_oracle() {
  const MetricSystem dbl = make_system("doubling");
  const auto pts = sample_points(dbl, 128, derive_seed(kSeed, 7));
  double lo = 1, hi = 0;
  int outside = 0;
  for (std::size_t i = 0; i < 64; ++i) {
    const double b = birkhoff(separation_trace(dbl, pts[2 * i], pts[2 * i + 1], 100000)).limsup;
    lo = std::min(lo, b);
    hi = std::max(hi, b);
    if (std::fabs(b - 0.25) > 0.02) ++outside;
  }
  return {outside == 0, fmt("64 pairs at N=1e5, limsup in [%.4f, %.4f], outside 0.25+-0.02: %d", lo, hi, outside)};
}

// ---------------------------------------------------------------- 8

Result triangle_transfer() {
  const std::vector<std::string> zoo = {"rot(sqrt2-1)", "rot(golden)", "doubling",  "tent",
                                        "shift",        "sturmian(golden)", "thue_morse", "prod(rot(golden),doubling)",
                                        "id(circle)"};
  constexpr std::size_t kN = 512;
  std::size_t violations = 0, checked = 0, nontrivial = 0;
  for (std::size_t si = 0; si < zoo.size(); ++si) {
    const MetricSystem sys = make_system(zoo[si]);
    const auto pts = sample_points(sys, 1000, derive_seed(kSeed, 8, si));
    Rng rng(derive_seed(kSeed, 80, si));
    for (std::size_t t = 0; t < 1000; ++t) {
      const Point& x = pts[t];
      const double eps = sys.diameter * std::array<double, 4>{0.1, 0.25, 0.5, 1.0}[t % 4];
      Point y = x, z = x;
      if (t % 2 == 0) {
        y = pts[rng.range(0, pts.size() - 1)];
        z = pts[rng.range(0, pts.size() - 1)];
      } else {
        const auto near = sample_ball(sys, x, eps / 2, derive_seed(kSeed, 81, si * 1000 + t), 2, SampleMode::Random);
        y = near[0];
        z = near[1];
      }
      const WindowSet a = hitting_set(separation_trace(sys, x, y, kN), eps / 2, false);
      const WindowSet b = hitting_set(separation_trace(sys, x, z, kN), eps / 2, false);
      const WindowSet c = hitting_set(separation_trace(sys, y, z, kN), eps, false);
      const WindowSet ab = intersect(a, b);
      if (!ab.empty()) ++nontrivial;
      for (std::size_t n = 0; n < kN; ++n) {
        if (ab.contains(n) && !c.contains(n)) ++violations;
      }
      ++checked;
    }
  }
  return {violations == 0, fmt("%zu triples over %zu systems (%zu with non-empty intersection), violations=%zu",
                               checked, zoo.size(), nontrivial, violations)};
}

// ---------------------------------------------------------------- 9

Result factor_preservation() {
  const FactorMap fm = make_factor("proj1(prod(rot(sqrt2-1),rot(golden)))");
  ClassifyConfig cfg;
  cfg.seed = kSeed;
  int violations = 0, premises = 0;
  std::string rows;
  const auto fams = implemented_families();
  std::vector<std::future<Verdict>> jobs;
  for (const auto& f : fams) {
    jobs.push_back(std::async(std::launch::async, [&fm, &cfg, f] { return preservation_check(fm, f, cfg); }));
  }
  for (std::size_t i = 0; i < fams.size(); ++i) {
    const auto& f = fams[i];
    const Verdict v = jobs[i].get();
    if (v.fails()) ++violations;
    if (v.witness.value("source_global", "") == "Holds") ++premises;
    rows += " " + f.to_string() + ":" + v.witness.value("target_global", std::string("-"));
  }
  const auto n = implemented_families().size();
  return {violations == 0 && premises == static_cast<int>(n),
          fmt("openness=%s, %d/%zu families with a Holds source verdict, violations=%d; target:%s",
              to_string(fm.openness).c_str(), premises, n, violations, rows.c_str())};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "family-algebra exactness", 1, family_algebra},
      {2, "windowed-oracle equivalence", 10, windowed_oracle},
      {3, "isometry baseline", 60, isometry_baseline},
      {4, "doubling-map sensitivity", 10, doubling_arcs},
      {5, "dichotomy consistency", 300, dichotomy_cells},
      {6, "delta-prime formula", 60, lemma45},
      {7, "Birkhoff oracle", 60, birkhoff_oracle},
      {8, "triangle-transfer invariant", 60, triangle_transfer},
      {9, "factor preservation", 120, factor_preservation},
      {10, "determinism", 300, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.budget_s;
    const bool pass = r.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d (%s) [%.2f s / %.0f s%s]: %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                c.budget_s, in_time ? "" : " over budget", r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
