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


// furdyn command line: a thin driver over the C API.

#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "furdyn/furdyn.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInconsistent = 2;

struct ConfigError {
  std::string message;
};

// Owns a char* handed out by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  furdyn_string_free(s);
  return out;
}

void check(furdyn_status st) {
  if (st != FURDYN_OK) {
    throw ConfigError{std::string(furdyn_status_name(st)) + ": " + furdyn_last_error()};
  }
}

struct Options {
  std::vector<std::string> systems;
  std::vector<std::string> families;
  std::vector<std::string> notions;
  std::vector<std::string> sets;
  std::optional<double> epsilon;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::string config;
  unsigned jobs = 1;
};

// One (system, family[, notion]) cell; returns its report documents.
using Cell = std::function<std::vector<std::string>()>;

// Cells run on up to `jobs` threads; results are handed to the sink in cell order.
void run_cells(const std::vector<Cell>& cells, unsigned jobs, const std::function<void(const std::string&)>& sink) {
  std::vector<std::vector<std::string>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      try {
        results[i] = cells[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs) && t < cells.size(); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (const auto& r : results[i]) sink(r);
  }
}

json load_config(const Options& o) {
  json cfg = json::object();
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw ConfigError{"cannot read config file '" + o.config + "'"};
    try {
      cfg = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError{"config file '" + o.config + "' is not valid JSON: " + e.what()};
    }
    if (!cfg.is_object()) throw ConfigError{"config file '" + o.config + "' must hold a JSON object"};
  }
  if (!o.systems.empty()) cfg["systems"] = o.systems;
  if (!o.families.empty()) cfg["families"] = o.families;
  if (!o.notions.empty()) cfg["notions"] = o.notions;
  if (!o.sets.empty()) cfg["sets"] = o.sets;
  if (o.epsilon) cfg["epsilon"] = *o.epsilon;
  if (o.horizon) cfg["horizon"] = *o.horizon;
  if (o.samples) cfg["samples"] = *o.samples;
  if (o.seed) cfg["seed"] = *o.seed;
  if (!o.out.empty()) cfg["outputs"] = o.out;
  if (!o.format.empty()) cfg["format"] = o.format;
  char* norm = nullptr;
  check(furdyn_config_check(cfg.dump().c_str(), &norm));
  take(norm);
  return cfg;
}

std::vector<std::string> list(const json& cfg, const char* key) {
  std::vector<std::string> v;
  if (cfg.contains(key) && cfg[key].is_array()) {
    for (const auto& e : cfg[key]) v.push_back(e.get<std::string>());
  }
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string scalar(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

class Sink {
 public:
  explicit Sink(const json& cfg)
      : dir_(cfg.value("outputs", std::string("furdyn_out"))), format_(cfg.value("format", std::string("both"))) {}

  bool wants_json() const { return format_ == "json" || format_ == "both"; }
  bool wants_csv() const { return format_ == "csv" || format_ == "both"; }

  fs::path path_for(const std::string& report) const {
    char* name = nullptr;
    check(furdyn_report_filename(report.c_str(), &name));
    return dir_ / take(name);
  }

  void add(const std::string& report) {
    const json r = json::parse(report);
    if (wants_json()) {
      fs::create_directories(dir_);
      std::ofstream(path_for(report), std::ios::binary) << report;
    }
    rows_.push_back(r);
    if (!r.value("consistent", true)) inconsistent_ = true;
    std::string line = scalar(r["system"]) + ", " + scalar(r["family"]) + ", ";
    if (r["notion"] == "dichotomy") {
      std::string s = scalar(r["summary"]);
      for (std::size_t p; (p = s.find(';')) != std::string::npos;) s.replace(p, 1, ", ");
      line += s;
    } else {
      line += scalar(r["notion"]) + ", " + scalar(r["verdict"]) + ", " + scalar(r["summary"]);
      if (!r.value("consistent", true)) line += ", consistent=false";
    }
    std::cout << line << std::endl;
  }

  int finish() {
    if (wants_csv() && !rows_.empty()) {
      fs::create_directories(dir_);
      std::ofstream csv(dir_ / "summary.csv", std::ios::binary);
      csv << "system,family,notion,epsilon,verdict,witness,seed\n";
      for (const auto& r : rows_) {
        csv << csv_field(scalar(r["system"])) << ',' << csv_field(scalar(r["family"])) << ','
            << csv_field(scalar(r["notion"])) << ',' << scalar(r["epsilon"]) << ',' << csv_field(scalar(r["verdict"]))
            << ',' << csv_field(scalar(r["summary"])) << ',' << scalar(r["seed"]) << '\n';
      }
    }
    return inconsistent_ ? kExitInconsistent : kExitOk;
  }

 private:
  fs::path dir_;
  std::string format_;
  std::vector<json> rows_;
  bool inconsistent_ = false;
};

void need(const std::vector<std::string>& v, const char* what) {
  if (v.empty()) throw ConfigError{std::string("no ") + what + " given (use --" + what + " or the config file)"};
}

int run_analyze(const Options& o) {
  const json cfg = load_config(o);
  const std::string text = cfg.dump();
  auto systems = list(cfg, "systems");
  auto families = list(cfg, "families");
  auto notions = list(cfg, "notions");
  if (notions.empty()) notions = {"f_equicontinuity", "f_sensitivity"};
  need(systems, "system");
  if (families.empty()) families = {""};
  std::vector<Cell> cells;
  for (const auto& s : systems) {
    for (const auto& f : families) {
      for (const auto& n : notions) {
        cells.push_back([s, f, n, &text] {
          char* out = nullptr;
          check(furdyn_analyze(s.c_str(), f.empty() ? nullptr : f.c_str(), n.c_str(), text.c_str(), &out));
          return std::vector<std::string>{take(out)};
        });
      }
    }
  }
  Sink sink(cfg);
  run_cells(cells, o.jobs, [&](const std::string& r) { sink.add(r); });
  return sink.finish();
}

int run_dichotomy(const Options& o) {
  const json cfg = load_config(o);
  const std::string text = cfg.dump();
  const auto systems = list(cfg, "systems");
  const auto families = list(cfg, "families");
  need(systems, "system");
  need(families, "family");
  std::vector<Cell> cells;
  for (const auto& s : systems) {
    for (const auto& f : families) {
      cells.push_back([s, f, &text] {
        char* out = nullptr;
        check(furdyn_dichotomy(s.c_str(), f.c_str(), text.c_str(), &out));
        return std::vector<std::string>{take(out)};
      });
    }
  }
  Sink sink(cfg);
  run_cells(cells, o.jobs, [&](const std::string& r) { sink.add(r); });
  return sink.finish();
}

int run_lemmas(const Options& o) {
  const json cfg = load_config(o);
  const std::string text = cfg.dump();
  const auto systems = list(cfg, "systems");
  auto families = list(cfg, "families");
  need(systems, "system");
  if (families.empty()) families = {""};
  std::vector<Cell> cells;
  for (const auto& s : systems) {
    for (const auto& f : families) {
      cells.push_back([s, f, &text] {
        char* out = nullptr;
        check(furdyn_lemmas(s.c_str(), f.empty() ? nullptr : f.c_str(), text.c_str(), &out));
        std::vector<std::string> docs;
        for (const auto& r : json::parse(take(out))) {
          char* doc = nullptr;
          check(furdyn_canonical_json(r.dump().c_str(), &doc));
          docs.push_back(take(doc));
        }
        return docs;
      });
    }
  }
  Sink sink(cfg);
  run_cells(cells, o.jobs, [&](const std::string& r) { sink.add(r); });
  return sink.finish();
}

int run_densities(const Options& o, std::size_t horizon) {
  need(o.sets, "set");
  std::ostringstream csv;
  csv << "set,horizon,upper,lower,banach_upper,banach_lower,spread,max_gap,longest_run\n";
  for (const auto& s : o.sets) {
    furdyn_windowset* w = nullptr;
    check(furdyn_windowset_from_spec(s.c_str(), horizon, &w));
    char* row = nullptr;
    const furdyn_status st = furdyn_windowset_density_json(w, s.c_str(), &row);
    furdyn_windowset_free(w);
    check(st);
    const json r = json::parse(take(row));
    csv << csv_field(s);
    for (const char* k : {"horizon", "upper", "lower", "banach_upper", "banach_lower", "spread", "max_gap",
                          "longest_run"}) {
      csv << ',' << scalar(r[k]);
    }
    csv << '\n';
  }
  std::cout << csv.str();
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    std::ofstream(fs::path(o.out) / "densities.csv", std::ios::binary) << csv.str();
  }
  return kExitOk;
}

int run_selftest(std::uint64_t seed, const std::string& out_dir) {
  int passed = 0;
  char* report = nullptr;
  check(furdyn_selftest(seed, &passed, &report));
  const std::string text = take(report);
  const json r = json::parse(text);
  for (const auto& c : r["checks"]) {
    std::cout << (c.value("passed", false) ? "PASS " : "FAIL ") << scalar(c["check"]) << std::endl;
  }
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream(fs::path(out_dir) / ("selftest__" + std::to_string(seed) + ".json"), std::ios::binary) << text;
  }
  std::cout << (passed ? "selftest passed" : "selftest FAILED") << std::endl;
  return passed ? kExitOk : kExitInconsistent;
}

void common_flags(CLI::App* sub, Options& o, bool with_notion) {
  sub->add_option("--system", o.systems, "system spec, repeatable");
  sub->add_option("--family", o.families, "family descriptor, repeatable");
  if (with_notion) sub->add_option("--notion", o.notions, "notion, repeatable");
  sub->add_option("--epsilon", o.epsilon, "single epsilon instead of the grid");
  sub->add_option("--horizon", o.horizon, "orbit horizon (>= 1024)");
  sub->add_option("--samples", o.samples, "random points per ball");
  sub->add_option("--seed", o.seed, "seed (mandatory here or in the config)");
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--format", o.format, "json | csv | both");
  sub->add_option("--config", o.config, "JSON config file");
  sub->add_option("--jobs", o.jobs, "cells evaluated in parallel")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"furdyn: Furstenberg-family dynamics experiments"};
  app.set_version_flag("--version", std::string(furdyn_version()));
  app.require_subcommand(1);

  Options o;
  auto* analyze = app.add_subcommand("analyze", "F-equicontinuity, F-sensitivity, mean notions, filter/ramsey, "
                                                "preservation (system = factor spec)");
  common_flags(analyze, o, true);
  auto* dichotomy = app.add_subcommand("dichotomy", "sensitive / almost equicontinuous report");
  common_flags(dichotomy, o, false);
  auto* lemmas = app.add_subcommand("lemmas", "lemma checks (delta', mean vs k(ud>a), invariance)");
  common_flags(lemmas, o, false);

  auto* densities = app.add_subcommand("densities", "density statistics of named sets as CSV");
  std::size_t dens_horizon = 65536;
  densities->add_option("--set", o.sets, "set spec, repeatable")->required();
  densities->add_option("--horizon", dens_horizon, "window length")->check(CLI::PositiveNumber);
  densities->add_option("--out", o.out, "also write densities.csv here");

  auto* selftest = app.add_subcommand("selftest", "family-algebra property suite");
  std::uint64_t st_seed = 0;
  selftest->add_option("--seed", st_seed, "seed for the random checks");
  selftest->add_option("--out", o.out, "also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*dichotomy) return run_dichotomy(o);
    if (*lemmas) return run_lemmas(o);
    if (*densities) return run_densities(o, dens_horizon);
    if (*selftest) return run_selftest(st_seed, o.out);
  } catch (const ConfigError& e) {
    std::cerr << "furdyn: " << e.message << std::endl;
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "furdyn: " << e.what() << std::endl;
    return kExitConfig;
  }
  return kExitConfig;
}
