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


#include "furdyn/furdyn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "furdyn/error.hpp"
#include "furdyn/family.hpp"
#include "furdyn/report.hpp"
#include "furdyn/runner.hpp"
#include "furdyn/selftest.hpp"
#include "furdyn/setspec.hpp"
#include "furdyn/space.hpp"
#include "furdyn/zset.hpp"

struct furdyn_system {
  furdyn::MetricSystem sys;
};
struct furdyn_family {
  furdyn::FamilyDescriptor fam;
};
struct furdyn_windowset {
  furdyn::WindowSet set;
};

namespace {

using nlohmann::json;

thread_local std::string g_last_error;

furdyn_status map_code(furdyn::ErrorCode c) {
  switch (c) {
    case furdyn::ErrorCode::InvalidArgument: return FURDYN_INVALID_ARGUMENT;
    case furdyn::ErrorCode::Parse: return FURDYN_PARSE;
    case furdyn::ErrorCode::Hypothesis: return FURDYN_HYPOTHESIS;
    case furdyn::ErrorCode::Unsupported: return FURDYN_UNSUPPORTED;
  }
  return FURDYN_INTERNAL;
}

template <class F>
furdyn_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return FURDYN_OK;
  } catch (const furdyn::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const json::parse_error& e) {
    g_last_error = std::string("config is not valid JSON: ") + e.what();
    return FURDYN_PARSE;
  } catch (const json::exception& e) {
    g_last_error = std::string("config: ") + e.what();
    return FURDYN_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FURDYN_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FURDYN_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return FURDYN_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) furdyn::fail(furdyn::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

furdyn::ExperimentConfig parse_config(const char* text) {
  require(text, "config_json");
  return furdyn::config_from_json(json::parse(text));
}

std::string opt(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char* furdyn_last_error(void) { return g_last_error.c_str(); }

const char* furdyn_version(void) { return "0.1.0"; }

const char* furdyn_status_name(furdyn_status s) {
  switch (s) {
    case FURDYN_OK: return "ok";
    case FURDYN_INVALID_ARGUMENT: return "invalid_argument";
    case FURDYN_PARSE: return "parse";
    case FURDYN_HYPOTHESIS: return "hypothesis";
    case FURDYN_UNSUPPORTED: return "unsupported";
    case FURDYN_INTERNAL: return "internal";
  }
  return "unknown";
}

void furdyn_string_free(char* s) { std::free(s); }

furdyn_status furdyn_system_parse(const char* spec, furdyn_system** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new furdyn_system{furdyn::make_system(spec)};
  });
}

void furdyn_system_free(furdyn_system* s) { delete s; }

furdyn_status furdyn_system_describe(const furdyn_system* s, char** json_out) {
  return guard([&] {
    require(s, "system");
    require(json_out, "json_out");
    const auto& m = s->sys;
    json j = {{"spec", m.spec},
              {"space", furdyn::to_string(m.space)},
              {"map", furdyn::to_string(m.map)},
              {"diameter", m.diameter},
              {"transitive", m.flags.transitive},
              {"isometric", m.flags.isometric},
              {"note", m.flags.note}};
    *json_out = dup(furdyn::dump_canonical(furdyn::canonicalize(j)));
  });
}

furdyn_status furdyn_system_metric_at(const furdyn_system* s, double x, double y, double* out) {
  return guard([&] {
    require(s, "system");
    require(out, "out");
    const auto& m = s->sys;
    if (m.space != furdyn::SpaceKind::Circle && m.space != furdyn::SpaceKind::Interval) {
      furdyn::fail(furdyn::ErrorCode::Unsupported, "metric_at takes real coordinates; '" + m.spec + "' is not 1-d");
    }
    if (!(x >= 0 && x <= 1 && y >= 0 && y <= 1)) {
      furdyn::fail(furdyn::ErrorCode::InvalidArgument, "coordinates must lie in [0, 1]");
    }
    *out = m.metric(furdyn::Point::from_double(x), furdyn::Point::from_double(y));
  });
}

furdyn_status furdyn_family_parse(const char* text, furdyn_family** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new furdyn_family{furdyn::FamilyDescriptor::parse(text)};
  });
}

void furdyn_family_free(furdyn_family* f) { delete f; }

furdyn_status furdyn_family_to_string(const furdyn_family* f, char** out) {
  return guard([&] {
    require(f, "family");
    require(out, "out");
    *out = dup(f->fam.to_string());
  });
}

furdyn_status furdyn_family_dual(const furdyn_family* f, furdyn_family** out) {
  return guard([&] {
    require(f, "family");
    require(out, "out");
    *out = new furdyn_family{furdyn::dual(f->fam)};
  });
}

furdyn_status furdyn_family_is_translation_invariant(const furdyn_family* f, int* out) {
  return guard([&] {
    require(f, "family");
    require(out, "out");
    *out = furdyn::is_translation_invariant(f->fam) ? 1 : 0;
  });
}

furdyn_status furdyn_windowset_from_rle(const char* text, furdyn_windowset** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new furdyn_windowset{furdyn::from_rle(text)};
  });
}

furdyn_status furdyn_windowset_from_spec(const char* spec, size_t horizon, furdyn_windowset** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new furdyn_windowset{furdyn::window_from_spec(spec, horizon)};
  });
}

void furdyn_windowset_free(furdyn_windowset* w) { delete w; }

furdyn_status furdyn_windowset_horizon(const furdyn_windowset* w, size_t* out) {
  return guard([&] {
    require(w, "windowset");
    require(out, "out");
    *out = w->set.horizon();
  });
}

furdyn_status furdyn_windowset_to_rle(const furdyn_windowset* w, char** out) {
  return guard([&] {
    require(w, "windowset");
    require(out, "out");
    *out = dup(furdyn::to_rle(w->set));
  });
}

furdyn_status furdyn_windowset_density_json(const furdyn_windowset* w, const char* name, char** json_out) {
  return guard([&] {
    require(w, "windowset");
    require(json_out, "json_out");
    const json row = furdyn::density_row(name ? name : "set", w->set);
    *json_out = dup(furdyn::dump_canonical(furdyn::canonicalize(row)));
  });
}

furdyn_status furdyn_contains(const furdyn_family* f, const furdyn_windowset* w, char** json_out) {
  return guard([&] {
    require(f, "family");
    require(w, "windowset");
    require(json_out, "json_out");
    const furdyn::Verdict v = furdyn::contains(f->fam, w->set);
    const json j = {{"outcome", furdyn::to_string(v.outcome)}, {"witness", v.witness}, {"horizon_used", v.horizon_used}};
    *json_out = dup(furdyn::dump_canonical(furdyn::canonicalize(j)));
  });
}

furdyn_status furdyn_analyze(const char* system, const char* family, const char* notion, const char* config_json,
                             char** report_json) {
  return guard([&] {
    require(notion, "notion");
    require(report_json, "report_json");
    const auto cfg = parse_config(config_json);
    *report_json = dup(furdyn::dump_canonical(furdyn::run_analyze(opt(system), opt(family), notion, cfg)));
  });
}

furdyn_status furdyn_dichotomy(const char* system, const char* family, const char* config_json, char** report_json) {
  return guard([&] {
    require(system, "system");
    require(family, "family");
    require(report_json, "report_json");
    const auto cfg = parse_config(config_json);
    *report_json = dup(furdyn::dump_canonical(furdyn::run_dichotomy(system, family, cfg)));
  });
}

furdyn_status furdyn_lemmas(const char* system, const char* family, const char* config_json, char** reports_json) {
  return guard([&] {
    require(system, "system");
    require(reports_json, "reports_json");
    const auto cfg = parse_config(config_json);
    json arr = json::array();
    for (auto& r : furdyn::run_lemmas(system, opt(family), cfg)) arr.push_back(std::move(r));
    *reports_json = dup(furdyn::dump_canonical(arr));
  });
}

furdyn_status furdyn_config_check(const char* config_json, char** normalized_json) {
  return guard([&] {
    require(normalized_json, "normalized_json");
    const auto cfg = parse_config(config_json);
    json j = furdyn::config_to_json(cfg);
    j["outputs"] = cfg.outputs;
    *normalized_json = dup(furdyn::dump_canonical(furdyn::canonicalize(j)));
  });
}

furdyn_status furdyn_canonical_json(const char* json_text, char** out) {
  return guard([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = dup(furdyn::dump_canonical(json::parse(json_text)));
  });
}

furdyn_status furdyn_report_filename(const char* report_json, char** out) {
  return guard([&] {
    require(report_json, "report_json");
    require(out, "out");
    const json j = json::parse(report_json);
    furdyn::ReportHeader h;
    h.system = j.at("system").get<std::string>();
    h.family = j.at("family").get<std::string>();
    h.notion = j.at("notion").get<std::string>();
    h.seed = j.at("seed").get<std::uint64_t>();
    *out = dup(furdyn::report_filename(h));
  });
}

furdyn_status furdyn_selftest(uint64_t seed, int* passed, char** report_json) {
  return guard([&] {
    require(passed, "passed");
    const furdyn::SelftestResult r = furdyn::run_selftest(seed);
    *passed = r.passed ? 1 : 0;
    if (report_json) {
      const json j = {{"passed", r.passed}, {"seed", seed}, {"checks", r.checks}};
      *report_json = dup(furdyn::dump_canonical(furdyn::canonicalize(j)));
    }
  });
}

}  // extern "C"
