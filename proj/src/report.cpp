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

#include "furdyn/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace furdyn {

nlohmann::json canonicalize(const nlohmann::json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return nullptr;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
  }
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : j) out.push_back(canonicalize(e));
    return out;
  }
  if (j.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = canonicalize(it.value());
    return out;
  }
  return j;
}

namespace {

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

// Same layout as dump(2), floats at 12 significant digits.
void write(const nlohmann::json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::json(it.key()).dump() + ": ";
      write(it.value(), depth + 1, out);
    }
    out += "\n" + std::string(2 * depth, ' ') + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      write(e, depth + 1, out);
    }
    out += "\n" + std::string(2 * depth, ' ') + "]";
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    out += std::isfinite(v) ? format_float(v) : "null";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_canonical(const nlohmann::json& j) {
  std::string out;
  write(canonicalize(j), 0, out);
  return out + "\n";
}

nlohmann::json make_report(const ReportHeader& h, const std::string& verdict, const nlohmann::json& witness,
                           const nlohmann::json& config) {
  return {{"notion", h.notion},   {"verdict", verdict}, {"witness", witness},   {"horizon", h.horizon},
          {"seed", h.seed},       {"config", config},   {"system", h.system},   {"family", h.family},
          {"epsilon", h.epsilon}};
}

std::string report_filename(const ReportHeader& h) {
  std::string name = h.system + "__" + h.family + "__" + h.notion + "__" + std::to_string(h.seed) + ".json";
  for (char& c : name) {
    if (c == '/' || c == ' ') c = '_';
  }
  return name;
}

}  // namespace furdyn
