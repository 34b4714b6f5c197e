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

#include "furdyn/factor.hpp"

#include <charconv>

#include "furdyn/error.hpp"
#include "furdyn/random.hpp"

namespace furdyn {
namespace {

using nlohmann::json;

const char* kFactorGrammar = "proj1(<prodspec>) | proj2(<prodspec>) | sbc(r=<n>,table=<bits>[,source=<spec>])";

std::string table_string(const std::vector<bool>& table) {
  std::string s;
  for (bool b : table) s += b ? '1' : '0';
  return s;
}

/// Drops trailing window symbols the code ignores; returns the remaining width.
unsigned trim_ignored(std::vector<bool>& table, unsigned width) {
  while (width > 0) {
    // does the last variable matter?
    bool matters = false;
    for (std::size_t i = 0; i < table.size() && !matters; i += 2) matters = table[i] != table[i + 1];
    if (matters) break;
    std::vector<bool> reduced;
    for (std::size_t i = 0; i < table.size(); i += 2) reduced.push_back(table[i]);
    table = std::move(reduced);
    --width;
  }
  return width;
}

struct CodeShape {
  bool constant = false;
  bool identity = false;
  bool right_permutive = false;
};

CodeShape classify_code(std::vector<bool> table, unsigned width) {
  CodeShape shape;
  const unsigned w = trim_ignored(table, width);
  if (w == 0) {
    shape.constant = true;
    return shape;
  }
  shape.identity = w == 1 && !table[0] && table[1];
  shape.right_permutive = true;
  for (std::size_t i = 0; i < table.size(); i += 2) {
    if (table[i] == table[i + 1]) shape.right_permutive = false;
  }
  return shape;
}

}  // namespace

std::string to_string(Openness o) {
  switch (o) {
    case Openness::Open: return "open";
    case Openness::SemiOpen: return "semi_open";
    case Openness::OpenAtPoints: return "open_at_points";
    case Openness::Unknown: return "unknown";
  }
  return "?";
}

FactorMap projection_factor(const MetricSystem& prod, Coordinate which) {
  if (prod.space != SpaceKind::Product) {
    fail(ErrorCode::InvalidArgument, "projection_factor needs a product system, got '" + prod.spec + "'");
  }
  FactorMap fm;
  const bool first = which == Coordinate::First;
  fm.spec = std::string(first ? "proj1(" : "proj2(") + prod.spec + ")";
  fm.source = prod;
  fm.target = first ? *prod.first : *prod.second;
  fm.point_map = [first](const Point& p) { return first ? p.first() : p.second(); };
  fm.openness = Openness::Open;
  fm.note = "coordinate projections of a product are open maps";
  return fm;
}

FactorMap sliding_block_factor(const std::vector<bool>& table, unsigned radius, const MetricSystem& source) {
  if (source.space != SpaceKind::BinaryShift || source.map != MapKind::Shift) {
    fail(ErrorCode::InvalidArgument, "sliding block codes need a shift system as source, got '" + source.spec + "'");
  }
  const unsigned width = 2 * radius + 1;
  if (width > 20 || table.size() != (std::size_t{1} << width)) {
    fail(ErrorCode::InvalidArgument, "sliding block table for r=" + std::to_string(radius) + " needs " +
                                         std::to_string(std::size_t{1} << width) + " entries");
  }
  FactorMap fm;
  fm.spec = "sbc(r=" + std::to_string(radius) + ",table=" + table_string(table) + ",source=" + source.spec + ")";
  fm.source = source;
  auto code = [table, width](const Point& p) {
    return Point::symbolic(Sequence(block_code_rule(p.sequence(), table, width)));
  };
  fm.point_map = code;

  const CodeShape shape = classify_code(table, width);
  const bool full = source.shift_source == ShiftSource::Full;
  if (shape.identity || shape.constant) {
    fm.openness = Openness::Open;
    fm.note = shape.identity ? "identity code: the factor is a conjugacy" : "constant code: the image is one point";
  } else if (full && shape.right_permutive) {
    fm.openness = Openness::Open;
    fm.note = "right-permutive codes on the full one-sided shift are open";
  } else {
    fm.openness = Openness::Unknown;
    fm.note = "openness of this code is not known by construction";
  }

  if (full && (shape.identity || shape.right_permutive)) {
    fm.target = make_system("shift");
  } else {
    fm.target = source;
    fm.target.shift_source = ShiftSource::Image;
    fm.target.flags = {false, false, "image subshift; transitivity not recorded"};
    const MetricSystem src = source;
    fm.target.point_source = [src, code](std::uint64_t seed, std::size_t i) {
      const auto pts = sample_points(src, i + 1, seed);
      return code(pts[i]);
    };
  }
  fm.target.spec = "image(" + fm.spec + ")";
  return fm;
}

FactorMap make_factor(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto body = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (s.starts_with(prefix) && s.ends_with(")")) return s.substr(prefix.size(), s.size() - prefix.size() - 1);
    return std::nullopt;
  };
  if (auto b = body("proj1(")) return projection_factor(make_system(*b), Coordinate::First);
  if (auto b = body("proj2(")) return projection_factor(make_system(*b), Coordinate::Second);
  if (auto b = body("sbc(")) {
    std::optional<unsigned> r;
    std::vector<bool> table;
    MetricSystem source = make_system("shift");
    std::string_view rest = *b;
    while (!rest.empty()) {
      std::size_t cut = rest.find(',');
      if (rest.starts_with("source=")) cut = std::string_view::npos;
      const std::string_view item = rest.substr(0, cut);
      rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
      if (item.starts_with("r=")) {
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(item.data() + 2, item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size()) break;
        r = v;
      } else if (item.starts_with("table=")) {
        for (char c : item.substr(6)) {
          if (c != '0' && c != '1') fail(ErrorCode::Parse, "table must be 0/1 bits in '" + std::string(text) + "'");
          table.push_back(c == '1');
        }
      } else if (item.starts_with("source=")) {
        source = make_system(item.substr(7));
      } else {
        r.reset();
        break;
      }
    }
    if (r && !table.empty()) return sliding_block_factor(table, *r, source);
  }
  fail(ErrorCode::Parse, "unknown factor '" + std::string(text) + "'; grammar: " + kFactorGrammar);
}

double commutation_defect(const FactorMap& fm, const Point& p) {
  return fm.target.metric(fm.target.step(fm.point_map(p)), fm.point_map(fm.source.step(p)));
}

Verdict preservation_check(const FactorMap& fm, const FamilyDescriptor& f, const ClassifyConfig& cfg) {
  if (fm.openness == Openness::Unknown || fm.openness == Openness::SemiOpen) {
    fail(ErrorCode::Hypothesis, "preservation needs a factor open by construction; '" + fm.spec + "' is " +
                                    to_string(fm.openness));
  }
  const auto points = fm.openness == Openness::OpenAtPoints
                          ? fm.open_points
                          : sample_points(fm.source, cfg.point_probes, derive_seed(cfg.seed, 1000));
  std::size_t premises = 0;
  json pointwise = json::array();
  for (const Point& x : points) {
    for (double eps : cfg.eps_grid) {
      const EquiReport src = f_equi_point(fm.source, x, f, eps, cfg);
      if (!src.verdict.holds()) {
        pointwise.push_back({{"point", x.describe()}, {"eps", eps}, {"source", to_string(src.verdict.outcome)}});
        break;
      }
      ++premises;
      const Point y = fm.point_map(x);
      const EquiReport tgt = f_equi_point(fm.target, y, f, eps, cfg);
      pointwise.push_back({{"point", x.describe()},
                           {"eps", eps},
                           {"source", "Holds"},
                           {"target", to_string(tgt.verdict.outcome)}});
      if (tgt.verdict.fails()) {
        return Verdict{Outcome::Fails,
                       {{"factor", fm.spec},
                        {"family", f.to_string()},
                        {"violation", "pointwise"},
                        {"point", x.describe()},
                        {"eps", eps},
                        {"target_witness", tgt.verdict.witness}},
                       cfg.horizon};
      }
    }
  }
  json w = {{"factor", fm.spec}, {"family", f.to_string()}, {"openness", to_string(fm.openness)},
            {"openness_note", fm.note}, {"pointwise", pointwise}};
  if (fm.openness == Openness::Open) {
    const EquiReport src = f_equicontinuity(fm.source, f, cfg.eps_grid, cfg);
    w["source_global"] = to_string(src.verdict.outcome);
    if (src.verdict.holds()) {
      ++premises;
      const EquiReport tgt = f_equicontinuity(fm.target, f, cfg.eps_grid, cfg);
      w["target_global"] = to_string(tgt.verdict.outcome);
      if (tgt.verdict.fails()) {
        w["violation"] = "global";
        return Verdict{Outcome::Fails, std::move(w), cfg.horizon};
      }
    }
  }
  w["premises_holding"] = premises;
  if (premises == 0) {
    w["status"] = "not_applicable";
    w["reason"] = "no equicontinuity premise held in the source";
  }
  return Verdict{Outcome::Holds, std::move(w), cfg.horizon};
}

}  // namespace furdyn
