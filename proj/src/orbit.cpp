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

#include "furdyn/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "furdyn/error.hpp"

namespace furdyn {
namespace {

bool append_sequence_key(const Sequence& s, std::vector<std::uint64_t>& key) {
  const auto k = s.state_key();
  if (!k) return false;
  key.push_back(reinterpret_cast<std::uintptr_t>(k->rule));
  key.push_back(k->phase);
  key.push_back(k->flip ? 1 : 0);
  return true;
}

/// Isometric product factors contribute a constant distance and are left out.
bool append_key(const MetricSystem& sys, const Point& p, std::vector<std::uint64_t>& key) {
  switch (sys.space) {
    case SpaceKind::Product:
      if (!sys.first->flags.isometric && !append_key(*sys.first, p.first(), key)) return false;
      if (!sys.second->flags.isometric && !append_key(*sys.second, p.second(), key)) return false;
      return true;
    case SpaceKind::Circle:
    case SpaceKind::Interval:
      key.push_back(static_cast<std::uint64_t>(p.head() >> 64));
      key.push_back(static_cast<std::uint64_t>(p.head()));
      return append_sequence_key(p.sequence(), key);
    case SpaceKind::BinaryShift:
      return append_sequence_key(p.sequence(), key);
  }
  return false;
}

/// Watches the joint state of a set of orbits for a recurrence.
class RecurrenceWatch {
 public:
  explicit RecurrenceWatch(const MetricSystem& sys) : sys_(sys) {}

  void observe(std::size_t n, const std::vector<const Point*>& points) {
    if (found_) return;
    std::vector<std::uint64_t> key;
    for (const Point* p : points) {
      if (!append_key(sys_, *p, key)) return;
    }
    const auto [it, inserted] = seen_.emplace(std::move(key), n);
    if (!inserted) found_ = EventualPeriod{it->second, n - it->second};
  }
  const std::optional<EventualPeriod>& found() const { return found_; }

 private:
  const MetricSystem& sys_;
  std::map<std::vector<std::uint64_t>, std::size_t> seen_;
  std::optional<EventualPeriod> found_;
};

std::optional<TailHint> hint_from_tail(const std::optional<EventualPeriod>& tail, const std::vector<double>& values,
                                       const std::function<bool(double)>& member) {
  if (!tail || tail->start + tail->period > values.size()) return std::nullopt;
  std::vector<bool> pattern(tail->period);
  for (std::size_t k = 0; k < tail->period; ++k) pattern[k] = member(values[tail->start + k]);
  return normalize_hint(EventuallyPeriodic{tail->start, std::move(pattern)});
}

double max_pairwise(const MetricSystem& sys, const std::vector<Point>& pts) {
  switch (sys.space) {
    case SpaceKind::Interval: {
      auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                          [](const Point& a, const Point& b) { return a.head() < b.head(); });
      return unit_from_fixed(hi->head() - lo->head());
    }
    case SpaceKind::Circle: {
      std::vector<u128> heads;
      heads.reserve(pts.size());
      for (const Point& p : pts) heads.push_back(p.head());
      std::sort(heads.begin(), heads.end());
      const u128 half = static_cast<u128>(1) << 127;
      double best = 0;
      for (u128 h : heads) {
        auto it = std::lower_bound(heads.begin(), heads.end(), static_cast<u128>(h + half));
        for (auto cand : {it == heads.end() ? heads.begin() : it, it == heads.begin() ? heads.end() - 1 : it - 1}) {
          const u128 diff = h - *cand;
          best = std::max(best, unit_from_fixed(std::min(diff, static_cast<u128>(0) - diff)));
        }
      }
      return best;
    }
    case SpaceKind::BinaryShift: {
      for (std::uint64_t i = 0; i < 1075; ++i) {
        const bool b = pts.front().sequence().at(i);
        for (const Point& p : pts) {
          if (p.sequence().at(i) != b) return std::ldexp(1.0, -static_cast<int>(i));
        }
      }
      return 0;
    }
    case SpaceKind::Product: {
      double best = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, sys.metric(pts[i], pts[j]));
      }
      return best;
    }
  }
  return 0;
}

}  // namespace

SeparationTrace separation_trace(const MetricSystem& sys, const Point& x, const Point& y, std::size_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "trace length must be >= 1");
  SeparationTrace t{{}, x, y, sys.spec, sys.diameter, std::nullopt};
  t.values.reserve(n);
  RecurrenceWatch watch(sys);
  Point a = x;
  Point b = y;
  for (std::size_t i = 0; i < n; ++i) {
    t.values.push_back(sys.metric(a, b));
    if (!sys.flags.isometric) watch.observe(i, {&a, &b});
    if (i + 1 < n) {
      sys.advance(a);
      sys.advance(b);
    }
  }
  t.tail = sys.flags.isometric ? std::optional(EventualPeriod{0, 1}) : watch.found();
  return t;
}

WindowSet hitting_set(const SeparationTrace& trace, double eps, bool closed) {
  if (!(eps > 0)) fail(ErrorCode::InvalidArgument, "hitting_set needs eps > 0");
  const std::size_t n = trace.values.size();
  if (eps > trace.diameter || (closed && eps >= trace.diameter)) {
    return WindowSet::from_hint(n, AllBeyond{0});
  }
  auto member = [&](double v) { return closed ? v <= eps : v < eps; };
  auto w = WindowSet::from_predicate(n, [&](std::size_t i) { return member(trace.values[i]); });
  if (auto hint = hint_from_tail(trace.tail, trace.values, member)) return w.with_hint(*hint);
  return w;
}

BirkhoffStats birkhoff(const SeparationTrace& trace) {
  const std::size_t n = trace.values.size();
  if (n < 64) fail(ErrorCode::InvalidArgument, "Birkhoff averages need a trace of length >= 64");
  BirkhoffStats out{0, 1e300};
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += trace.values[i];
    const std::size_t len = i + 1;
    if (2 * len >= n) {
      const double avg = sum / static_cast<double>(len);
      out.limsup = std::max(out.limsup, avg);
      out.liminf = std::min(out.liminf, avg);
    }
  }
  return out;
}

DiamTrace diam_trace(const MetricSystem& sys, const Point& center, double radius, std::size_t n,
                     std::size_t sample_size, std::uint64_t seed) {
  if (sample_size < 2) fail(ErrorCode::InvalidArgument, "diam_trace needs sample_size >= 2");
  if (n < 1) fail(ErrorCode::InvalidArgument, "trace length must be >= 1");
  if (!(radius > 0)) fail(ErrorCode::InvalidArgument, "ball radius must be positive");
  DiamTrace dt{{}, sample_size, center, radius, false, std::nullopt};
  dt.values.reserve(n);
  const bool arc = sys.space == SpaceKind::Circle &&
                   (sys.map == MapKind::Rotation || sys.map == MapKind::Doubling || sys.map == MapKind::Identity);
  if (arc) {
    dt.exact = true;
    double len = 2 * radius;
    for (std::size_t i = 0; i < n; ++i) {
      dt.values.push_back(std::min(len, 0.5));
      if (len >= 0.5 && !dt.tail) dt.tail = EventualPeriod{i, 1};
      if (sys.map == MapKind::Doubling) len *= 2;
    }
    if (sys.map != MapKind::Doubling) dt.tail = EventualPeriod{0, 1};
    return dt;
  }
  std::vector<Point> pts{center};
  for (Point& p : structured_ball_points(sys, center, radius)) pts.push_back(std::move(p));
  if (pts.size() < sample_size) {
    for (Point& p : sample_ball(sys, center, radius, seed, sample_size - pts.size(), SampleMode::Random)) {
      pts.push_back(std::move(p));
    }
  }
  pts.resize(sample_size);
  RecurrenceWatch watch(sys);
  std::vector<const Point*> refs;
  for (std::size_t i = 0; i < n; ++i) {
    dt.values.push_back(max_pairwise(sys, pts));
    if (!sys.flags.isometric) {
      refs.clear();
      for (const Point& p : pts) refs.push_back(&p);
      watch.observe(i, refs);
    }
    if (i + 1 < n) {
      for (Point& p : pts) sys.advance(p);
    }
  }
  dt.tail = sys.flags.isometric ? std::optional(EventualPeriod{0, 1}) : watch.found();
  return dt;
}

WindowSet sensitivity_set(const DiamTrace& dt, double eps) {
  if (eps < 0) fail(ErrorCode::InvalidArgument, "sensitivity_set needs eps >= 0");
  auto member = [&](double v) { return v > eps; };
  auto w = WindowSet::from_predicate(dt.values.size(), [&](std::size_t i) { return member(dt.values[i]); });
  if (auto hint = hint_from_tail(dt.tail, dt.values, member)) return w.with_hint(*hint);
  return w;
}

std::string trace_csv(const std::vector<double>& values) {
  std::string out = "n,value\n";
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g\n", i, values[i]);
    out += buf;
  }
  return out;
}

}  // namespace furdyn
