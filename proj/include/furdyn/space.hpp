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

// Zoo of compact metric systems (X, T) whose maps are computed exactly.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "furdyn/sequence.hpp"

namespace furdyn {

using u128 = unsigned __int128;

/// u128 as a fraction of 2^128.
double unit_from_fixed(u128 v);
/// v in (-1, 1) as a 128-bit fixed-point fraction modulo 1.
u128 fixed_from_unit(double v);

/// Circle and interval points are binary expansions (head + 0.tail) * 2^-128;
/// shift points are symbolic sequences; product points are pairs.
struct MetricSystem;

class Point {
 public:
  enum class Kind { Expansion, Symbolic, Pair };

  static Point expansion(u128 head, Sequence tail = Sequence());
  /// v in [0, 1].
  static Point from_double(double v);
  /// The point whose full binary expansion is `bits`.
  static Point from_expansion(const Sequence& bits);
  static Point symbolic(Sequence s);
  static Point pair(Point a, Point b);

  Kind kind() const noexcept { return kind_; }
  u128 head() const noexcept { return head_; }
  /// Expansion tail or symbolic sequence.
  const Sequence& sequence() const noexcept { return seq_; }
  const Point& first() const;
  const Point& second() const;

  /// Expansion value to double precision.
  double value() const;
  std::string describe() const;

 private:
  friend struct MetricSystem;

  Kind kind_ = Kind::Expansion;
  u128 head_ = 0;
  Sequence seq_;
  std::shared_ptr<std::pair<Point, Point>> pair_;  // copy-on-write
};

enum class SpaceKind { Circle, Interval, BinaryShift, Product };
enum class MapKind { Rotation, Doubling, Tent, Shift, PairOf, Identity };
/// Which subshift the BinaryShift points are drawn from.
enum class ShiftSource { Full, Sturmian, ThueMorse, Image };
enum class SampleMode { Random, Adversarial };

struct KnownFlags {
  bool transitive = false;
  bool isometric = false;
  std::string note;
};

/// seed, index -> point of the system
using PointSource = std::function<Point(std::uint64_t, std::size_t)>;

struct MetricSystem {
  std::string spec;
  SpaceKind space = SpaceKind::Circle;
  MapKind map = MapKind::Identity;
  ShiftSource shift_source = ShiftSource::Full;
  /// Rotation angle, or Sturmian slope (upper 64 bits used).
  u128 alpha = 0;
  double diameter = 0;
  KnownFlags flags;
  std::shared_ptr<const MetricSystem> first;
  std::shared_ptr<const MetricSystem> second;
  /// Overrides the default point generators (factor images).
  PointSource point_source;

  double metric(const Point& p, const Point& q) const;
  Point step(const Point& p) const;
  /// In-place step.
  void advance(Point& p) const;
};

/// rot(<name>) | doubling | tent | shift | sturmian(<name>) | thue_morse |
/// prod(<spec>,<spec>) | id(circle|interval|shift), with
/// <name> in sqrt2-1, golden, sqrt3-1, pi-3, e-2.
MetricSystem make_system(std::string_view spec);
MetricSystem make_product(const MetricSystem& a, const MetricSystem& b);
/// A 128-bit truncation of a named irrational.
u128 named_irrational(std::string_view name);

Point iterate(const MetricSystem& sys, Point p, std::uint64_t n);

/// `count` points of B(center, delta), deterministic per (seed, index) so that
/// larger counts extend smaller ones. Adversarial mode appends structured points.
std::vector<Point> sample_ball(const MetricSystem& sys, const Point& center, double delta, std::uint64_t seed,
                               std::size_t count, SampleMode mode);
/// Structured offsets only.
std::vector<Point> structured_ball_points(const MetricSystem& sys, const Point& center, double delta);
/// Points spread over the whole space.
std::vector<Point> sample_points(const MetricSystem& sys, std::size_t count, std::uint64_t seed);

std::string to_string(SpaceKind k);
std::string to_string(MapKind k);

}  // namespace furdyn
