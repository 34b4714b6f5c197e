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

#include "furdyn/space.hpp"

#include <algorithm>
#include <cmath>

#include "furdyn/error.hpp"
#include "furdyn/random.hpp"

namespace furdyn {
namespace {

constexpr std::uint64_t kShiftMetricCap = 1075;  // 2^-1075 underflows to 0
constexpr double kInside = 1.0 - 1e-9;

const char* kSystemGrammar =
    "rot(<name>) | doubling | tent | shift | sturmian(<name>) | thue_morse | prod(<spec>,<spec>) | "
    "id(circle|interval|shift); <name> in sqrt2-1, golden, sqrt3-1, pi-3, e-2";

u128 make_u128(std::uint64_t hi, std::uint64_t lo) { return (static_cast<u128>(hi) << 64) | lo; }

u128 random_u128(Rng& rng) { return make_u128(rng.next(), rng.next()); }

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

/// Splits "a,b" at the top-level comma.
std::pair<std::string, std::string> split_pair(std::string_view body, std::string_view whole) {
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == ',' && depth == 0) return {trim(body.substr(0, i)), trim(body.substr(i + 1))};
  }
  fail(ErrorCode::Parse, "prod needs two comma-separated systems in '" + std::string(whole) + "'; grammar: " +
                             kSystemGrammar);
}

/// Full expansion of z * 2^-k.
Sequence scaled_expansion(const Sequence& z, unsigned k) { return splice(std::vector<bool>(k, false), z); }

Point add_offset(const Point& x, const Sequence& w_bits, bool subtract) {
  const Point w = Point::from_expansion(w_bits);
  u128 wh = w.head();
  Sequence wt = w.sequence();
  if (subtract) {
    wh = ~wh;
    wt = wt.flipped();
  }
  const bool carry = carry_into(x.sequence(), wt, 0);
  return Point::expansion(x.head() + wh + (carry ? 1 : 0), add_expansions(x.sequence(), wt));
}

std::vector<bool> golden_bits() {
  const u128 g = named_irrational("golden");
  std::vector<bool> bits(128);
  for (int i = 0; i < 128; ++i) bits[i] = ((g >> (127 - i)) & 1) != 0;
  return bits;
}

/// 1/3, 1/5, 1/7 and the golden mean as full expansions.
std::vector<std::pair<std::string, Sequence>> offset_numerators() {
  return {
      {"1/3", Sequence(periodic_rule("01"))},
      {"1/5", Sequence(periodic_rule("0011"))},
      {"1/7", Sequence(periodic_rule("001"))},
      {"golden", splice(golden_bits(), Sequence())},
  };
}

/// Smallest m with 2^-m < delta.
std::uint64_t agreement_length(double delta) {
  std::uint64_t m = 0;
  while (std::ldexp(1.0, -static_cast<int>(m)) >= delta && m < kShiftMetricCap) ++m;
  return m;
}

const SpaceKind& leaf_space(const MetricSystem& sys) { return sys.space; }

double offset_radius(const MetricSystem& sys, double delta) {
  return std::min(delta * kInside, leaf_space(sys) == SpaceKind::Circle ? 0.5 * kInside : kInside);
}

Point random_interval_like(const MetricSystem& sys, const Point& c, double delta, Rng& rng) {
  const double rho = offset_radius(sys, delta);
  double lo = -rho;
  double hi = rho;
  if (sys.space == SpaceKind::Interval) {
    const double v = c.value();
    lo = std::max(lo, -v * kInside);
    hi = std::min(hi, (1.0 - v) * kInside);
  }
  const double r = lo + (hi - lo) * rng.uniform();
  return Point::expansion(c.head() + fixed_from_unit(r), Sequence(random_rule(rng.next())));
}

/// Shifts of the center that stay in its ball (subshift points).
std::vector<Point> shift_neighbours(const Point& c, std::uint64_t m, std::size_t wanted) {
  std::vector<Point> out;
  const std::uint64_t limit = 1024 + 64 * m;
  for (std::uint64_t s = 1; s <= limit && out.size() < wanted; ++s) {
    const Sequence cand = c.sequence().shifted(s);
    if (first_mismatch(c.sequence(), cand, m) >= m) out.push_back(Point::symbolic(cand));
  }
  return out;
}

/// Sturmian points with a perturbed intercept that agree on m symbols.
std::optional<Point> sturmian_neighbour(const Point& c, std::uint64_t m, std::uint64_t r, bool negative) {
  const auto params = sturmian_parameters(*c.sequence().rule());
  if (!params) return std::nullopt;
  const auto [a, b] = *params;
  const std::uint64_t base = b + c.sequence().start() * a;
  for (int tries = 0; tries < 64 && r != 0; ++tries, r >>= 1) {
    const std::uint64_t beta = negative ? base - r : base + r;
    const Sequence cand(sturmian_rule(a, beta), 0, c.sequence().flip());
    if (first_mismatch(c.sequence(), cand, m) >= m) return Point::symbolic(cand);
  }
  return std::nullopt;
}

bool is_full_shift(const MetricSystem& sys) {
  return sys.space == SpaceKind::BinaryShift && sys.shift_source == ShiftSource::Full;
}

Point random_ball_point(const MetricSystem& sys, const Point& c, double delta, std::uint64_t seed, std::size_t i,
                        const std::vector<Point>& neighbours);

std::vector<Point> subshift_pool(const MetricSystem& sys, const Point& c, double delta) {
  if (sys.space != SpaceKind::BinaryShift || is_full_shift(sys)) return {};
  return shift_neighbours(c, agreement_length(delta), 64);
}

Point random_ball_point(const MetricSystem& sys, const Point& c, double delta, std::uint64_t seed, std::size_t i,
                        const std::vector<Point>& neighbours) {
  Rng rng(derive_seed(seed, i));
  switch (sys.space) {
    case SpaceKind::Circle:
    case SpaceKind::Interval:
      return random_interval_like(sys, c, delta, rng);
    case SpaceKind::BinaryShift: {
      const std::uint64_t m = agreement_length(delta);
      if (is_full_shift(sys)) return Point::symbolic(splice(c.sequence().prefix(m), Sequence(random_rule(rng.next()))));
      if (auto p = sturmian_neighbour(c, m, rng.next() >> rng.range(0, 8), rng.coin())) return *p;
      if (!neighbours.empty()) return neighbours[rng.range(0, neighbours.size() - 1)];
      return c;
    }
    case SpaceKind::Product: {
      const double d = delta / std::sqrt(2.0);
      const std::uint64_t s1 = rng.next();
      const std::uint64_t s2 = rng.next();
      const auto n1 = subshift_pool(*sys.first, c.first(), d);
      const auto n2 = subshift_pool(*sys.second, c.second(), d);
      return Point::pair(random_ball_point(*sys.first, c.first(), d, s1, i, n1),
                         random_ball_point(*sys.second, c.second(), d, s2, i, n2));
    }
  }
  return c;
}

}  // namespace

double unit_from_fixed(u128 v) {
  return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(v >> 64)), -64) +
         std::ldexp(static_cast<double>(static_cast<std::uint64_t>(v)), -128);
}

u128 fixed_from_unit(double v) {
  const double a = std::fabs(v);
  if (!(a < 1.0)) fail(ErrorCode::InvalidArgument, "fixed-point offset must lie in (-1, 1)");
  const double s = std::ldexp(a, 64);
  const double whole = std::floor(s);
  const auto hi = static_cast<std::uint64_t>(whole);
  const auto lo = static_cast<std::uint64_t>(std::ldexp(s - whole, 64));
  const u128 out = make_u128(hi, lo);
  return v < 0 ? static_cast<u128>(0) - out : out;
}

// ---------------------------------------------------------------------------
// Point

Point Point::expansion(u128 head, Sequence tail) {
  Point p;
  p.kind_ = Kind::Expansion;
  p.head_ = head;
  p.seq_ = std::move(tail);
  return p;
}

Point Point::from_double(double v) {
  if (!(v >= 0.0 && v <= 1.0)) fail(ErrorCode::InvalidArgument, "point value must lie in [0, 1]");
  if (v == 1.0) return expansion(~static_cast<u128>(0), Sequence(constant_rule(true)));
  return expansion(fixed_from_unit(v));
}

Point Point::from_expansion(const Sequence& bits) {
  u128 head = 0;
  for (int i = 0; i < 128; ++i) head = (head << 1) | (bits.at(i) ? 1 : 0);
  return expansion(head, bits.shifted(128));
}

Point Point::symbolic(Sequence s) {
  Point p;
  p.kind_ = Kind::Symbolic;
  p.seq_ = std::move(s);
  return p;
}

Point Point::pair(Point a, Point b) {
  Point p;
  p.kind_ = Kind::Pair;
  p.pair_ = std::make_shared<std::pair<Point, Point>>(std::move(a), std::move(b));
  return p;
}

const Point& Point::first() const {
  if (!pair_) fail(ErrorCode::InvalidArgument, "first() on a non-pair point");
  return pair_->first;
}

const Point& Point::second() const {
  if (!pair_) fail(ErrorCode::InvalidArgument, "second() on a non-pair point");
  return pair_->second;
}

double Point::value() const {
  if (kind_ != Kind::Expansion) fail(ErrorCode::InvalidArgument, "value() on a non-numeric point");
  return unit_from_fixed(head_);
}

std::string Point::describe() const {
  switch (kind_) {
    case Kind::Expansion: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", value());
      return buf;
    }
    case Kind::Symbolic: {
      std::string s;
      for (bool b : seq_.prefix(16)) s += b ? '1' : '0';
      return s + "...";
    }
    case Kind::Pair:
      return "(" + first().describe() + "," + second().describe() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// systems

double MetricSystem::metric(const Point& p, const Point& q) const {
  switch (space) {
    case SpaceKind::Circle: {
      const u128 diff = p.head() - q.head();
      const u128 neg = static_cast<u128>(0) - diff;
      return unit_from_fixed(std::min(diff, neg));
    }
    case SpaceKind::Interval:
      return unit_from_fixed(p.head() > q.head() ? p.head() - q.head() : q.head() - p.head());
    case SpaceKind::BinaryShift: {
      const std::uint64_t m = first_mismatch(p.sequence(), q.sequence(), kShiftMetricCap);
      return std::ldexp(1.0, -static_cast<int>(m));
    }
    case SpaceKind::Product:
      return std::hypot(first->metric(p.first(), q.first()), second->metric(p.second(), q.second()));
  }
  return 0;
}

Point MetricSystem::step(const Point& p) const {
  switch (map) {
    case MapKind::Identity:
      return p;
    case MapKind::Rotation:
      return Point::expansion(p.head() + alpha, p.sequence());
    case MapKind::Doubling:
      return Point::expansion((p.head() << 1) | (p.sequence().at(0) ? 1 : 0), p.sequence().shifted(1));
    case MapKind::Tent: {
      const bool upper = (p.head() >> 127) != 0;
      const u128 h = (p.head() << 1) | (p.sequence().at(0) ? 1 : 0);
      const Sequence t = p.sequence().shifted(1);
      return upper ? Point::expansion(~h, t.flipped()) : Point::expansion(h, t);
    }
    case MapKind::Shift:
      return Point::symbolic(p.sequence().shifted(1));
    case MapKind::PairOf:
      return Point::pair(first->step(p.first()), second->step(p.second()));
  }
  return p;
}

void MetricSystem::advance(Point& p) const {
  switch (map) {
    case MapKind::Identity:
      return;
    case MapKind::Rotation:
      p.head_ += alpha;
      return;
    case MapKind::Doubling:
    case MapKind::Tent: {
      const bool upper = (p.head_ >> 127) != 0;
      p.head_ = (p.head_ << 1) | (p.seq_.at(0) ? 1 : 0);
      p.seq_.advance(1);
      if (map == MapKind::Tent && upper) {
        p.head_ = ~p.head_;
        p.seq_ = p.seq_.flipped();
      }
      return;
    }
    case MapKind::Shift:
      p.seq_.advance(1);
      return;
    case MapKind::PairOf:
      if (p.pair_.use_count() > 1) p.pair_ = std::make_shared<std::pair<Point, Point>>(*p.pair_);
      first->advance(p.pair_->first);
      second->advance(p.pair_->second);
      return;
  }
}

u128 named_irrational(std::string_view name) {
  if (name == "sqrt2-1") return make_u128(0x6a09e667f3bcc908ULL, 0xb2fb1366ea957d3eULL);
  if (name == "golden") return make_u128(0x9e3779b97f4a7c15ULL, 0xf39cc0605cedc834ULL);
  if (name == "sqrt3-1") return make_u128(0xbb67ae8584caa73bULL, 0x25742d7078b83b89ULL);
  if (name == "pi-3") return make_u128(0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL);
  if (name == "e-2") return make_u128(0xb7e151628aed2a6aULL, 0xbf7158809cf4f3c7ULL);
  const bool numeric = !name.empty() && (std::isdigit(static_cast<unsigned char>(name.front())) || name.front() == '.');
  if (numeric) {
    fail(ErrorCode::InvalidArgument, "rational or numeric angle '" + std::string(name) +
                                         "' rejected: the transitivity flag needs an irrational angle; use one of "
                                         "sqrt2-1, golden, sqrt3-1, pi-3, e-2");
  }
  fail(ErrorCode::Parse, "unknown irrational '" + std::string(name) + "'; grammar: " + kSystemGrammar);
}

MetricSystem make_product(const MetricSystem& a, const MetricSystem& b) {
  MetricSystem s;
  s.spec = "prod(" + a.spec + "," + b.spec + ")";
  s.space = SpaceKind::Product;
  s.map = MapKind::PairOf;
  s.diameter = std::hypot(a.diameter, b.diameter);
  s.flags.isometric = a.flags.isometric && b.flags.isometric;
  s.flags.transitive = false;
  s.flags.note = "products are not marked transitive; transitivity of a product is not inherited in general";
  s.first = std::make_shared<const MetricSystem>(a);
  s.second = std::make_shared<const MetricSystem>(b);
  return s;
}

MetricSystem make_system(std::string_view text) {
  const std::string spec = trim(text);
  const std::string_view s = spec;
  auto arg_of = [&](std::string_view prefix) -> std::optional<std::string> {
    if (s.starts_with(prefix) && s.ends_with(")")) return trim(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    return std::nullopt;
  };
  MetricSystem sys;
  sys.spec = spec;
  if (auto name = arg_of("rot(")) {
    sys.space = SpaceKind::Circle;
    sys.map = MapKind::Rotation;
    sys.alpha = named_irrational(*name);
    sys.diameter = 0.5;
    sys.flags = {true, true, "irrational rotations are minimal, hence transitive, and isometric"};
  } else if (s == "doubling") {
    sys.space = SpaceKind::Circle;
    sys.map = MapKind::Doubling;
    sys.diameter = 0.5;
    sys.flags = {true, false, "the doubling map is topologically exact, hence transitive"};
  } else if (s == "tent") {
    sys.space = SpaceKind::Interval;
    sys.map = MapKind::Tent;
    sys.diameter = 1.0;
    sys.flags = {true, false, "the full tent map is topologically exact, hence transitive"};
  } else if (s == "shift") {
    sys.space = SpaceKind::BinaryShift;
    sys.map = MapKind::Shift;
    sys.diameter = 1.0;
    sys.flags = {true, false, "the full one-sided shift has a dense orbit"};
  } else if (auto name = arg_of("sturmian(")) {
    sys.space = SpaceKind::BinaryShift;
    sys.map = MapKind::Shift;
    sys.shift_source = ShiftSource::Sturmian;
    sys.alpha = named_irrational(*name);
    sys.diameter = 1.0;
    sys.flags = {true, false, "Sturmian subshifts are minimal"};
  } else if (s == "thue_morse") {
    sys.space = SpaceKind::BinaryShift;
    sys.map = MapKind::Shift;
    sys.shift_source = ShiftSource::ThueMorse;
    sys.diameter = 1.0;
    sys.flags = {true, false, "the Thue-Morse subshift is minimal"};
  } else if (auto body = arg_of("prod(")) {
    const auto [a, b] = split_pair(*body, s);
    return make_product(make_system(a), make_system(b));
  } else if (auto space = arg_of("id(")) {
    sys.map = MapKind::Identity;
    sys.flags = {false, true, "the identity is an isometry and not transitive"};
    if (*space == "circle") {
      sys.space = SpaceKind::Circle;
      sys.diameter = 0.5;
    } else if (*space == "interval") {
      sys.space = SpaceKind::Interval;
      sys.diameter = 1.0;
    } else if (*space == "shift") {
      sys.space = SpaceKind::BinaryShift;
      sys.diameter = 1.0;
    } else {
      fail(ErrorCode::Parse, "unknown space '" + *space + "' in '" + spec + "'; grammar: " + kSystemGrammar);
    }
  } else {
    fail(ErrorCode::Parse, "unknown system '" + spec + "'; grammar: " + kSystemGrammar);
  }
  return sys;
}

Point iterate(const MetricSystem& sys, Point p, std::uint64_t n) {
  switch (sys.map) {
    case MapKind::Identity:
      return p;
    case MapKind::Rotation:
      return Point::expansion(p.head() + sys.alpha * n, p.sequence());
    case MapKind::Shift:
      return Point::symbolic(p.sequence().shifted(n));
    case MapKind::PairOf:
      return Point::pair(iterate(*sys.first, p.first(), n), iterate(*sys.second, p.second(), n));
    default:
      for (std::uint64_t i = 0; i < n; ++i) p = sys.step(p);
      return p;
  }
}

// ---------------------------------------------------------------------------
// samplers

std::vector<Point> structured_ball_points(const MetricSystem& sys, const Point& c, double delta) {
  std::vector<Point> out;
  switch (sys.space) {
    case SpaceKind::Circle:
    case SpaceKind::Interval: {
      const double rho = offset_radius(sys, delta);
      for (const auto& [label, z] : offset_numerators()) {
        const double zv = Point::from_expansion(z).value();
        unsigned k = 0;
        while (std::ldexp(zv, -static_cast<int>(k)) >= rho) ++k;
        for (unsigned extra : {0u, 2u, 5u}) {
          const Sequence w = scaled_expansion(z, k + extra);
          const double wv = std::ldexp(zv, -static_cast<int>(k + extra));
          if (sys.space == SpaceKind::Circle) {
            out.push_back(add_offset(c, w, false));
            out.push_back(add_offset(c, w, true));
          } else {
            out.push_back(add_offset(c, w, c.value() + wv > 1.0));
          }
        }
      }
      break;
    }
    case SpaceKind::BinaryShift: {
      const std::uint64_t m = agreement_length(delta);
      if (is_full_shift(sys)) {
        const std::vector<bool> head = c.sequence().prefix(m);
        for (const Sequence& rest : {Sequence(constant_rule(false)), Sequence(constant_rule(true)),
                                     Sequence(periodic_rule("01")), Sequence(periodic_rule("10")),
                                     Sequence(thue_morse_rule()), c.sequence().shifted(m).flipped()}) {
          out.push_back(Point::symbolic(splice(head, rest)));
        }
        break;
      }
      for (std::uint64_t r : {std::uint64_t{1}, std::uint64_t{1} << 20, std::uint64_t{1} << 40}) {
        for (bool neg : {false, true}) {
          if (auto p = sturmian_neighbour(c, m, r, neg)) out.push_back(*p);
        }
      }
      auto shifts = shift_neighbours(c, m, 8);
      out.insert(out.end(), shifts.begin(), shifts.end());
      break;
    }
    case SpaceKind::Product: {
      const double d = delta * kInside;
      for (const Point& a : structured_ball_points(*sys.first, c.first(), d)) out.push_back(Point::pair(a, c.second()));
      for (const Point& b : structured_ball_points(*sys.second, c.second(), d)) out.push_back(Point::pair(c.first(), b));
      break;
    }
  }
  return out;
}

std::vector<Point> sample_ball(const MetricSystem& sys, const Point& center, double delta, std::uint64_t seed,
                               std::size_t count, SampleMode mode) {
  if (!(delta > 0)) fail(ErrorCode::InvalidArgument, "ball radius must be positive");
  std::vector<Point> out;
  out.reserve(count);
  const auto pool = subshift_pool(sys, center, delta);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ball_point(sys, center, delta, seed, i, pool));
  if (mode == SampleMode::Adversarial) {
    auto extra = structured_ball_points(sys, center, delta);
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

std::vector<Point> sample_points(const MetricSystem& sys, std::size_t count, std::uint64_t seed) {
  std::vector<Point> out;
  out.reserve(count);
  if (sys.point_source) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(sys.point_source(seed, i));
    return out;
  }
  if (sys.space == SpaceKind::Product) {
    std::size_t k = 1;
    while (k * k < count) ++k;
    const auto a = sample_points(*sys.first, k, derive_seed(seed, 1));
    const auto b = sample_points(*sys.second, k, derive_seed(seed, 2));
    for (std::size_t i = 0; i < count; ++i) out.push_back(Point::pair(a[i % k], b[(i / k) % k]));
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const double grid = (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    switch (sys.space) {
      case SpaceKind::Circle:
      case SpaceKind::Interval:
        out.push_back(Point::expansion(fixed_from_unit(grid) ^ (random_u128(rng) >> 20),
                                       Sequence(random_rule(rng.next()))));
        break;
      case SpaceKind::BinaryShift:
        if (sys.shift_source == ShiftSource::Sturmian) {
          const auto beta = static_cast<std::uint64_t>(fixed_from_unit(grid) >> 64) ^ (rng.next() >> 20);
          out.push_back(Point::symbolic(Sequence(sturmian_rule(static_cast<std::uint64_t>(sys.alpha >> 64), beta))));
        } else if (sys.shift_source == ShiftSource::ThueMorse) {
          out.push_back(Point::symbolic(Sequence(thue_morse_rule(), rng.next() >> 8, i % 2 == 1)));
        } else {
          out.push_back(Point::symbolic(Sequence(random_rule(rng.next()))));
        }
        break;
      default:
        break;
    }
  }
  return out;
}

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::Circle: return "circle";
    case SpaceKind::Interval: return "interval";
    case SpaceKind::BinaryShift: return "binary_shift";
    case SpaceKind::Product: return "product";
  }
  return "?";
}

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::Rotation: return "rotation";
    case MapKind::Doubling: return "doubling";
    case MapKind::Tent: return "tent";
    case MapKind::Shift: return "shift";
    case MapKind::PairOf: return "pair";
    case MapKind::Identity: return "identity";
  }
  return "?";
}

}  // namespace furdyn
