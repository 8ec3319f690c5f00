#include "fucik/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace fucik {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double seg_closest_param(Point2 a, Point2 b, Point2 p) {
  const Point2 d = b - a;
  const double len2 = norm2(d);
  if (len2 <= 0.0) return 0.0;
  return std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
}

double dist_point_segment(Point2 p, Point2 a, Point2 b) {
  const double t = seg_closest_param(a, b, p);
  return distance(p, a + t * (b - a));
}

bool inside_open(const Ball& s, Point2 p) {
  return norm2(p - s.center) < s.radius * s.radius;
}
bool inside_open(const Rectangle& s, Point2 p) {
  return p.x > s.min.x && p.x < s.max.x && p.y > s.min.y && p.y < s.max.y;
}
bool inside_open(const Stadium& s, Point2 p) {
  return dist_point_segment(p, s.a, s.b) < s.half_width;
}
bool inside_open(const Annulus& s, Point2 p) {
  const double d2 = norm2(p - s.center);
  return d2 > s.inner * s.inner && d2 < s.outer * s.outer;
}
bool inside_open(const Interval& s, Point2 p) {
  return p.y == 0.0 && p.x > s.a && p.x < s.b;
}

// Strict interior test; points on an edge count as outside. Uses an exact
// on-edge rejection followed by the standard half-open crossing rule.
bool inside_open(const Polygon& s, Point2 p) {
  const auto& v = s.vertices;
  const size_t n = v.size();
  double scale = 1.0;
  for (const Point2& q : v) scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
  const double edge_eps = 1e-13 * scale;
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = v[j], b = v[i];
    const double t = seg_closest_param(a, b, p);
    if (distance(p, a + t * (b - a)) <= edge_eps) return false;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

bool shape_contains_open(const PrimitiveShape& shape, Point2 p) {
  return std::visit([&](const auto& s) { return inside_open(s, p); }, shape);
}

struct Box {
  Point2 lo, hi;
};

Box shape_box(const Ball& s) {
  return {{s.center.x - s.radius, s.center.y - s.radius},
          {s.center.x + s.radius, s.center.y + s.radius}};
}
Box shape_box(const Rectangle& s) { return {s.min, s.max}; }
Box shape_box(const Stadium& s) {
  return {{std::min(s.a.x, s.b.x) - s.half_width, std::min(s.a.y, s.b.y) - s.half_width},
          {std::max(s.a.x, s.b.x) + s.half_width, std::max(s.a.y, s.b.y) + s.half_width}};
}
Box shape_box(const Annulus& s) {
  return {{s.center.x - s.outer, s.center.y - s.outer},
          {s.center.x + s.outer, s.center.y + s.outer}};
}
Box shape_box(const Polygon& s) {
  Box b{{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()},
        {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()}};
  for (const Point2& v : s.vertices) {
    b.lo.x = std::min(b.lo.x, v.x);
    b.lo.y = std::min(b.lo.y, v.y);
    b.hi.x = std::max(b.hi.x, v.x);
    b.hi.y = std::max(b.hi.y, v.y);
  }
  return b;
}
Box shape_box(const Interval& s) { return {{s.a, 0.0}, {s.b, 0.0}}; }

Box shape_bounding_box(const PrimitiveShape& shape) {
  return std::visit([](const auto& s) { return shape_box(s); }, shape);
}

void validate_shape(const Ball& s) {
  if (!finite(s.center) || !std::isfinite(s.radius))
    throw ValidationError("ball: non-finite parameters");
  if (s.radius <= 0.0) throw ValidationError("ball: radius must be positive");
}
void validate_shape(const Rectangle& s) {
  if (!finite(s.min) || !finite(s.max))
    throw ValidationError("rectangle: non-finite corners");
  if (!(s.min.x < s.max.x) || !(s.min.y < s.max.y))
    throw ValidationError("rectangle: corners must be strictly ordered");
}
void validate_shape(const Stadium& s) {
  if (!finite(s.a) || !finite(s.b) || !std::isfinite(s.half_width))
    throw ValidationError("stadium: non-finite parameters");
  if (s.half_width <= 0.0) throw ValidationError("stadium: half_width must be positive");
  if (distance(s.a, s.b) <= 0.0)
    throw ValidationError("stadium: segment endpoints must be distinct");
}
void validate_shape(const Annulus& s) {
  if (!finite(s.center) || !std::isfinite(s.inner) || !std::isfinite(s.outer))
    throw ValidationError("annulus: non-finite parameters");
  if (s.inner <= 0.0 || s.outer <= s.inner)
    throw ValidationError("annulus: need 0 < inner < outer");
}
void validate_shape(const Polygon& s) {
  const auto& v = s.vertices;
  if (v.size() < 3) throw ValidationError("polygon: need at least 3 vertices");
  for (const Point2& q : v)
    if (!finite(q)) throw ValidationError("polygon: non-finite vertex");
  double area2 = 0.0;
  for (size_t i = 0, j = v.size() - 1; i < v.size(); j = i++)
    area2 += cross(v[j], v[i]);
  if (area2 <= 0.0)
    throw ValidationError("polygon: vertices must be counterclockwise with positive area");
  // Simplicity: non-adjacent edges must not intersect, adjacent edges must
  // not fold back onto each other.
  const size_t n = v.size();
  auto segs_intersect = [](Point2 a, Point2 b, Point2 c, Point2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
  };
  for (size_t i = 0; i < n; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % n];
    if (distance(a, b) <= 0.0) throw ValidationError("polygon: repeated vertex");
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segs_intersect(a, b, v[j], v[(j + 1) % n]))
        throw ValidationError("polygon: edges self-intersect");
    }
  }
}
void validate_shape(const Interval& s) {
  if (!std::isfinite(s.a) || !std::isfinite(s.b) || !(s.a < s.b))
    throw ValidationError("interval: need finite a < b");
}

void validate_primitive(const PrimitiveShape& shape) {
  std::visit([](const auto& s) { validate_shape(s); }, shape);
}

bool same_point(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

bool duplicate_shapes(const PrimitiveShape& u, const PrimitiveShape& w) {
  if (u.index() != w.index()) return false;
  if (const auto* a = std::get_if<Ball>(&u))
    return same_point(a->center, std::get<Ball>(w).center) &&
           a->radius == std::get<Ball>(w).radius;
  if (const auto* a = std::get_if<Rectangle>(&u))
    return same_point(a->min, std::get<Rectangle>(w).min) &&
           same_point(a->max, std::get<Rectangle>(w).max);
  if (const auto* a = std::get_if<Stadium>(&u)) {
    const auto& b = std::get<Stadium>(w);
    return same_point(a->a, b.a) && same_point(a->b, b.b) &&
           a->half_width == b.half_width;
  }
  if (const auto* a = std::get_if<Annulus>(&u)) {
    const auto& b = std::get<Annulus>(w);
    return same_point(a->center, b.center) && a->inner == b.inner &&
           a->outer == b.outer;
  }
  if (const auto* a = std::get_if<Polygon>(&u)) {
    const auto& b = std::get<Polygon>(w);
    if (a->vertices.size() != b.vertices.size()) return false;
    for (size_t i = 0; i < a->vertices.size(); ++i)
      if (!same_point(a->vertices[i], b.vertices[i])) return false;
    return true;
  }
  if (const auto* a = std::get_if<Interval>(&u)) {
    const auto& b = std::get<Interval>(w);
    return a->a == b.a && a->b == b.b;
  }
  return false;
}

double wrap_angle(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  return theta;
}

}  // namespace

DomainSpec make_ball(Point2 center, double radius) {
  return DomainSpec{{Ball{center, radius}}};
}
DomainSpec make_rectangle(Point2 min, Point2 max) {
  return DomainSpec{{Rectangle{min, max}}};
}
DomainSpec make_interval(double a, double b) {
  return DomainSpec{{Interval{a, b}}};
}

DomainSpec make_linked_balls(double r1, double r2, double gap,
                             double tube_half_width) {
  if (!(r1 > 0.0) || !(r2 >= r1))
    throw ValidationError("linked_balls: need 0 < r1 <= r2");
  if (!(gap > 0.0) || !(gap < r1))
    throw ValidationError("linked_balls: tube length must satisfy 0 < gap < r1");
  double w = tube_half_width < 0.0 ? 0.5 * r1 : tube_half_width;
  if (!(w > 0.0) || w >= r1)
    throw ValidationError("linked_balls: tube half-width must lie in (0, r1)");
  const Point2 c1{0.0, 0.0};
  const Point2 c2{r1 + gap + r2, 0.0};
  return DomainSpec{{Ball{c1, r1}, Stadium{c1, c2, w}, Ball{c2, r2}}};
}

DomainSpec translated(const DomainSpec& spec, Point2 offset) {
  DomainSpec out = spec;
  for (auto& shape : out.shapes) {
    std::visit(
        [&](auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Ball>) s.center = s.center + offset;
          else if constexpr (std::is_same_v<T, Rectangle>) {
            s.min = s.min + offset;
            s.max = s.max + offset;
          } else if constexpr (std::is_same_v<T, Stadium>) {
            s.a = s.a + offset;
            s.b = s.b + offset;
          } else if constexpr (std::is_same_v<T, Annulus>) s.center = s.center + offset;
          else if constexpr (std::is_same_v<T, Polygon>) {
            for (Point2& v : s.vertices) v = v + offset;
          } else if constexpr (std::is_same_v<T, Interval>) {
            s.a += offset.x;
            s.b += offset.x;
          }
        },
        shape);
  }
  return out;
}

DomainSpec scaled(const DomainSpec& spec, double factor) {
  if (!(factor > 0.0)) throw ValidationError("scaled: factor must be positive");
  DomainSpec out = spec;
  for (auto& shape : out.shapes) {
    std::visit(
        [&](auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Ball>) {
            s.center = factor * s.center;
            s.radius *= factor;
          } else if constexpr (std::is_same_v<T, Rectangle>) {
            s.min = factor * s.min;
            s.max = factor * s.max;
          } else if constexpr (std::is_same_v<T, Stadium>) {
            s.a = factor * s.a;
            s.b = factor * s.b;
            s.half_width *= factor;
          } else if constexpr (std::is_same_v<T, Annulus>) {
            s.center = factor * s.center;
            s.inner *= factor;
            s.outer *= factor;
          } else if constexpr (std::is_same_v<T, Polygon>) {
            for (Point2& v : s.vertices) v = factor * v;
          } else if constexpr (std::is_same_v<T, Interval>) {
            s.a *= factor;
            s.b *= factor;
          }
        },
        shape);
  }
  return out;
}

DomainSpec rotated(const DomainSpec& spec, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  auto rot = [&](Point2 p) { return Point2{c * p.x - s * p.y, s * p.x + c * p.y}; };
  DomainSpec out;
  for (const auto& shape : spec.shapes) {
    std::visit(
        [&](const auto& sh) {
          using T = std::decay_t<decltype(sh)>;
          if constexpr (std::is_same_v<T, Ball>)
            out.shapes.push_back(Ball{rot(sh.center), sh.radius});
          else if constexpr (std::is_same_v<T, Rectangle>)
            out.shapes.push_back(Polygon{{rot(sh.min), rot({sh.max.x, sh.min.y}),
                                          rot(sh.max), rot({sh.min.x, sh.max.y})}});
          else if constexpr (std::is_same_v<T, Stadium>)
            out.shapes.push_back(Stadium{rot(sh.a), rot(sh.b), sh.half_width});
          else if constexpr (std::is_same_v<T, Annulus>)
            out.shapes.push_back(Annulus{rot(sh.center), sh.inner, sh.outer});
          else if constexpr (std::is_same_v<T, Polygon>) {
            Polygon p;
            for (Point2 v : sh.vertices) p.vertices.push_back(rot(v));
            out.shapes.push_back(std::move(p));
          } else if constexpr (std::is_same_v<T, Interval>)
            throw ValidationError("rotated: 1D intervals cannot be rotated");
        },
        shape);
  }
  return out;
}

Domain::Domain(DomainSpec spec) : spec_(std::move(spec)) {
  if (spec_.shapes.empty()) throw ValidationError("domain: empty shape list");
  for (const auto& shape : spec_.shapes) validate_primitive(shape);
  for (size_t i = 0; i < spec_.shapes.size(); ++i)
    for (size_t j = i + 1; j < spec_.shapes.size(); ++j)
      if (duplicate_shapes(spec_.shapes[i], spec_.shapes[j]))
        throw ValidationError("domain: duplicate shapes are rejected");

  const bool has_interval = std::any_of(
      spec_.shapes.begin(), spec_.shapes.end(),
      [](const PrimitiveShape& s) { return std::holds_alternative<Interval>(s); });
  if (has_interval) {
    if (spec_.shapes.size() != 1)
      throw ValidationError("domain: an interval cannot be combined with 2D shapes");
    interval_ = std::get<Interval>(spec_.shapes.front());
  }

  Box box{{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()},
          {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()}};
  for (const auto& shape : spec_.shapes) {
    const Box b = shape_bounding_box(shape);
    box.lo.x = std::min(box.lo.x, b.lo.x);
    box.lo.y = std::min(box.lo.y, b.lo.y);
    box.hi.x = std::max(box.hi.x, b.hi.x);
    box.hi.y = std::max(box.hi.y, b.hi.y);
  }
  bbox_min_ = box.lo;
  bbox_max_ = box.hi;

  if (!interval_) compile();
}

const Interval& Domain::interval() const {
  if (!interval_) throw DomainError("domain is not an interval");
  return *interval_;
}

double Domain::diameter() const {
  if (interval_) return interval_->b - interval_->a;
  return distance(bbox_min_, bbox_max_);
}

bool Domain::contains(Point2 p) const {
  if (!finite(p)) return false;
  for (const auto& shape : spec_.shapes)
    if (shape_contains_open(shape, p)) return true;
  return false;
}

bool Domain::covered(Point2 p, int skip1, int skip2) const {
  for (int k = 0; k < static_cast<int>(spec_.shapes.size()); ++k) {
    if (k == skip1 || k == skip2) continue;
    if (shape_contains_open(spec_.shapes[k], p)) return true;
  }
  return false;
}

void Domain::compile() {
  const int n = static_cast<int>(spec_.shapes.size());
  for (int i = 0; i < n; ++i) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Ball>) {
            arcs_.push_back({s.center, s.radius, 0.0, kTwoPi, i});
          } else if constexpr (std::is_same_v<T, Rectangle>) {
            const Point2 a = s.min, c = s.max;
            const Point2 b{c.x, a.y}, d{a.x, c.y};
            segments_.push_back({a, b, i});
            segments_.push_back({b, c, i});
            segments_.push_back({c, d, i});
            segments_.push_back({d, a, i});
          } else if constexpr (std::is_same_v<T, Stadium>) {
            const Point2 u = (1.0 / distance(s.a, s.b)) * (s.b - s.a);
            const Point2 nrm{-u.y, u.x};
            const Point2 off = s.half_width * nrm;
            segments_.push_back({s.a + off, s.b + off, i});
            segments_.push_back({s.b - off, s.a - off, i});
            const double phi = std::atan2(u.y, u.x);
            arcs_.push_back({s.b, s.half_width, phi - std::numbers::pi / 2,
                             phi + std::numbers::pi / 2, i});
            arcs_.push_back({s.a, s.half_width, phi + std::numbers::pi / 2,
                             phi + 3 * std::numbers::pi / 2, i});
          } else if constexpr (std::is_same_v<T, Annulus>) {
            arcs_.push_back({s.center, s.inner, 0.0, kTwoPi, i});
            arcs_.push_back({s.center, s.outer, 0.0, kTwoPi, i});
          } else if constexpr (std::is_same_v<T, Polygon>) {
            const size_t m = s.vertices.size();
            for (size_t k = 0; k < m; ++k)
              segments_.push_back({s.vertices[k], s.vertices[(k + 1) % m], i});
          }
        },
        spec_.shapes[i]);
  }

  // Fixed candidate features of the union boundary: element endpoints and
  // pairwise element crossings that no other interior covers. Together with
  // the per-query foot points these realize the exact distance to the
  // clipped arrangement.
  auto add_candidate = [&](Point2 q, int skip1, int skip2) {
    if (!covered(q, skip1, skip2)) fixed_candidates_.push_back(q);
  };

  for (const auto& seg : segments_) {
    add_candidate(seg.a, seg.shape, -1);
    add_candidate(seg.b, seg.shape, -1);
  }
  for (const auto& arc : arcs_) {
    if (arc.theta1 - arc.theta0 < kTwoPi) {
      add_candidate(arc.center + arc.radius * Point2{std::cos(arc.theta0),
                                                     std::sin(arc.theta0)},
                    arc.shape, -1);
      add_candidate(arc.center + arc.radius * Point2{std::cos(arc.theta1),
                                                     std::sin(arc.theta1)},
                    arc.shape, -1);
    }
  }

  auto arc_has_angle = [](const ArcElement& arc, double theta) {
    const double span = arc.theta1 - arc.theta0;
    if (span >= kTwoPi) return true;
    const double rel = wrap_angle(theta - arc.theta0);
    return rel <= span + 1e-12;
  };

  // segment x segment crossings
  for (size_t i = 0; i < segments_.size(); ++i) {
    for (size_t j = i + 1; j < segments_.size(); ++j) {
      const auto& s1 = segments_[i];
      const auto& s2 = segments_[j];
      if (s1.shape == s2.shape) continue;
      const Point2 d1 = s1.b - s1.a, d2 = s2.b - s2.a;
      const double den = cross(d1, d2);
      if (std::abs(den) <= 1e-15 * norm(d1) * norm(d2)) continue;
      const double t = cross(s2.a - s1.a, d2) / den;
      const double u = cross(s2.a - s1.a, d1) / den;
      if (t < -1e-12 || t > 1 + 1e-12 || u < -1e-12 || u > 1 + 1e-12) continue;
      add_candidate(s1.a + t * d1, s1.shape, s2.shape);
    }
  }

  // segment x arc crossings
  for (const auto& seg : segments_) {
    for (const auto& arc : arcs_) {
      if (seg.shape == arc.shape) continue;
      const Point2 d = seg.b - seg.a;
      const Point2 f = seg.a - arc.center;
      const double A = norm2(d);
      const double B = 2.0 * dot(d, f);
      const double C = norm2(f) - arc.radius * arc.radius;
      const double disc = B * B - 4 * A * C;
      if (disc <= 0.0) continue;
      const double sq = std::sqrt(disc);
      for (const double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
        if (t < -1e-12 || t > 1 + 1e-12) continue;
        const Point2 q = seg.a + t * d;
        if (!arc_has_angle(arc, std::atan2(q.y - arc.center.y, q.x - arc.center.x)))
          continue;
        add_candidate(q, seg.shape, arc.shape);
      }
    }
  }

  // arc x arc crossings
  for (size_t i = 0; i < arcs_.size(); ++i) {
    for (size_t j = i + 1; j < arcs_.size(); ++j) {
      const auto& a1 = arcs_[i];
      const auto& a2 = arcs_[j];
      if (a1.shape == a2.shape) continue;
      const double d = distance(a1.center, a2.center);
      if (d <= 1e-15) continue;  // concentric
      if (d >= a1.radius + a2.radius || d <= std::abs(a1.radius - a2.radius))
        continue;
      const double a = (d * d + a1.radius * a1.radius - a2.radius * a2.radius) /
                       (2.0 * d);
      const double h2 = a1.radius * a1.radius - a * a;
      if (h2 <= 0.0) continue;
      const double h = std::sqrt(h2);
      const Point2 u = (1.0 / d) * (a2.center - a1.center);
      const Point2 up{-u.y, u.x};
      for (const Point2 q :
           {a1.center + a * u + h * up, a1.center + a * u - h * up}) {
        if (!arc_has_angle(a1, std::atan2(q.y - a1.center.y, q.x - a1.center.x)))
          continue;
        if (!arc_has_angle(a2, std::atan2(q.y - a2.center.y, q.x - a2.center.x)))
          continue;
        add_candidate(q, a1.shape, a2.shape);
      }
    }
  }
}

double Domain::signed_clearance(Point2 p) const {
  if (interval_) {
    if (inside_open(*interval_, p))
      return std::min(p.x - interval_->a, interval_->b - p.x);
    return -dist_point_segment(p, {interval_->a, 0.0}, {interval_->b, 0.0});
  }

  double best = std::numeric_limits<double>::max();
  for (const Point2& q : fixed_candidates_) best = std::min(best, distance(p, q));

  for (const auto& seg : segments_) {
    const double t = seg_closest_param(seg.a, seg.b, p);
    const Point2 q = seg.a + t * (seg.b - seg.a);
    if (!covered(q, seg.shape, -1)) best = std::min(best, distance(p, q));
  }
  for (const auto& arc : arcs_) {
    const Point2 rel = p - arc.center;
    double theta = std::atan2(rel.y, rel.x);
    const double span = arc.theta1 - arc.theta0;
    if (span < kTwoPi) {
      const double relang = wrap_angle(theta - arc.theta0);
      if (relang > span) continue;  // foot outside arc; endpoints already seeded
    }
    const Point2 q = arc.center + arc.radius * Point2{std::cos(theta), std::sin(theta)};
    if (!covered(q, arc.shape, -1)) best = std::min(best, distance(p, q));
  }
  return contains(p) ? best : -best;
}

double Domain::clearance(Point2 p) const {
  if (interval_) {
    if (!inside_open(*interval_, p))
      throw DomainError("clearance: point outside the domain");
    return std::min(p.x - interval_->a, interval_->b - p.x);
  }
  if (!contains(p)) throw DomainError("clearance: point outside the domain");
  return signed_clearance(p);
}

std::vector<Point2> Domain::boundary_samples(int per_element) const {
  std::vector<Point2> out;
  if (interval_) {
    out.push_back({interval_->a, 0.0});
    out.push_back({interval_->b, 0.0});
    return out;
  }
  for (const auto& seg : segments_) {
    for (int k = 0; k < per_element; ++k) {
      const double t = (k + 0.5) / per_element;
      const Point2 q = seg.a + t * (seg.b - seg.a);
      if (!covered(q, seg.shape, -1)) out.push_back(q);
    }
  }
  for (const auto& arc : arcs_) {
    const double span = arc.theta1 - arc.theta0;
    for (int k = 0; k < per_element; ++k) {
      const double theta = arc.theta0 + span * (k + 0.5) / per_element;
      const Point2 q =
          arc.center + arc.radius * Point2{std::cos(theta), std::sin(theta)};
      if (!covered(q, arc.shape, -1)) out.push_back(q);
    }
  }
  return out;
}

bool contains(const DomainSpec& spec, Point2 p) { return Domain(spec).contains(p); }
double clearance(const DomainSpec& spec, Point2 p) { return Domain(spec).clearance(p); }
std::pair<Point2, Point2> bounding_box(const DomainSpec& spec) {
  return Domain(spec).bounding_box();
}

}  // namespace fucik
