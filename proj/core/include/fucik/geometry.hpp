#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fucik {

// Thrown when a domain specification violates its invariants
// (non-positive radii, self-intersecting polygons, duplicate shapes, ...).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a query point violates a precondition (e.g. clearance at a
// point outside the domain).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

struct Ball {
  Point2 center;
  double radius = 0.0;
};

struct Rectangle {
  Point2 min;
  Point2 max;
};

// Set of points within half_width of the open segment (a, b); convex.
struct Stadium {
  Point2 a;
  Point2 b;
  double half_width = 0.0;
};

struct Annulus {
  Point2 center;
  double inner = 0.0;
  double outer = 0.0;
};

// Simple polygon, vertices in counterclockwise order.
struct Polygon {
  std::vector<Point2> vertices;
};

// 1D degenerate domain (a, b) on the x-axis.
struct Interval {
  double a = 0.0;
  double b = 0.0;
};

using PrimitiveShape =
    std::variant<Ball, Rectangle, Stadium, Annulus, Polygon, Interval>;

// A planar region described as the union of open primitive shapes.
// The union of open sets is taken literally: two rectangles sharing only an
// edge do not merge across it.
struct DomainSpec {
  std::vector<PrimitiveShape> shapes;
};

DomainSpec make_ball(Point2 center, double radius);
DomainSpec make_rectangle(Point2 min, Point2 max);
DomainSpec make_interval(double a, double b);

// Two balls of radii r1 <= r2 joined by a straight tube of length `gap`
// (gap < r1) and half-width `tube_half_width` (default r1/2). The small ball
// is centered at the origin, the large one on the positive x-axis.
DomainSpec make_linked_balls(double r1, double r2, double gap,
                             double tube_half_width = -1.0);

DomainSpec translated(const DomainSpec& spec, Point2 offset);
DomainSpec scaled(const DomainSpec& spec, double factor);
// Rotation about the origin; rectangles become polygons.
DomainSpec rotated(const DomainSpec& spec, double angle);

// Validated domain with a precomputed boundary arrangement. Clearance of a
// union is the distance to the union's boundary: boundary pieces of each
// primitive are discarded where another shape's open interior covers them,
// and the distance to the survivors is evaluated in closed form. All queries
// are pure and safe to call concurrently.
class Domain {
 public:
  explicit Domain(DomainSpec spec);

  const DomainSpec& spec() const { return spec_; }

  // True iff p lies in the open union. Points exactly on the boundary are
  // outside (open-set convention).
  bool contains(Point2 p) const;

  // Distance from an interior point to the complement of the union.
  // Throws DomainError if p is outside.
  double clearance(Point2 p) const;

  // clearance(p) for interior p, minus the distance to the closure of the
  // domain for exterior p. Continuous across the boundary; used as a
  // penalty-free objective by the optimizers.
  double signed_clearance(Point2 p) const;

  std::pair<Point2, Point2> bounding_box() const { return {bbox_min_, bbox_max_}; }
  double diameter() const;  // bounding-box diagonal

  bool is_interval() const { return interval_.has_value(); }
  const Interval& interval() const;

  // Points sampled on the boundary of the union (per-element uniform
  // parameter sampling, covered pieces dropped).
  std::vector<Point2> boundary_samples(int per_element) const;

 private:
  struct SegmentElement {
    Point2 a, b;
    int shape = -1;
  };
  struct ArcElement {
    Point2 center;
    double radius = 0.0;
    double theta0 = 0.0, theta1 = 0.0;  // theta1 - theta0 in (0, 2*pi]
    int shape = -1;
  };

  bool covered(Point2 p, int skip1, int skip2) const;
  void compile();

  DomainSpec spec_;
  std::optional<Interval> interval_;
  std::vector<SegmentElement> segments_;
  std::vector<ArcElement> arcs_;
  std::vector<Point2> fixed_candidates_;  // surviving crossings and endpoints
  Point2 bbox_min_, bbox_max_;
};

// Convenience wrappers matching the free-function contract. Each call
// validates and compiles the spec; construct a Domain once for hot loops.
bool contains(const DomainSpec& spec, Point2 p);
double clearance(const DomainSpec& spec, Point2 p);
std::pair<Point2, Point2> bounding_box(const DomainSpec& spec);

}  // namespace fucik
