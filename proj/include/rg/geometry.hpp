#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rg {

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double px, double py) : x(px), y(py) {}

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Point& a) { return a.x * a.x + a.y * a.y; }
inline double norm(const Point& a) { return std::sqrt(norm2(a)); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }
inline Point perp(const Point& a) { return {-a.y, a.x}; }
inline Point normalized(const Point& a) {
  double n = norm(a);
  return n > 0 ? Point{a.x / n, a.y / n} : Point{0, 0};
}
inline Point rotate(const Point& a, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

struct Segment {
  Point a, b;
};

struct Disk {
  Point center;
  double radius = 0.0;

  bool contains(const Point& p, double slack = 0.0) const {
    return dist(center, p) <= radius + slack;
  }
};

/// Sign of the orientation determinant of (a,b,c): +1 left turn, -1 right
/// turn, 0 collinear. Filtered: the double evaluation is accepted only when
/// its magnitude exceeds a forward error bound, otherwise the determinant is
/// recomputed in extended precision.
int orientation(const Point& a, const Point& b, const Point& c);

/// Raw orientation determinant (twice the signed triangle area).
inline double orient_value(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Squared distance from p to the closed segment [a,b].
double point_segment_dist2(const Point& p, const Point& a, const Point& b);
inline double point_segment_dist(const Point& p, const Point& a, const Point& b) {
  return std::sqrt(point_segment_dist2(p, a, b));
}

/// Closest point on segment [a,b] to p.
Point closest_point_on_segment(const Point& p, const Point& a, const Point& b);

/// Intersection parameter list of segment [a,b] with segment [c,d]: returns
/// the parameters t in [0,1] along ab at which ab meets cd (0, 1 or, for
/// collinear overlap, 2 values).
void segment_intersection_params(const Point& a, const Point& b, const Point& c, const Point& d,
                                 std::vector<double>& out);

/// Ray a + t*dir, t >= 0 against segment [c,d]; smallest valid t, if any.
std::optional<double> ray_segment_intersection(const Point& a, const Point& dir, const Point& c,
                                               const Point& d);

/// Intersections of the line through a with direction dir and a circle.
/// Returns parameters t (may be empty, one or two values, sorted).
std::vector<double> line_circle_intersections(const Point& a, const Point& dir, const Point& center,
                                              double radius);

/// Circle through three non-collinear points.
std::optional<Disk> circumscribed_circle(const Point& a, const Point& b, const Point& c);

/// True iff q lies in the closed triangle abc (works for both orientations).
bool point_in_triangle(const Point& q, const Point& a, const Point& b, const Point& c);

/// True iff q lies strictly inside triangle abc, at distance > eps from its
/// boundary.
bool point_strictly_in_triangle(const Point& q, const Point& a, const Point& b, const Point& c,
                                double eps);

struct GeomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PointOutsideDomain : GeomError {
  PointOutsideDomain() : GeomError("point outside domain") {}
  explicit PointOutsideDomain(const std::string& what) : GeomError(what) {}
};

}  // namespace rg
