#include "rg/geometry.hpp"

#include <algorithm>

namespace rg {

int orientation(const Point& a, const Point& b, const Point& c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  // Error bound for the double evaluation, cf. Shewchuk's orient2d filter.
  double detsum;
  if (detleft > 0) {
    if (detright <= 0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
    detsum = detleft + detright;
  } else if (detleft < 0) {
    if (detright >= 0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
    detsum = -detleft - detright;
  } else {
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
  }
  constexpr double kErrBound = 3.3306690738754716e-16;  // (3 + 16 eps) eps
  if (std::abs(det) >= kErrBound * detsum) return det > 0 ? 1 : -1;

  // Inconclusive filter: recompute in extended precision.
  const long double dl = (static_cast<long double>(a.x) - c.x) * (static_cast<long double>(b.y) - c.y) -
                         (static_cast<long double>(a.y) - c.y) * (static_cast<long double>(b.x) - c.x);
  return dl > 0 ? 1 : (dl < 0 ? -1 : 0);
}

double point_segment_dist2(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = norm2(ab);
  if (len2 == 0) return norm2(p - a);
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return norm2(p - (a + ab * t));
}

Point closest_point_on_segment(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = norm2(ab);
  if (len2 == 0) return a;
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + ab * t;
}

void segment_intersection_params(const Point& a, const Point& b, const Point& c, const Point& d,
                                 std::vector<double>& out) {
  const Point r = b - a;
  const Point s = d - c;
  const double denom = cross(r, s);
  const double qpxr = cross(c - a, r);
  if (denom == 0) {
    if (qpxr != 0) return;  // parallel, disjoint
    // Collinear: project c and d onto ab.
    const double len2 = norm2(r);
    if (len2 == 0) return;
    double t0 = dot(c - a, r) / len2;
    double t1 = dot(d - a, r) / len2;
    if (t0 > t1) std::swap(t0, t1);
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    if (t0 <= t1) {
      out.push_back(t0);
      out.push_back(t1);
    }
    return;
  }
  const double t = cross(c - a, s) / denom;
  const double u = qpxr / denom;
  if (t >= 0 && t <= 1 && u >= 0 && u <= 1) out.push_back(t);
}

std::optional<double> ray_segment_intersection(const Point& a, const Point& dir, const Point& c,
                                               const Point& d) {
  const Point s = d - c;
  const double denom = cross(dir, s);
  if (denom == 0) {
    if (cross(c - a, dir) != 0) return std::nullopt;
    // Collinear: nearest endpoint ahead of the ray.
    const double len2 = norm2(dir);
    const double t0 = dot(c - a, dir) / len2;
    const double t1 = dot(d - a, dir) / len2;
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    if (hi < 0) return std::nullopt;
    return std::max(lo, 0.0);
  }
  const double t = cross(c - a, s) / denom;
  const double u = cross(c - a, dir) / denom;
  if (t >= 0 && u >= 0 && u <= 1) return t;
  return std::nullopt;
}

std::vector<double> line_circle_intersections(const Point& a, const Point& dir, const Point& center,
                                              double radius) {
  std::vector<double> out;
  const double A = norm2(dir);
  if (A == 0) return out;
  const Point f = a - center;
  const double B = 2 * dot(f, dir);
  const double C = norm2(f) - radius * radius;
  const double disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  const double sq = std::sqrt(disc);
  out.push_back((-B - sq) / (2 * A));
  if (disc > 0) out.push_back((-B + sq) / (2 * A));
  return out;
}

std::optional<Disk> circumscribed_circle(const Point& a, const Point& b, const Point& c) {
  const double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (d == 0) return std::nullopt;
  const double a2 = norm2(a), b2 = norm2(b), c2 = norm2(c);
  const Point center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                     (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
  return Disk{center, dist(center, a)};
}

bool point_in_triangle(const Point& q, const Point& a, const Point& b, const Point& c) {
  const int o1 = orientation(a, b, q);
  const int o2 = orientation(b, c, q);
  const int o3 = orientation(c, a, q);
  const bool has_neg = (o1 < 0) || (o2 < 0) || (o3 < 0);
  const bool has_pos = (o1 > 0) || (o2 > 0) || (o3 > 0);
  return !(has_neg && has_pos);
}

bool point_strictly_in_triangle(const Point& q, const Point& a, const Point& b, const Point& c,
                                double eps) {
  if (!point_in_triangle(q, a, b, c)) return false;
  const double d = std::min({point_segment_dist2(q, a, b), point_segment_dist2(q, b, c),
                             point_segment_dist2(q, c, a)});
  return d > eps * eps;
}

}  // namespace rg
