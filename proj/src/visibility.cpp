#include "rg/visibility.hpp"

#include <algorithm>
#include <cmath>

namespace rg {

namespace {

double default_eps(const PolygonWithHoles& P, double eps) {
  return eps >= 0 ? eps : 1e-9 * std::max(P.diameter(), 1.0);
}

}  // namespace

bool segment_in_polygon(const PolygonWithHoles& P, const Point& a, const Point& b, double eps) {
  eps = default_eps(P, eps);
  if (!P.contains(a, eps) || !P.contains(b, eps)) return false;
  const double len = dist(a, b);
  if (len <= eps) return true;

  thread_local std::vector<double> ts;
  ts.clear();
  ts.push_back(0.0);
  ts.push_back(1.0);
  for (const Segment& e : P.edges()) segment_intersection_params(a, b, e.a, e.b, ts);
  std::sort(ts.begin(), ts.end());
  const double t_eps = eps / len;
  double prev = 0.0;
  for (double t : ts) {
    if (t - prev > t_eps) {
      const Point mid = a + (b - a) * ((prev + t) / 2);
      if (!P.contains(mid, eps)) return false;
    }
    prev = std::max(prev, t);
  }
  return true;
}

bool sees(const PolygonWithHoles& P, const Point& p, const Point& q, double eps) {
  eps = default_eps(P, eps);
  if (!P.contains(p, eps)) throw PointOutsideDomain("sees: p outside P");
  if (!P.contains(q, eps)) throw PointOutsideDomain("sees: q outside P");
  return segment_in_polygon(P, p, q, eps);
}

double clearance(const PolygonWithHoles& P, const Point& g) {
  if (!P.contains(g, default_eps(P, -1))) throw PointOutsideDomain("clearance: g outside P");
  return P.boundary_distance(g);
}

bool disk_in_polygon(const PolygonWithHoles& P, const Disk& d, double eps_geom) {
  const double eps = eps_geom * std::max(P.diameter(), 1.0);
  if (!P.contains(d.center, eps)) return false;
  return P.boundary_distance(d.center) >= d.radius - eps_geom * d.radius - eps;
}

bool triangle_in_polygon(const PolygonWithHoles& P, const Point& a, const Point& b,
                         const Point& c, double eps_geom) {
  const double eps = eps_geom * std::max(P.diameter(), 1.0);
  if (!segment_in_polygon(P, a, b, eps)) return false;
  if (!segment_in_polygon(P, b, c, eps)) return false;
  if (!segment_in_polygon(P, c, a, eps)) return false;
  if (std::abs(cross(b - a, c - a)) <= eps * (dist(a, b) + dist(b, c) + dist(c, a)))
    return true;  // degenerate triangle: covered by the segment checks
  // A boundary feature wholly inside the triangle leaves no edge trace.
  for (const Point& v : P.all_vertices())
    if (point_strictly_in_triangle(v, a, b, c, eps)) return false;
  return true;
}

double visible_extent(const PolygonWithHoles& P, const Point& p, const Point& dir) {
  const double eps = default_eps(P, -1);
  thread_local std::vector<double> ts;
  ts.clear();
  for (const Segment& e : P.edges()) {
    auto t = ray_segment_intersection(p, dir, e.a, e.b);
    if (t && *t > 0) ts.push_back(*t);
  }
  if (ts.empty()) return 0.0;
  std::sort(ts.begin(), ts.end());
  const double dirlen = norm(dir);
  const double t_eps = eps / std::max(dirlen, 1e-300);
  double prev = 0.0;
  double extent = 0.0;
  for (double t : ts) {
    if (t - prev > t_eps) {
      const Point mid = p + dir * ((prev + t) / 2);
      if (!P.contains(mid, eps)) return extent * dirlen;
    }
    extent = std::max(extent, t);
    prev = std::max(prev, t);
  }
  return extent * dirlen;
}

PolygonWithHoles visibility_polygon(const PolygonWithHoles& P, const Point& p) {
  const double eps = default_eps(P, -1);
  if (!P.contains(p, eps)) throw PointOutsideDomain("visibility_polygon: p outside P");

  constexpr double kAngleOffset = 1e-7;
  std::vector<double> angles;
  angles.reserve(P.vertex_count() * 3);
  for (const Point& v : P.all_vertices()) {
    if (dist(v, p) <= eps) continue;
    const double a = std::atan2(v.y - p.y, v.x - p.x);
    angles.push_back(a - kAngleOffset);
    angles.push_back(a);
    angles.push_back(a + kAngleOffset);
  }
  if (angles.empty()) return P;
  std::sort(angles.begin(), angles.end());

  // The offset rays land a hair off the true corners; snap the hits back to
  // polygon vertices and drop collinear ring points so downstream overlays
  // see a clean ring instead of clusters of near-duplicate slivers.
  const double snap = 1e-6 * std::max(P.diameter(), 1.0);
  Ring ring;
  ring.reserve(angles.size());
  for (double a : angles) {
    const Point dir{std::cos(a), std::sin(a)};
    const double ext = visible_extent(P, p, dir);
    Point hit = p + dir * ext;
    for (const Point& v : P.all_vertices())
      if (dist(hit, v) <= snap) {
        hit = v;
        break;
      }
    if (!ring.empty() && dist(ring.back(), hit) <= snap) continue;
    ring.push_back(hit);
  }
  while (ring.size() > 2 && dist(ring.front(), ring.back()) <= snap) ring.pop_back();
  for (std::size_t i = 0; ring.size() > 3 && i < ring.size();) {
    const Point& a = ring[(i + ring.size() - 1) % ring.size()];
    const Point& c = ring[(i + 1) % ring.size()];
    if (point_segment_dist(ring[i], a, c) <= snap)
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  if (ring.size() < 3) {
    // Degenerate view (p pinned against the boundary); emit a tiny triangle.
    ring = {p, p + Point{eps, 0}, p + Point{0, eps}};
  }
  if (ring_signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  return PolygonWithHoles(std::move(ring));
}

}  // namespace rg
