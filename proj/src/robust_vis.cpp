#include "rg/robust_vis.hpp"

#include <algorithm>
#include <cmath>

namespace rg {

IceCreamCone ice_cream_cone(const Point& g, const Point& p, double alpha) {
  const double d = dist(p, g);
  if (d == 0) throw DegenerateCone();
  const double r = alpha * d;
  const double theta = std::asin(std::min(alpha, 1.0));
  const double leg = d * std::cos(theta);  // tangent length from p
  const Point u = normalized(g - p);
  IceCreamCone cone;
  cone.apex = p;
  cone.disk = Disk{g, r};
  cone.a = p + rotate(u, theta) * leg;
  cone.b = p + rotate(u, -theta) * leg;
  return cone;
}

bool robustly_guards(const PolygonWithHoles& P, const Point& g, const Point& p,
                     const RobustParams& params) {
  const double eps = params.eps_geom * std::max(P.diameter(), 1.0);
  if (!P.contains(g, eps)) throw PointOutsideDomain("robustly_guards: g outside P");
  if (!P.contains(p, eps)) throw PointOutsideDomain("robustly_guards: p outside P");
  const double d = dist(p, g);
  if (d <= eps) return true;  // a point guards itself
  const IceCreamCone cone = ice_cream_cone(g, p, params.alpha);
  if (!disk_in_polygon(P, cone.disk, params.eps_geom)) return false;
  return triangle_in_polygon(P, cone.apex, cone.a, cone.b, params.eps_geom);
}

bool disk_in_cone_check(const Point& p, double rho0_dir, double theta, const Point& q, double c) {
  const Point u0{std::cos(rho0_dir), std::sin(rho0_dir)};
  const Point u1{std::cos(rho0_dir + 2 * theta), std::sin(rho0_dir + 2 * theta)};
  const double r = c * std::sin(theta) * dist(p, q);
  // Interior of the wedge is left of ray rho0 and right of ray rho0 + 2theta.
  const double s0 = cross(u0, q - p);
  const double s1 = cross(u1, q - p);
  return s0 >= r && -s1 >= r;
}

bool heart_contains(const Point& g, const Point& v, double alpha, const Point& q, double slack) {
  const double d = dist(g, v);
  if (d == 0) return true;
  const Point ex = (v - g) * (1.0 / d);
  const double x = dot(q - g, ex);
  if (x <= d + slack) return dist(q, g) <= d / alpha + slack;
  // Beyond the perpendicular line through v: inside either circle through
  // g, v and an endpoint of the chord; centers (d/2, +-h/2), radius d/(2a).
  const double h = d * std::sqrt(std::max(1.0 / (alpha * alpha) - 1.0, 0.0));
  const double r = d / (2 * alpha);
  const Point mid = g + ex * (d / 2);
  const Point off = perp(ex) * (h / 2);
  return dist(q, mid + off) <= r + slack || dist(q, mid - off) <= r + slack;
}

namespace {

// Closed ring of the heart set of reflex vertex v as seen from g: the major
// arc of D(g, d/alpha) up to the chord through v's perpendicular line, then
// the two small circles' bulges past that line, meeting at v.
Ring heart_ring(const Point& g, const Point& v, double alpha, double tol) {
  const double d = dist(g, v);
  const Point ex = (v - g) * (1.0 / d);
  const double phi = std::atan2(ex.y, ex.x);
  const double h = d * std::sqrt(std::max(1.0 / (alpha * alpha) - 1.0, 0.0));
  const double beta = std::atan2(h, d);
  const double Rbig = d / alpha;
  const double rsmall = d / (2 * alpha);
  const Point mid = g + ex * (d / 2);
  const Point off = perp(ex) * (h / 2);

  Ring ring = arc_polyline(g, Rbig, phi + beta, phi + 2 * M_PI - beta, tol);
  auto append = [&ring](const std::vector<Point>& pts) {
    ring.insert(ring.end(), pts.begin() + 1, pts.end());
  };
  append(arc_polyline(mid - off, rsmall, phi - beta, phi + beta, tol));  // p2 -> v
  append(arc_polyline(mid + off, rsmall, phi - beta, phi + beta, tol));  // v -> p1
  if (!ring.empty() && dist(ring.front(), ring.back()) < 1e-12 * d) ring.pop_back();
  if (ring_signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  return ring;
}

}  // namespace

Region robust_visibility_region(const PolygonWithHoles& P, const Point& g,
                                const RobustParams& params) {
  const double diam = P.diameter();
  const double eps = params.eps_geom * std::max(diam, 1.0);
  if (!P.contains(g, eps)) throw PointOutsideDomain("robust_visibility_region: g outside P");
  const double alpha = params.alpha;
  const double tol = params.arc_tol(diam);
  const double Rg = P.boundary_distance(g);
  const double Rbig = Rg / alpha;

  Region region;
  region.anchor = g;
  region.tol = tol;

  MultiPoly acc = {visibility_polygon(P, g)};
  for (const PolygonWithHoles& piece : acc)
    for (const Segment& e : piece.edges()) region.pieces.push_back(SegPiece{e.a, e.b});

  acc = overlay_intersection(acc, {PolygonWithHoles(disk_ring(g, Rbig, tol))});
  region.pieces.push_back(ArcPiece{g, Rbig, 0, 2 * M_PI});

  std::vector<Point> hearts;
  for (const Point& v : P.reflex_vertices()) {
    const double d = dist(g, v);
    if (d <= eps) continue;
    hearts.push_back(v);
    acc = overlay_intersection(acc, {PolygonWithHoles(heart_ring(g, v, alpha, tol))});
    const Point ex = (v - g) * (1.0 / d);
    const double phi = std::atan2(ex.y, ex.x);
    const double h = d * std::sqrt(std::max(1.0 / (alpha * alpha) - 1.0, 0.0));
    const double beta = std::atan2(h, d);
    const Point mid = g + ex * (d / 2);
    const Point off = perp(ex) * (h / 2);
    region.pieces.push_back(ArcPiece{g, d / alpha, phi + beta, phi + 2 * M_PI - beta});
    region.pieces.push_back(ArcPiece{mid + off, d / (2 * alpha), phi - beta, phi + beta});
    region.pieces.push_back(ArcPiece{mid - off, d / (2 * alpha), phi - beta, phi + beta});
  }
  region.approx = std::move(acc);

  region.membership = [P, g, alpha, Rbig, hearts, eps](const Point& q) {
    if (!P.contains(q, eps)) return false;
    if (dist(q, g) > Rbig + eps) return false;
    for (const Point& v : hearts)
      if (!heart_contains(g, v, alpha, q, eps)) return false;
    return segment_in_polygon(P, g, q, eps);
  };
  return region;
}

}  // namespace rg
