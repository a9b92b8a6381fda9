#include "rg/inverse_vis.hpp"

#include <algorithm>
#include <cmath>

namespace rg {

namespace {

// Local frame of an edge: origin u, x along the edge, y toward p's side
// (arbitrary side when p is on the edge's line).
struct EdgeFrame {
  Point u;
  Point ex, ey;
  double len = 0;  // edge length
  double px = 0, py = 0;  // p in frame coordinates (py >= 0)
};

EdgeFrame edge_frame(const Point& u, const Point& v, const Point& p) {
  EdgeFrame f;
  f.u = u;
  f.ex = normalized(v - u);
  f.ey = perp(f.ex);
  f.len = dist(u, v);
  f.px = dot(p - u, f.ex);
  f.py = dot(p - u, f.ey);
  if (f.py < 0) {
    f.ey = f.ey * -1.0;
    f.py = -f.py;
  }
  return f;
}

// Height of the forbidden-zone boundary over the edge line at abscissa x,
// on p's side (sgn=+1) or the far side (sgn=-1): the y >= 0 solution of
// y = alpha * |(x,sgn*y) - (px,py)|.
double band_height(const EdgeFrame& f, double alpha, double x, int sgn) {
  const double a2 = alpha * alpha;
  const double dx = x - f.px;
  const double root = std::sqrt((1 - a2) * dx * dx + f.py * f.py);
  return alpha * (root - sgn * alpha * f.py) / (1 - a2);
}

// Apollonius disk around edge endpoint e: the locus |g - e| < alpha*|g - p|.
Disk apollonius_disk(const Point& e, const Point& p, double alpha) {
  const double a2 = alpha * alpha;
  return Disk{(e - p * a2) * (1.0 / (1 - a2)), alpha * dist(e, p) / (1 - a2)};
}

// Forbidden band of one edge: points whose foot lies on the edge and whose
// line distance is below alpha*|g-p|, bounded by the two implicit curves.
Ring band_ring(const EdgeFrame& f, double alpha, double tol) {
  const int n = std::max<int>(32, std::min<int>(512, static_cast<int>(
      std::ceil(f.len / std::max(std::sqrt(tol * std::max(f.len, f.py)), 1e-12)))));
  Ring ring;
  ring.reserve(2 * n + 2);
  for (int i = 0; i <= n; ++i) {
    const double x = f.len * i / n;
    ring.push_back(f.u + f.ex * x + f.ey * band_height(f, alpha, x, +1));
  }
  for (int i = n; i >= 0; --i) {
    const double x = f.len * i / n;
    ring.push_back(f.u + f.ex * x - f.ey * band_height(f, alpha, x, -1));
  }
  return ring;
}

}  // namespace

Region inverse_region(const PolygonWithHoles& P, const Point& p, const RobustParams& params) {
  const double diam = P.diameter();
  const double eps = params.eps_geom * std::max(diam, 1.0);
  if (!P.contains(p, eps)) throw PointOutsideDomain("inverse_region: p outside P");
  // Apollonius disks blow up at alpha = 1; stay strictly below.
  const double alpha = std::min(params.alpha, 1.0 - 1e-9);
  const double tol = params.arc_tol(diam);

  const PolygonWithHoles VP = visibility_polygon(P, p);

  Region region;
  region.anchor = p;
  region.tol = tol;

  MultiPoly acc = {VP};
  for (const Segment& e : VP.edges()) {
    const EdgeFrame f = edge_frame(e.a, e.b, p);
    if (f.len <= eps) continue;
    acc = overlay_difference(acc, {PolygonWithHoles(band_ring(f, alpha, tol))});
    for (const Point& end : {e.a, e.b}) {
      const Disk d = apollonius_disk(end, p, alpha);
      if (d.radius > eps)
        acc = overlay_difference(acc, {PolygonWithHoles(disk_ring(d.center, d.radius, tol))});
      region.pieces.push_back(ArcPiece{d.center, d.radius, 0, 2 * M_PI});
    }
    region.pieces.push_back(SegPiece{e.a, e.b});
    if (f.py > eps) {
      const Point foot = f.u + f.ex * f.px;
      const double angle = std::atan2(f.ex.y, f.ex.x);
      region.pieces.push_back(HyperbolaPiece{foot, angle, f.py, alpha, -f.px / f.py,
                                             (f.len - f.px) / f.py});
    }
  }
  region.approx = std::move(acc);

  region.membership = [P, VP, p, alpha, eps](const Point& g) {
    if (!P.contains(g, eps)) return false;
    const double need = alpha * dist(g, p);
    for (const Segment& e : VP.edges())
      if (point_segment_dist(g, e.a, e.b) < need - eps) return false;
    return segment_in_polygon(P, p, g, eps);
  };

  // A region thinner than the overlay tolerance may survive only as its
  // analytic membership (e.g. a bisector segment). Detect that by comparing
  // area against a tol-wide band around the approx boundary, then recover
  // the spine by scanning directions around p.
  double perimeter = 0;
  for (const PolygonWithHoles& piece : region.approx)
    for (const Segment& e : piece.edges()) perimeter += dist(e.a, e.b);
  if (region.approx.empty() || multipoly_area(region.approx) <= tol * perimeter) {
    constexpr int kDirs = 180;
    constexpr int kSteps = 96;
    Point far_best = p;
    double best = 0;
    std::vector<Point> far_points;
    for (int i = 0; i < kDirs; ++i) {
      const double a = 2 * M_PI * i / kDirs;
      const Point dir{std::cos(a), std::sin(a)};
      double extent = 0;
      for (int k = 1; k <= kSteps; ++k) {
        const double t = diam * k / kSteps;
        if (region.membership(p + dir * t)) extent = t;
      }
      if (extent <= 4 * eps) continue;
      const Point fpt = p + dir * extent;
      far_points.push_back(fpt);
      if (extent > best) {
        best = extent;
        far_best = fpt;
      }
    }
    if (best == 0) {
      // Only p itself survives: the "self-guard-only" case.
      region.degenerate = true;
      region.pieces.clear();
    } else {
      const Point axis = normalized(far_best - p);
      double lo = 0;  // extent along -axis
      bool collinear = true;
      for (const Point& fpt : far_points) {
        const double along = dot(fpt - p, axis);
        const double off = std::abs(cross(axis, fpt - p));
        if (off > 1e-3 * best + 4 * eps) collinear = false;
        if (along < lo) lo = along;
      }
      if (collinear) {
        region.degenerate = true;
        region.pieces.assign(1, RegionPiece{SegPiece{p + axis * lo, far_best}});
      } else if (region.approx.empty() && far_points.size() >= 3) {
        // Thin but genuinely 2-dimensional, and the overlay discretization
        // swallowed it entirely: approximate it by the star polygon of the
        // scanned extents so size and distance queries stay meaningful.
        region.approx = {PolygonWithHoles(Ring(far_points.begin(), far_points.end()))};
      }
      // Otherwise the region is thin but genuinely 2-dimensional; keep the
      // overlay result and constraint pieces as-is.
    }
  }
  return region;
}

double inverse_region_size(const Region& region, const Point& p) {
  if (region.degenerate) return region.size_from(p);
  double best = 0;
  for (const PolygonWithHoles& piece : region.approx) {
    for (const Point& q : piece.outer()) best = std::max(best, dist(p, q));
    for (const Ring& h : piece.holes())
      for (const Point& q : h) best = std::max(best, dist(p, q));
  }
  return best;
}

double inverse_region_size(const PolygonWithHoles& P, const Point& p,
                           const RobustParams& params) {
  return inverse_region_size(inverse_region(P, p, params), p);
}

FatKite fat_kite(const PolygonWithHoles& P, const Point& g, const Point& p,
                 const RobustParams& params) {
  if (dist(g, p) == 0) throw NotRobustlyGuarded();
  if (!robustly_guards(P, g, p, params)) throw NotRobustlyGuarded();
  const double theta = std::asin(std::min(params.alpha, 1.0));
  const IceCreamCone cone = ice_cream_cone(g, p, params.alpha);
  const Point u = normalized(g - p);
  auto bisector_hit = [&](double half_angle, const Point& leg_end) {
    const Point dir = rotate(u, half_angle);
    auto t = ray_segment_intersection(p, dir, g, leg_end);
    if (!t) throw GeomError("fat_kite: bisector misses the cone leg");
    return p + dir * *t;
  };
  FatKite kite;
  kite.g = g;
  kite.p = p;
  kite.ap = bisector_hit(theta / 2, cone.a);
  kite.bp = bisector_hit(-theta / 2, cone.b);
  kite.apex_angle_at_p = theta;
  kite.angle_at_g = M_PI - 2 * theta;
  return kite;
}

}  // namespace rg
