#include "rg/overlay.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

namespace rg {

namespace {

namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPoly = bg::model::polygon<BPoint, /*ClockWise=*/false>;
using BMulti = bg::model::multi_polygon<BPoly>;

BMulti to_boost(const MultiPoly& m) {
  BMulti out;
  for (const PolygonWithHoles& p : m) {
    BPoly bp;
    for (const Point& q : p.outer()) bg::append(bp.outer(), BPoint{q.x, q.y});
    bp.inners().resize(p.holes().size());
    for (std::size_t i = 0; i < p.holes().size(); ++i)
      for (const Point& q : p.holes()[i]) bg::append(bp.inners()[i], BPoint{q.x, q.y});
    bg::correct(bp);
    out.push_back(std::move(bp));
  }
  return out;
}

MultiPoly from_boost(const BMulti& m) {
  MultiPoly out;
  for (const BPoly& bp : m) {
    Ring outer;
    for (const BPoint& q : bp.outer()) outer.push_back({q.x(), q.y()});
    if (outer.size() > 1) outer.pop_back();  // drop the closing vertex
    if (outer.size() < 3) continue;
    std::vector<Ring> holes;
    for (const auto& inner : bp.inners()) {
      Ring h;
      for (const BPoint& q : inner) h.push_back({q.x(), q.y()});
      if (h.size() > 1) h.pop_back();
      if (h.size() >= 3) holes.push_back(std::move(h));
    }
    out.emplace_back(std::move(outer), std::move(holes));
  }
  return out;
}

template <typename Op>
MultiPoly run_overlay(const MultiPoly& a, const MultiPoly& b, Op op) {
  BMulti ba = to_boost(a), bb = to_boost(b), res;
  op(ba, bb, res);
  return from_boost(res);
}

}  // namespace

MultiPoly overlay_intersection(const MultiPoly& a, const MultiPoly& b) {
  return run_overlay(a, b,
                     [](const BMulti& x, const BMulti& y, BMulti& r) { bg::intersection(x, y, r); });
}

MultiPoly overlay_difference(const MultiPoly& a, const MultiPoly& b) {
  return run_overlay(a, b,
                     [](const BMulti& x, const BMulti& y, BMulti& r) { bg::difference(x, y, r); });
}

MultiPoly overlay_union(const MultiPoly& a, const MultiPoly& b) {
  return run_overlay(a, b,
                     [](const BMulti& x, const BMulti& y, BMulti& r) { bg::union_(x, y, r); });
}

double multipoly_area(const MultiPoly& m) {
  double a = 0;
  for (const PolygonWithHoles& p : m) a += p.area();
  return a;
}

bool multipoly_contains(const MultiPoly& m, const Point& p, double eps) {
  for (const PolygonWithHoles& poly : m)
    if (poly.contains(p, eps)) return true;
  return false;
}

double multipoly_distance(const MultiPoly& m, const Point& p) {
  if (multipoly_contains(m, p)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (const PolygonWithHoles& poly : m) d = std::min(d, poly.boundary_distance(p));
  return d;
}

Ring disk_ring(const Point& center, double radius, double tol) {
  std::vector<Point> pts = arc_polyline(center, radius, 0, 2 * M_PI, tol);
  pts.pop_back();  // last point duplicates the first
  return pts;
}

std::vector<Point> arc_polyline(const Point& center, double radius, double a0, double a1,
                                double tol) {
  std::vector<Point> out;
  if (radius <= 0 || a1 <= a0) {
    out.push_back(center + Point{radius * std::cos(a0), radius * std::sin(a0)});
    return out;
  }
  tol = std::min(tol, radius);
  // sagitta r(1 - cos(step/2)) <= tol
  const double step_max = 2 * std::acos(std::max(1.0 - tol / radius, -1.0));
  const int n = std::max(4, static_cast<int>(std::ceil((a1 - a0) / std::max(step_max, 1e-6))));
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double a = a0 + (a1 - a0) * i / n;
    out.push_back(center + Point{radius * std::cos(a), radius * std::sin(a)});
  }
  return out;
}

}  // namespace rg
