#include "rg/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace rg {

double ring_signed_area(const Ring& ring) {
  double s = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    s += cross(a, b);
  }
  return s / 2;
}

PolygonWithHoles::PolygonWithHoles(Ring outer, std::vector<Ring> holes)
    : outer_(std::move(outer)), holes_(std::move(holes)) {
  bbox_.xmin = bbox_.ymin = std::numeric_limits<double>::infinity();
  bbox_.xmax = bbox_.ymax = -std::numeric_limits<double>::infinity();
  for (const Point& p : outer_) {
    bbox_.xmin = std::min(bbox_.xmin, p.x);
    bbox_.xmax = std::max(bbox_.xmax, p.x);
    bbox_.ymin = std::min(bbox_.ymin, p.y);
    bbox_.ymax = std::max(bbox_.ymax, p.y);
  }
  auto add_ring_edges = [this](const Ring& r) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) edges_.push_back({r[i], r[(i + 1) % n]});
  };
  add_ring_edges(outer_);
  for (const Ring& h : holes_) add_ring_edges(h);
  vertices_ = outer_;
  for (const Ring& h : holes_) vertices_.insert(vertices_.end(), h.begin(), h.end());
}

std::size_t PolygonWithHoles::vertex_count() const {
  std::size_t n = outer_.size();
  for (const Ring& h : holes_) n += h.size();
  return n;
}

namespace {

// Interior angle at ring[i]. Outer rings are CCW so the interior is to the
// left; hole rings are CW so the interior (of the domain) is also to the left.
double interior_angle(const Ring& ring, std::size_t i) {
  const std::size_t n = ring.size();
  const Point& prev = ring[(i + n - 1) % n];
  const Point& cur = ring[i];
  const Point& next = ring[(i + 1) % n];
  const Point u = normalized(prev - cur);
  const Point v = normalized(next - cur);
  double ang = std::atan2(cross(v, u), dot(v, u));
  if (ang < 0) ang += 2 * M_PI;
  return ang;
}

}  // namespace

std::vector<Point> PolygonWithHoles::reflex_vertices() const {
  std::vector<Point> out;
  auto scan = [&out](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
      if (interior_angle(r, i) > M_PI + 1e-12) out.push_back(r[i]);
  };
  scan(outer_);
  for (const Ring& h : holes_) scan(h);
  return out;
}

double PolygonWithHoles::min_interior_angle() const {
  double m = std::numeric_limits<double>::infinity();
  auto scan = [&m](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) m = std::min(m, interior_angle(r, i));
  };
  scan(outer_);
  for (const Ring& h : holes_) scan(h);
  return m;
}

double PolygonWithHoles::area() const {
  double a = std::abs(ring_signed_area(outer_));
  for (const Ring& h : holes_) a -= std::abs(ring_signed_area(h));
  return a;
}

namespace {

// Even-odd crossing test for a single ring; boundary handled by the caller.
bool in_ring(const Point& p, const Ring& ring) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xint = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

bool PolygonWithHoles::contains(const Point& p, double eps) const {
  if (p.x < bbox_.xmin - eps || p.x > bbox_.xmax + eps || p.y < bbox_.ymin - eps ||
      p.y > bbox_.ymax + eps)
    return false;
  if (eps > 0 && boundary_distance(p) <= eps) return true;
  if (!in_ring(p, outer_)) return false;
  for (const Ring& h : holes_)
    if (in_ring(p, h)) return false;
  return true;
}

double PolygonWithHoles::boundary_distance(const Point& p) const {
  double d2 = std::numeric_limits<double>::infinity();
  for (const Segment& e : edges_) d2 = std::min(d2, point_segment_dist2(p, e.a, e.b));
  return std::sqrt(d2);
}

void PolygonWithHoles::validate(double eps_geom) const {
  if (outer_.size() < 3) throw GeomError("outer ring needs at least 3 vertices");
  const double scale = std::max(diameter(), 1e-300);
  auto check_ring = [&](const Ring& r, bool want_ccw, const char* name) {
    if (r.size() < 3) throw GeomError(std::string(name) + ": ring needs at least 3 vertices");
    for (const Point& p : r)
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw GeomError(std::string(name) + ": non-finite coordinate");
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i)
      if (dist(r[i], r[(i + 1) % n]) <= eps_geom * scale)
        throw GeomError(std::string(name) + ": consecutive vertices coincide");
    const double a = ring_signed_area(r);
    if (want_ccw && a <= 0) throw GeomError(std::string(name) + ": outer ring must be CCW");
    if (!want_ccw && a >= 0) throw GeomError(std::string(name) + ": hole ring must be CW");
    // Simplicity: no two non-adjacent edges intersect.
    std::vector<double> ts;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == i + 1 || (i == 0 && j == n - 1)) continue;
        ts.clear();
        segment_intersection_params(r[i], r[(i + 1) % n], r[j], r[(j + 1) % n], ts);
        if (!ts.empty()) throw GeomError(std::string(name) + ": ring self-intersects");
      }
    }
  };
  check_ring(outer_, true, "outer");
  for (const Ring& h : holes_) {
    check_ring(h, false, "hole");
    for (const Point& p : h) {
      if (!in_ring(p, outer_)) throw GeomError("hole vertex outside outer ring");
    }
  }
  // Rings pairwise disjoint.
  std::vector<double> ts;
  auto rings_cross = [&ts](const Ring& r1, const Ring& r2) {
    for (std::size_t i = 0; i < r1.size(); ++i)
      for (std::size_t j = 0; j < r2.size(); ++j) {
        ts.clear();
        segment_intersection_params(r1[i], r1[(i + 1) % r1.size()], r2[j],
                                    r2[(j + 1) % r2.size()], ts);
        if (!ts.empty()) return true;
      }
    return false;
  };
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    if (rings_cross(outer_, holes_[i])) throw GeomError("hole touches outer ring");
    for (std::size_t j = i + 1; j < holes_.size(); ++j)
      if (rings_cross(holes_[i], holes_[j])) throw GeomError("holes intersect");
  }
}

}  // namespace rg
