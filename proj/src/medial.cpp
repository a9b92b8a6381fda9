#include "rg/medial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include <boost/polygon/point_data.hpp>
#include <boost/polygon/segment_data.hpp>
#include <boost/polygon/voronoi.hpp>

namespace rg {

double site_distance(const Point& q, const MedialSite& site) {
  if (const Point* p = std::get_if<Point>(&site)) return dist(q, *p);
  const Segment& s = std::get<Segment>(site);
  return point_segment_dist(q, s.a, s.b);
}

namespace {

namespace bp = boost::polygon;
using VD = bp::voronoi_diagram<double>;
using ISegment = bp::segment_data<std::int32_t>;

struct Scaling {
  double factor = 1;
  std::int32_t si(double v) const { return static_cast<std::int32_t>(std::llround(v * factor)); }
  Point world(const bp::point_data<std::int32_t>& p) const {
    return {p.x() / factor, p.y() / factor};
  }
  Point world(double x, double y) const { return {x / factor, y / factor}; }
};

Scaling make_scaling(const PolygonWithHoles& P) {
  const BBox b = P.bbox();
  const double maxabs = std::max({std::abs(b.xmin), std::abs(b.xmax), std::abs(b.ymin),
                                  std::abs(b.ymax), 1e-12});
  // Power-of-two factor keeps dyadic fixture coordinates exactly on the grid.
  Scaling s;
  s.factor = std::exp2(std::floor(std::log2((1 << 30) / maxabs)));
  return s;
}

MedialSite edge_site(const VD::cell_type& cell, const std::vector<ISegment>& segs,
                     const Scaling& sc) {
  const ISegment& s = segs[cell.source_index()];
  if (cell.contains_point()) {
    return cell.source_category() == bp::SOURCE_CATEGORY_SEGMENT_START_POINT
               ? sc.world(s.low())
               : sc.world(s.high());
  }
  return Segment{sc.world(s.low()), sc.world(s.high())};
}

}  // namespace

MedialAxis medial_axis(const PolygonWithHoles& P) {
  const Scaling sc = make_scaling(P);
  std::vector<ISegment> segs;
  segs.reserve(P.edges().size());
  for (const Segment& e : P.edges())
    segs.emplace_back(bp::point_data<std::int32_t>(sc.si(e.a.x), sc.si(e.a.y)),
                      bp::point_data<std::int32_t>(sc.si(e.b.x), sc.si(e.b.y)));

  VD vd;
  bp::construct_voronoi(segs.begin(), segs.end(), &vd);

  const double eps_loc = std::max(1e-9 * std::max(P.diameter(), 1.0), 2.0 / sc.factor);

  MedialAxis ma;
  std::unordered_map<const VD::vertex_type*, int> interior;
  for (const VD::vertex_type& v : vd.vertices()) {
    const Point q = sc.world(v.x(), v.y());
    if (!P.contains(q, eps_loc / 2)) continue;
    const double r = P.boundary_distance(q);
    if (r <= eps_loc) continue;  // lies on the boundary (e.g. a convex corner)
    interior[&v] = static_cast<int>(ma.vertices.size());
    ma.vertices.push_back({q, r, 0});
  }

  for (const VD::edge_type& e : vd.edges()) {
    if (&e > e.twin()) continue;  // each bisector once
    if (!e.is_primary() || !e.is_finite()) continue;
    const Point p0 = sc.world(e.vertex0()->x(), e.vertex0()->y());
    const Point p1 = sc.world(e.vertex1()->x(), e.vertex1()->y());
    if (dist(p0, p1) <= eps_loc) continue;
    auto it0 = interior.find(e.vertex0());
    auto it1 = interior.find(e.vertex1());
    const int a = it0 == interior.end() ? -1 : it0->second;
    const int b = it1 == interior.end() ? -1 : it1->second;
    if (a < 0 && b < 0) continue;
    const Point mid = (p0 + p1) * 0.5;
    if (!P.contains(mid, eps_loc / 2) || P.boundary_distance(mid) <= eps_loc / 2) continue;
    MedialEdge me;
    me.a = a;
    me.b = b;
    me.parabolic = e.is_curved();
    me.site1 = edge_site(*e.cell(), segs, sc);
    me.site2 = edge_site(*e.twin()->cell(), segs, sc);
    ma.edges.push_back(me);
    if (a >= 0) ++ma.vertices[a].degree;
    if (b >= 0) ++ma.vertices[b].degree;
  }
  return ma;
}

Point medial_edge_point(const MedialAxis&, const MedialEdge& e, const Point& end_a,
                        const Point& end_b, double t) {
  if (!e.parabolic) return end_a + (end_b - end_a) * t;
  const Point* focus = std::get_if<Point>(&e.site1);
  const Segment* dir = std::get_if<Segment>(&e.site2);
  if (!focus) {
    focus = std::get_if<Point>(&e.site2);
    dir = std::get_if<Segment>(&e.site1);
  }
  if (!focus || !dir) return end_a + (end_b - end_a) * t;  // point-point: straight
  const Point ex = normalized(dir->b - dir->a);
  Point ey = perp(ex);
  double fy = dot(*focus - dir->a, ey);
  if (fy < 0) {
    ey = ey * -1.0;
    fy = -fy;
  }
  const double fx = dot(*focus - dir->a, ex);
  const double xa = dot(end_a - dir->a, ex);
  const double xb = dot(end_b - dir->a, ex);
  const double x = xa + (xb - xa) * t;
  if (fy <= 0) return end_a + (end_b - end_a) * t;
  const double y = ((x - fx) * (x - fx) + fy * fy) / (2 * fy);
  return dir->a + ex * x + ey * y;
}

std::vector<Cell> classify_cells(const PolygonWithHoles& P, const MedialAxis&,
                                 const std::vector<Disk>& disks, double tol) {
  MultiPoly remainder = {P};
  for (const Disk& d : disks)
    if (d.radius > tol)
      remainder = overlay_difference(
          remainder, {PolygonWithHoles(disk_ring(d.center, d.radius + tol, tol))});

  const double adj = 3 * tol;
  std::vector<Cell> cells;
  std::map<std::pair<int, int>, std::size_t> purple_by_pair;
  for (PolygonWithHoles& comp : remainder) {
    // Disks whose boundary circle shows up on this component's outline.
    std::vector<int> near_disks;
    for (std::size_t i = 0; i < disks.size(); ++i) {
      bool touches = false;
      for (const Point& q : comp.all_vertices())
        if (std::abs(dist(q, disks[i].center) - disks[i].radius) <= adj) {
          touches = true;
          break;
        }
      if (touches) near_disks.push_back(static_cast<int>(i));
    }
    // Polygon edges contributing to the outline.
    std::vector<int> near_edges;
    for (std::size_t j = 0; j < P.edges().size(); ++j) {
      const Segment& e = P.edges()[j];
      for (const Segment& ce : comp.edges()) {
        const Point m = (ce.a + ce.b) * 0.5;
        if (point_segment_dist(m, e.a, e.b) <= adj &&
            point_segment_dist(ce.a, e.a, e.b) <= adj) {
          near_edges.push_back(static_cast<int>(j));
          break;
        }
      }
    }

    CellKind kind = CellKind::Blue;
    if (near_disks.size() == 1) {
      kind = CellKind::Red;
    } else if (near_disks.size() == 2) {
      const Disk& d1 = disks[near_disks[0]];
      const Disk& d2 = disks[near_disks[1]];
      if (dist(d1.center, d2.center) >= d1.radius + d2.radius - adj) kind = CellKind::Purple;
    }

    if (kind == CellKind::Purple) {
      const auto key = std::minmax(near_disks[0], near_disks[1]);
      auto it = purple_by_pair.find(key);
      if (it != purple_by_pair.end()) {
        Cell& c = cells[it->second];
        c.boundary.push_back(std::move(comp));
        for (int j : near_edges)
          if (std::find(c.edges.begin(), c.edges.end(), j) == c.edges.end()) c.edges.push_back(j);
        continue;
      }
      purple_by_pair[key] = cells.size();
    }
    Cell c;
    c.kind = kind;
    c.boundary.push_back(std::move(comp));
    c.disks = near_disks;
    c.edges = near_edges;
    cells.push_back(std::move(c));
  }
  return cells;
}

PurpleChain insert_purple_disks(const Point& v, double Rv, const Point& w, double Rw,
                                const Segment& e1, const Segment& e2,
                                const RobustParams& params) {
  const double alpha = params.alpha;
  if (!(alpha > 0 && alpha < 1))
    throw GeomError("insert_purple_disks: alpha must be in (0,1)");
  PurpleChain ch;
  ch.v = v;
  ch.w = w;
  ch.Rv = Rv;
  ch.Rw = Rw;
  ch.e1 = e1;
  ch.e2 = e2;

  const double k = std::sqrt(1.0 / (alpha * alpha) - 1.0);
  const std::size_t cap =
      static_cast<std::size_t>(std::ceil(dist(v, w) / (Rw * k))) + 2;
  const Point axis = w - v;
  const Point e1dir = normalized(e1.b - e1.a);
  Point n1 = perp(e1dir);
  if (dot(v - e1.a, n1) < 0) n1 = n1 * -1.0;

  Disk cur{v, Rv};
  while (dist(cur.center, w) > cur.radius / alpha) {
    if (ch.inserted.size() > cap) throw NonTermination();
    // Tangency point: where the alpha-expanded disk meets e1's line, on the
    // w side.
    auto ts = line_circle_intersections(e1.a, e1dir, cur.center, cur.radius / alpha);
    if (ts.empty()) throw NonTermination();
    Point q = e1.a + e1dir * ts.front();
    for (double t : ts) {
      const Point cand = e1.a + e1dir * t;
      if (dot(cand - cur.center, axis) > dot(q - cur.center, axis)) q = cand;
    }
    // Next center: on the chain axis vw, at tangent distance r above q.
    const double denom = cross(n1, axis);
    if (std::abs(denom) < 1e-15) throw NonTermination();
    const double r = cross(v - q, axis) / denom;
    if (!(r > 0)) throw NonTermination();
    cur = Disk{q + n1 * r, r};
    ch.inserted.push_back(cur);
  }
  return ch;
}

Decomposition decompose(const PolygonWithHoles& P, const RobustParams& params) {
  const double tol = params.arc_tol(P.diameter());

  Decomposition d;
  d.axis = medial_axis(P);
  for (const MedialVertex& mv : d.axis.vertices) d.disks.push_back({mv.p, mv.radius});
  d.base_disks = d.disks.size();

  const std::vector<Cell> base_cells = classify_cells(P, d.axis, d.disks, tol);
  for (const Cell& c : base_cells) {
    if (c.kind != CellKind::Purple || c.disks.size() != 2) continue;
    Disk dv = d.disks[c.disks[0]];
    Disk dw = d.disks[c.disks[1]];
    if (dv.radius < dw.radius ||
        (dv.radius == dw.radius &&
         std::make_pair(dw.center.x, dw.center.y) < std::make_pair(dv.center.x, dv.center.y)))
      std::swap(dv, dw);
    // The two defining edges: tangent to both disks.
    std::vector<Segment> tangent_edges;
    for (int j : c.edges) {
      const Segment& e = P.edges()[j];
      if (std::abs(point_segment_dist(dv.center, e.a, e.b) - dv.radius) <= 3 * tol &&
          std::abs(point_segment_dist(dw.center, e.a, e.b) - dw.radius) <= 3 * tol)
        tangent_edges.push_back(e);
    }
    if (tangent_edges.size() < 2) continue;
    PurpleChain ch = insert_purple_disks(dv.center, dv.radius, dw.center, dw.radius,
                                         tangent_edges[0], tangent_edges[1], params);
    ch.cell = static_cast<int>(d.chains.size());
    for (const Disk& ins : ch.inserted) d.disks.push_back(ins);
    d.chains.push_back(std::move(ch));
  }

  // Final cell picture including the inserted disks.
  d.cells = classify_cells(P, d.axis, d.disks, tol);
  return d;
}

std::vector<int> associate_disks(const PolygonWithHoles& P, const Decomposition& decomp,
                                 const Point& g) {
  const double eps = 1e-9 * std::max(P.diameter(), 1.0);
  if (!P.contains(g, eps)) throw PointOutsideDomain("associate_disks: g outside P");

  int best = -1;
  for (std::size_t i = 0; i < decomp.disks.size(); ++i) {
    const Disk& d = decomp.disks[i];
    if (d.contains(g, eps) && (best < 0 || d.radius > decomp.disks[best].radius))
      best = static_cast<int>(i);
  }
  if (best >= 0) return {best};

  for (const Cell& c : decomp.cells)
    if (!c.disks.empty() && multipoly_contains(c.boundary, g, eps)) return c.disks;

  // Numeric gap between disks and cell polylines: fall back to the closest
  // disk boundary.
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < decomp.disks.size(); ++i) {
    const double v = dist(g, decomp.disks[i].center) - decomp.disks[i].radius;
    if (v < bd) {
      bd = v;
      best = static_cast<int>(i);
    }
  }
  return best >= 0 ? std::vector<int>{best} : std::vector<int>{};
}

}  // namespace rg
