#include "rg/instances.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace rg {

PolygonWithHoles corridor(double length, double width) {
  if (!(length > 0) || !(width > 0))
    throw DegenerateParameters("corridor: length and width must be positive");
  return PolygonWithHoles({{0, 0}, {length, 0}, {length, width}, {0, width}});
}

PolygonWithHoles apex_fixture(double alpha) {
  if (!(alpha > 0) || alpha >= 1)
    throw DegenerateParameters("apex_fixture: alpha must be in (0,1)");
  const double b = std::tan(std::asin(alpha));
  return PolygonWithHoles({{-b, 0}, {b, 0}, {0, 1}});
}

PolygonWithHoles l_shape() {
  return PolygonWithHoles({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

namespace {

struct SpikeInsert {
  double s0 = 0, s1 = 0;  // base interval along the side's traversal
  Point b0, apex, b1;     // emitted in traversal order
  int line = -1;
};

Point canonical_dir(const Segment& l) {
  Point d = normalized(l.b - l.a);
  if (d.x < 0 || (d.x == 0 && d.y < 0)) d = d * -1.0;
  return d;
}

}  // namespace

SpikeBox spike_box(const LineSet& lines, double alpha) {
  if (lines.lines.empty()) throw DegenerateParameters("spike_box: no lines");
  if (!(alpha > 0) || alpha >= 1)
    throw DegenerateParameters("spike_box: alpha must be in (0,1)");
  std::vector<Point> dirs;
  for (const Segment& l : lines.lines) {
    if (dist(l.a, l.b) == 0) throw DegenerateParameters("spike_box: degenerate line");
    dirs.push_back(canonical_dir(l));
  }
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j)
      if (std::abs(cross(dirs[i], dirs[j])) < 1e-12) throw ParallelLines();

  // Box bounding the defining points and all pairwise intersections.
  BBox b;
  b.xmin = b.ymin = std::numeric_limits<double>::infinity();
  b.xmax = b.ymax = -std::numeric_limits<double>::infinity();
  auto grow = [&b](const Point& p) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  };
  for (const Segment& l : lines.lines) {
    grow(l.a);
    grow(l.b);
  }
  for (std::size_t i = 0; i < lines.lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.lines.size(); ++j) {
      const Segment &li = lines.lines[i], &lj = lines.lines[j];
      const double den = cross(dirs[i], dirs[j]);
      const double t = cross(lj.a - li.a, dirs[j]) / den;
      grow(li.a + dirs[i] * t);
    }
  const double span = std::max({b.width(), b.height(), 1.0});
  const double margin = 0.5 * span;
  const double X0 = b.xmin - margin, X1 = b.xmax + margin;
  const double Y0 = b.ymin - margin, Y1 = b.ymax + margin;
  const double theta = std::asin(alpha);

  SpikeBox out;
  out.apex_angle = 2 * theta;

  // Sides in CCW traversal order; each with start corner and direction.
  struct Side {
    Point start, dir;
    double len;
  };
  const Side sides[4] = {{{X0, Y0}, {1, 0}, X1 - X0},
                         {{X1, Y0}, {0, 1}, Y1 - Y0},
                         {{X1, Y1}, {-1, 0}, X1 - X0},
                         {{X0, Y1}, {0, -1}, Y1 - Y0}};

  double spike_len = 3 * margin;
  bool placed = false;
  std::map<int, std::vector<SpikeInsert>> per_side;
  for (int attempt = 0; attempt < 8 && !placed; ++attempt, spike_len /= 2) {
    per_side.clear();
    out.tips.clear();
    out.tip_lines.clear();
    bool ok = true;
    for (std::size_t li = 0; li < lines.lines.size() && ok; ++li) {
      const Point p0 = lines.lines[li].a;
      const Point d = dirs[li];
      // Exit parameter of the line from the box in canonical direction.
      double tmax = std::numeric_limits<double>::infinity();
      if (d.x != 0) tmax = std::min(tmax, std::max((X0 - p0.x) / d.x, (X1 - p0.x) / d.x));
      if (d.y != 0) tmax = std::min(tmax, std::max((Y0 - p0.y) / d.y, (Y1 - p0.y) / d.y));
      const Point E = p0 + d * tmax;
      const Point apex = E + d * spike_len;
      // Which side the line exits through.
      int side = -1;
      const double eps = 1e-9 * span;
      if (std::abs(E.y - Y0) <= eps && d.y < 0) side = 0;
      else if (std::abs(E.x - X1) <= eps && d.x > 0) side = 1;
      else if (std::abs(E.y - Y1) <= eps && d.y > 0) side = 2;
      else if (std::abs(E.x - X0) <= eps && d.x < 0) side = 3;
      if (side < 0) {
        // Exit through a corner or a side the direction does not cross.
        ok = false;
        break;
      }
      const Side& sd = sides[side];
      SpikeInsert ins;
      ins.line = static_cast<int>(li);
      ins.apex = apex;
      Point base[2];
      for (int k = 0; k < 2; ++k) {
        const Point leg = rotate(d * -1.0, k == 0 ? theta : -theta);
        // Hit the side's supporting line: apex + t*leg.
        const double denom = cross(leg, sd.dir);
        if (std::abs(denom) < 1e-15) {
          ok = false;
          break;
        }
        const double t = cross(sd.start - apex, sd.dir) / denom;
        base[k] = apex + leg * t;
      }
      if (!ok) break;
      double s0 = dot(base[0] - sd.start, sd.dir);
      double s1 = dot(base[1] - sd.start, sd.dir);
      if (s0 > s1) {
        std::swap(s0, s1);
        std::swap(base[0], base[1]);
      }
      if (s0 < 0.05 * sd.len || s1 > 0.95 * sd.len) {
        ok = false;
        break;
      }
      ins.s0 = s0;
      ins.s1 = s1;
      ins.b0 = base[0];
      ins.b1 = base[1];
      per_side[side].push_back(ins);
      out.tips.push_back(apex);
      out.tip_lines.push_back(static_cast<int>(li));
    }
    if (!ok) continue;
    // Spikes on the same side must not overlap.
    for (auto& [side, list] : per_side) {
      std::sort(list.begin(), list.end(),
                [](const SpikeInsert& a, const SpikeInsert& c) { return a.s0 < c.s0; });
      for (std::size_t i = 0; i + 1 < list.size(); ++i)
        if (list[i].s1 >= list[i + 1].s0) ok = false;
    }
    placed = ok;
  }
  if (!placed) throw DegenerateParameters("spike_box: could not place disjoint spikes");

  Ring ring;
  for (int side = 0; side < 4; ++side) {
    ring.push_back(sides[side].start);
    auto it = per_side.find(side);
    if (it == per_side.end()) continue;
    for (const SpikeInsert& ins : it->second) {
      ring.push_back(ins.b0);
      ring.push_back(ins.apex);
      ring.push_back(ins.b1);
    }
  }
  out.polygon = PolygonWithHoles(std::move(ring));
  out.polygon.validate();
  return out;
}

PolygonWithHoles random_polygon(int n, int holes, std::uint64_t seed) {
  if (n < 3) throw DegenerateParameters("random_polygon: need at least 3 vertices");
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> jitter(-0.3, 0.3), rad(0.5, 1.5), u(0.0, 1.0);
    const double R0 = 5.0;
    Ring outer;
    for (int i = 0; i < n; ++i) {
      const double a = 2 * M_PI * (i + 0.5 * jitter(rng)) / n;
      const double r = R0 * rad(rng);
      outer.push_back({r * std::cos(a), r * std::sin(a)});
    }
    std::vector<Ring> hole_rings;
    int placed = 0;
    for (int tries = 0; placed < holes && tries < 200; ++tries) {
      const double a = u(rng) * 2 * M_PI;
      const double r = u(rng) * 0.35 * R0;
      const Point c{r * std::cos(a), r * std::sin(a)};
      const double hr = 0.12 * R0;
      const double rot = u(rng) * M_PI;
      Ring h;
      for (int k = 3; k >= 0; --k) {  // clockwise square
        const double ang = rot + k * M_PI / 2;
        h.push_back(c + Point{hr * std::cos(ang), hr * std::sin(ang)});
      }
      PolygonWithHoles probe(outer);
      bool fits = true;
      for (const Point& q : h)
        if (!probe.contains(q) || probe.boundary_distance(q) < 0.08 * R0) fits = false;
      for (const Ring& other : hole_rings)
        for (const Point& q : h)
          for (std::size_t e = 0; e < other.size() && fits; ++e)
            if (point_segment_dist(q, other[e], other[(e + 1) % other.size()]) < 0.08 * R0)
              fits = false;
      if (!fits) continue;
      hole_rings.push_back(std::move(h));
      ++placed;
    }
    if (placed < holes) continue;
    try {
      PolygonWithHoles P(outer, hole_rings);
      P.validate();
      return P;
    } catch (const GeomError&) {
      continue;
    }
  }
  throw DegenerateParameters("random_polygon: generation failed for this seed");
}

}  // namespace rg
