#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "rg/medial.hpp"
#include "rg/robust_vis.hpp"

using namespace rg;

namespace {

PolygonWithHoles rectangle42() { return corridor(4, 2); }

}  // namespace

TEST_CASE("medial axis of the unit square is its center") {
  const auto ma = medial_axis(testutil::unit_square());
  REQUIRE(ma.vertices.size() == 1);
  CHECK(ma.vertices[0].p.x == doctest::Approx(0.5));
  CHECK(ma.vertices[0].p.y == doctest::Approx(0.5));
  CHECK(ma.vertices[0].radius == doctest::Approx(0.5));
}

TEST_CASE("medial axis of the 4x2 rectangle") {
  const auto ma = medial_axis(rectangle42());
  REQUIRE(ma.vertices.size() == 2);
  std::vector<Point> vs = {ma.vertices[0].p, ma.vertices[1].p};
  std::sort(vs.begin(), vs.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  CHECK(vs[0].x == doctest::Approx(1));
  CHECK(vs[0].y == doctest::Approx(1));
  CHECK(vs[1].x == doctest::Approx(3));
  CHECK(vs[1].y == doctest::Approx(1));
  CHECK(ma.vertices[0].radius == doctest::Approx(1));
  CHECK(ma.vertices[1].radius == doctest::Approx(1));
}

TEST_CASE("L-shape axis has a parabolic edge and equidistant points") {
  const auto L = l_shape();
  const auto ma = medial_axis(L);
  bool parabolic = false;
  for (const MedialEdge& e : ma.edges)
    if (e.parabolic) parabolic = true;
  CHECK(parabolic);
  // Every interior vertex is equidistant from its boundary (clearance).
  for (const MedialVertex& v : ma.vertices)
    CHECK(v.radius == doctest::Approx(L.boundary_distance(v.p)).epsilon(1e-6));
  // Sampled points on parabolic edges are equidistant from their two sites.
  for (const MedialEdge& e : ma.edges) {
    if (e.a < 0 || e.b < 0) continue;
    const Point pa = ma.vertices[e.a].p, pb = ma.vertices[e.b].p;
    for (double t : {0.25, 0.5, 0.75}) {
      const Point q = medial_edge_point(ma, e, pa, pb, t);
      const double d1 = site_distance(q, e.site1);
      const double d2 = site_distance(q, e.site2);
      CHECK(d1 == doctest::Approx(d2).epsilon(1e-6));
    }
  }
}

TEST_CASE("cell classification: square corners and rectangle purple cell") {
  const auto sq = testutil::unit_square();
  const auto ma_sq = medial_axis(sq);
  std::vector<Disk> disks_sq;
  for (const auto& v : ma_sq.vertices) disks_sq.push_back({v.p, v.radius});
  const auto cells_sq = classify_cells(sq, ma_sq, disks_sq, 1e-4);
  int red = 0;
  for (const Cell& c : cells_sq) red += c.kind == CellKind::Red;
  CHECK(red == 4);
  CHECK(cells_sq.size() == 4);

  const auto rect = rectangle42();
  const auto ma = medial_axis(rect);
  std::vector<Disk> disks;
  for (const auto& v : ma.vertices) disks.push_back({v.p, v.radius});
  const auto cells = classify_cells(rect, ma, disks, 2e-4);
  int red2 = 0, purple = 0, blue = 0;
  for (const Cell& c : cells) {
    red2 += c.kind == CellKind::Red;
    purple += c.kind == CellKind::Purple;
    blue += c.kind == CellKind::Blue;
  }
  CHECK(red2 == 4);
  CHECK(purple == 1);
  CHECK(blue == 0);
}

TEST_CASE("purple insertion in a parallel corridor has sqrt(3) spacing") {
  const auto params = RobustParams::with_alpha(0.5);
  // Corridor of width 2, centers at y = 1, R = 1: expected spacing
  // R*sqrt(1/alpha^2 - 1) = sqrt(3).
  const Segment e1{{0, 0}, {10, 0}}, e2{{10, 2}, {0, 2}};
  const auto chain = insert_purple_disks({0, 1}, 1.0, {10, 1}, 1.0, e1, e2, params);
  REQUIRE(chain.inserted.size() >= 2);
  for (std::size_t i = 0; i < chain.inserted.size(); ++i) {
    const double expected_x = (i + 1) * std::sqrt(3.0);
    CHECK(chain.inserted[i].center.x == doctest::Approx(expected_x).epsilon(1e-6));
    CHECK(chain.inserted[i].center.y == doctest::Approx(1.0));
    CHECK(chain.inserted[i].radius == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("purple insertion in a narrowing trapezoid has growing radii") {
  const auto params = RobustParams::with_alpha(0.4);
  // Wedge opening to the right; walk from the narrow end toward the wide end.
  const Segment e1{{0, 0}, {20, -2}}, e2{{20, 4}, {0, 2}};
  // Medial line is y = 1 +- slope; use clearance at the anchor points.
  const Point v{18, 1}, w{2, 1};
  const double Rv = point_segment_dist(v, e1.a, e1.b);
  const double Rw = point_segment_dist(w, e1.a, e1.b);
  REQUIRE(Rv > Rw);
  const auto chain = insert_purple_disks(v, Rv, w, Rw, e1, e2, params);
  for (std::size_t i = 1; i < chain.inserted.size(); ++i)
    CHECK(chain.inserted[i].radius <= chain.inserted[i - 1].radius + 1e-9);
}

TEST_CASE("no insertion when the expanded disk already covers the cell") {
  const auto params = RobustParams::with_alpha(0.5);
  const Segment e1{{0, 0}, {3, 0}}, e2{{3, 2}, {0, 2}};
  const auto chain = insert_purple_disks({1, 1}, 1.0, {2, 1}, 1.0, e1, e2, params);
  CHECK(chain.inserted.empty());
}

TEST_CASE("decompose and associate on the rectangle") {
  const auto rect = rectangle42();
  const auto params = RobustParams::with_alpha(0.5);
  const auto dec = decompose(rect, params);
  CHECK(dec.base_disks == 2);
  CHECK(dec.disks.size() >= 2);
  CHECK(dec.chains.size() == 1);

  // Inside a medial disk: the largest containing disk.
  auto a1 = associate_disks(rect, dec, {1, 1});
  REQUIRE(a1.size() == 1);
  CHECK(dec.disks[a1[0]].contains({1, 1}, 1e-12));

  // In the middle of the corridor region both defining disks are returned,
  // or the point already lies in an inserted disk.
  auto a2 = associate_disks(rect, dec, {2, 1.99});
  CHECK(a2.size() >= 1);
  CHECK(a2.size() <= 2);

  CHECK_THROWS_AS(associate_disks(rect, dec, {9, 9}), PointOutsideDomain);
}

TEST_CASE("medial disks and cells tile the polygon") {
  for (const auto& P : {testutil::unit_square(), l_shape(), rectangle42()}) {
    const auto params = RobustParams::with_alpha(0.5);
    const auto dec = decompose(P, params);
    int misses = 0;
    for (const Point& q : testutil::sample_inside(P, 2000, 99)) {
      bool covered = false;
      for (const Disk& d : dec.disks)
        if (d.contains(q, 1e-9)) covered = true;
      for (const Cell& c : dec.cells)
        if (!covered && multipoly_contains(c.boundary, q, 1e-6)) covered = true;
      if (!covered) ++misses;
    }
    CHECK(misses <= 2);  // boundary-of-approximation stragglers only
  }
}

TEST_CASE("centers robustly guard their disks") {
  const auto L = l_shape();
  const auto params = RobustParams::with_alpha(0.4);
  const auto dec = decompose(L, params);
  for (const Point& p : testutil::sample_inside(L, 500, 7)) {
    const auto assoc = associate_disks(L, dec, p);
    bool guarded = false;
    for (int i : assoc)
      if (robustly_guards(L, dec.disks[i].center, p, params)) guarded = true;
    if (dec.disks[assoc[0]].contains(p, 1e-12)) CHECK(guarded);
  }
}
