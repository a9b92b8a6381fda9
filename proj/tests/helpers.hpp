#pragma once

#include <random>
#include <vector>

#include "rg/instances.hpp"
#include "rg/visibility.hpp"

namespace testutil {

inline rg::PolygonWithHoles unit_square() { return rg::corridor(1, 1); }
inline rg::PolygonWithHoles strip10() { return rg::corridor(10, 1); }

/// 4x4 square with a centered unit square hole.
inline rg::PolygonWithHoles square_with_hole() {
  rg::Ring outer = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  rg::Ring hole = {{1.5, 1.5}, {1.5, 2.5}, {2.5, 2.5}, {2.5, 1.5}};  // clockwise
  return rg::PolygonWithHoles(outer, {hole});
}

/// Independent check of the robust-guarding predicate: the disk fits in P
/// and p sees m boundary samples of it. Shares only geom-core primitives
/// with the implementation under test.
inline bool cone_sample_oracle(const rg::PolygonWithHoles& P, const rg::Point& g,
                               const rg::Point& p, double alpha, int m = 64) {
  const double d = rg::dist(p, g);
  if (d == 0) return true;
  const double r = alpha * d;
  if (!rg::disk_in_polygon(P, {g, r})) return false;
  for (int i = 0; i < m; ++i) {
    const double a = 2 * M_PI * i / m;
    const rg::Point q = g + rg::Point{r * std::cos(a), r * std::sin(a)};
    if (!rg::segment_in_polygon(P, p, q)) return false;
  }
  // Shallow or fully-contained boundary intrusions can slip between the
  // sampled segments; any polygon vertex strictly inside the cone hull means
  // the boundary enters the cone, so the disk cannot be fully visible.
  const rg::Point u = rg::normalized(g - p) * r;
  const rg::Point ca = g + rg::Point{u.y, -u.x} * std::sqrt(1 - alpha * alpha) -
                       u * alpha;  // leg tangency points
  const rg::Point cb = g - rg::Point{u.y, -u.x} * std::sqrt(1 - alpha * alpha) - u * alpha;
  for (const rg::Point& v : P.all_vertices())
    if (rg::dist(v, g) < r || rg::point_strictly_in_triangle(v, p, ca, cb, 1e-12))
      return false;
  return true;
}

/// Seeded interior points via rejection sampling.
inline std::vector<rg::Point> sample_inside(const rg::PolygonWithHoles& P, std::size_t count,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const rg::BBox b = P.bbox();
  std::uniform_real_distribution<double> ux(b.xmin, b.xmax), uy(b.ymin, b.ymax);
  std::vector<rg::Point> out;
  while (out.size() < count) {
    const rg::Point q{ux(rng), uy(rng)};
    if (P.contains(q)) out.push_back(q);
  }
  return out;
}

}  // namespace testutil
