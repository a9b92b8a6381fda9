#pragma once

#include <vector>

#include "rg/geometry.hpp"

namespace rg {

struct FatnessOutOfRange : GeomError {
  FatnessOutOfRange() : GeomError("fatness parameter must lie in (0, 1/4]") {}
};

/// Grid of points hitting every gamma-fat star-shaped region of size >= R
/// that intersects D(R, origin): side gamma*R/6, clipped to D(4R, origin).
struct HittingSet {
  Point origin;
  double R = 0;
  double gamma = 0;
  double grid_side = 0;
  std::vector<Point> points;
};

/// Axis-aligned grid of side gamma*R/6 with a node at o, clipped to the
/// closed disk D(4R, o). Throws FatnessOutOfRange for gamma outside (0, 1/4]
/// (the grid constant is only established up to 1/4; rescale gamma first).
HittingSet hitting_points(const Point& o, double R, double gamma);

}  // namespace rg
