#pragma once

#include <cstdint>
#include <vector>

#include "rg/polygon.hpp"

namespace rg {

struct ParallelLines : GeomError {
  ParallelLines() : GeomError("line set contains parallel lines") {}
};
struct DegenerateParameters : GeomError {
  explicit DegenerateParameters(const std::string& what) : GeomError(what) {}
};

/// Pairwise non-parallel lines, each through two integer grid points.
struct LineSet {
  std::vector<Segment> lines;
};

/// Box with one thin triangular spike per line: the spike's apex lies on the
/// line, its apex angle is exactly 2*arcsin(alpha), and its bisector extends
/// the line. Tips are robustly guardable only from near the line.
struct SpikeBox {
  PolygonWithHoles polygon;
  std::vector<Point> tips;     // one apex per line, same order
  std::vector<int> tip_lines;  // line index per tip
  double apex_angle = 0;
};

SpikeBox spike_box(const LineSet& lines, double alpha);

/// Axis-aligned strip [0,length] x [0,width].
PolygonWithHoles corridor(double length, double width);

/// Isosceles triangle with apex angle exactly 2*arcsin(alpha) at the top
/// vertex (0,1); base on the x-axis.
PolygonWithHoles apex_fixture(double alpha);
/// Apex vertex of apex_fixture.
inline Point apex_fixture_apex() { return {0, 1}; }

/// L-shaped hexagon (0,0),(2,0),(2,1),(1,1),(1,2),(0,2).
PolygonWithHoles l_shape();

/// Seeded random star-shaped polygon with n outer vertices and the given
/// number of small holes; always simple and valid.
PolygonWithHoles random_polygon(int n, int holes, std::uint64_t seed);

}  // namespace rg
