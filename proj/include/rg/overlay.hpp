#pragma once

#include <vector>

#include "rg/polygon.hpp"

namespace rg {

/// Union of disjoint polygons with holes; the working currency of all
/// polyline-approximation overlays.
using MultiPoly = std::vector<PolygonWithHoles>;

MultiPoly overlay_intersection(const MultiPoly& a, const MultiPoly& b);
MultiPoly overlay_difference(const MultiPoly& a, const MultiPoly& b);
MultiPoly overlay_union(const MultiPoly& a, const MultiPoly& b);

double multipoly_area(const MultiPoly& m);
bool multipoly_contains(const MultiPoly& m, const Point& p, double eps = 0.0);
/// Distance from p to the multipolygon (0 when inside).
double multipoly_distance(const MultiPoly& m, const Point& p);

/// Ring approximating a circle with sagitta error at most tol.
Ring disk_ring(const Point& center, double radius, double tol);

/// Polyline along a CCW circular arc from angle a0 to a1 (a1 >= a0), sagitta
/// error at most tol. Includes both endpoints.
std::vector<Point> arc_polyline(const Point& center, double radius, double a0, double a1,
                                double tol);

}  // namespace rg
