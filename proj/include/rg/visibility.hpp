#pragma once

#include "rg/params.hpp"
#include "rg/polygon.hpp"

namespace rg {

/// True iff the closed segment [a,b] is contained in the closed domain P.
/// No precondition on a,b; grazing the boundary counts as contained.
bool segment_in_polygon(const PolygonWithHoles& P, const Point& a, const Point& b,
                        double eps = -1);

/// True iff p sees q: segment pq contained in P. Throws PointOutsideDomain
/// when either endpoint is outside P.
bool sees(const PolygonWithHoles& P, const Point& p, const Point& q, double eps = -1);

/// Radius of the largest disk centered at g inside P.
double clearance(const PolygonWithHoles& P, const Point& g);

/// True iff the disk lies in P (center in P and clearance at least radius,
/// up to a relative tolerance on the radius).
bool disk_in_polygon(const PolygonWithHoles& P, const Disk& d, double eps_geom = 1e-9);

/// True iff the closed triangle abc lies in P. Collinear triangles reduce to
/// segment containment.
bool triangle_in_polygon(const PolygonWithHoles& P, const Point& a, const Point& b,
                         const Point& c, double eps_geom = 1e-9);

/// Classical visibility polygon of p, computed by an angular sweep over all
/// boundary vertices (rays at each vertex angle plus tiny offsets). The
/// result is a star-shaped simple polygon around p whose vertices lie on the
/// boundary of P.
PolygonWithHoles visibility_polygon(const PolygonWithHoles& P, const Point& p);

/// Farthest visible point from p along direction dir (distance along the ray
/// until the view is blocked).
double visible_extent(const PolygonWithHoles& P, const Point& p, const Point& dir);

}  // namespace rg
