#pragma once

#include "rg/params.hpp"
#include "rg/region.hpp"
#include "rg/visibility.hpp"

namespace rg {

struct DegenerateCone : GeomError {
  DegenerateCone() : GeomError("ice cream cone undefined for p = g") {}
};

/// The union of triangle (a, p, b) and the disk: the shape that must fit in
/// P for g to alpha-robustly guard p.
struct IceCreamCone {
  Point apex;  // p
  Disk disk;   // D(g, alpha * |p - g|)
  Point a, b;  // tangency points of the cone legs on the disk
};

/// Cone from apex p to the disk of radius alpha*|p-g| around g. Throws
/// DegenerateCone for p = g.
IceCreamCone ice_cream_cone(const Point& g, const Point& p, double alpha);

/// True iff g alpha-robustly guards p: p sees the whole disk
/// D(g, alpha*|p-g|), equivalently the ice cream cone lies in P. A point
/// guards itself. Throws PointOutsideDomain when g or p is outside P.
bool robustly_guards(const PolygonWithHoles& P, const Point& g, const Point& p,
                     const RobustParams& params);

/// Test oracle for the shrunk-disk containment: K is the wedge at p spanned
/// CCW from angle rho0_dir to rho0_dir + 2*theta. Returns whether
/// D(q, c*sin(theta)*|p-q|) is contained in K, by exact signed distance to
/// both boundary rays.
bool disk_in_cone_check(const Point& p, double rho0_dir, double theta, const Point& q, double c);

/// Membership in the heart-shaped constraint set of reflex vertex v: the set
/// of points q such that v does not lie strictly inside the ice cream cone
/// from q to g. With d = |g-v| and the frame x-axis along g->v, the set is
/// D(g, d/alpha) on the near side of the perpendicular line through v, and
/// the union of the two circles through g, v and the line's intersections
/// with D(g, d/alpha) on the far side.
bool heart_contains(const Point& g, const Point& v, double alpha, const Point& q,
                    double slack = 0);

/// The alpha-robust visibility region VP_alpha(g): all p that g robustly
/// guards. Built as VP(g) intersected with D(g, R_g/alpha) and with the
/// heart set of every reflex vertex. The region carries the constraint arcs
/// as exact pieces and an analytic membership assembled from them.
Region robust_visibility_region(const PolygonWithHoles& P, const Point& g,
                                const RobustParams& params);

}  // namespace rg
