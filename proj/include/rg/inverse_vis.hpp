#pragma once

#include "rg/params.hpp"
#include "rg/region.hpp"
#include "rg/robust_vis.hpp"

namespace rg {

struct NotRobustlyGuarded : GeomError {
  NotRobustlyGuarded() : GeomError("g does not robustly guard p") {}
};

/// Kite g a' p b' inscribed in the ice cream cone from p to g: a', b' are the
/// points where the half-angle bisectors of the cone meet the tangent legs.
/// Apex angle at p is theta, angle at g is pi - 2*theta. Every interior
/// point alpha/2-robustly guards p; used as a property-test generator.
struct FatKite {
  Point g, ap, p, bp;  // vertices in order g, a', p, b'
  double apex_angle_at_p = 0;
  double angle_at_g = 0;

  bool contains(const Point& q) const {
    return point_in_triangle(q, g, ap, p) || point_in_triangle(q, g, p, bp);
  }
};

/// The robust inverse visibility region VP^-1_alpha(p): all g in VP(p) whose
/// disk D(g, alpha*|p-g|) stays inside VP(p). Built by subtracting each VP
/// edge's forbidden zone (hyperbolic band across the edge's slab plus the two
/// endpoint Apollonius disks) from VP(p). A zero-area region (e.g. a single
/// bisector segment) is returned with degenerate=true and explicit segment
/// pieces.
Region inverse_region(const PolygonWithHoles& P, const Point& p, const RobustParams& params);

/// Radius of the minimum enclosing disk of VP^-1_alpha(p) centered at p;
/// 0 when p can only be guarded from p itself.
double inverse_region_size(const PolygonWithHoles& P, const Point& p, const RobustParams& params);
double inverse_region_size(const Region& region, const Point& p);

FatKite fat_kite(const PolygonWithHoles& P, const Point& g, const Point& p,
                 const RobustParams& params);

}  // namespace rg
