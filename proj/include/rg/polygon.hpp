#pragma once

#include <vector>

#include "rg/geometry.hpp"

namespace rg {

using Ring = std::vector<Point>;

/// Signed area of a ring (positive for counterclockwise).
double ring_signed_area(const Ring& ring);

struct BBox {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double diameter() const { return std::hypot(width(), height()); }
};

/// A closed polygonal domain: one counterclockwise outer ring plus disjoint
/// clockwise hole rings. Boundary points belong to the domain.
class PolygonWithHoles {
 public:
  PolygonWithHoles() = default;
  PolygonWithHoles(Ring outer, std::vector<Ring> holes = {});

  const Ring& outer() const { return outer_; }
  const std::vector<Ring>& holes() const { return holes_; }
  std::size_t vertex_count() const;

  /// All boundary edges over all rings.
  const std::vector<Segment>& edges() const { return edges_; }
  /// All boundary vertices over all rings.
  const std::vector<Point>& all_vertices() const { return vertices_; }
  /// Vertices whose interior angle exceeds pi.
  std::vector<Point> reflex_vertices() const;
  /// Smallest interior angle over all rings, in radians.
  double min_interior_angle() const;

  BBox bbox() const { return bbox_; }
  double diameter() const { return bbox_.diameter(); }
  double area() const;

  /// Closed-domain membership: boundary points (within eps) count as inside.
  bool contains(const Point& p, double eps = 1e-12) const;
  /// Distance from p to the boundary (all rings).
  double boundary_distance(const Point& p) const;

  /// Validates ring simplicity, hole containment and orientation conventions;
  /// throws GeomError on violation.
  void validate(double eps_geom = 1e-9) const;

 private:
  Ring outer_;
  std::vector<Ring> holes_;
  std::vector<Segment> edges_;
  std::vector<Point> vertices_;
  BBox bbox_;
};

}  // namespace rg
