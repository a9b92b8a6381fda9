#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "rg/overlay.hpp"

namespace rg {

/// Straight boundary piece.
struct SegPiece {
  Point a, b;
};

/// Circular arc, counterclockwise from angle `from` to `to` (to >= from).
struct ArcPiece {
  Point center;
  double radius = 0;
  double from = 0, to = 0;
};

/// Branch of the curve x^2 + (1 - 1/alpha^2) y^2 - 2y + 1 = 0 in a scaled
/// local frame: world = origin + scale * (x*u + y*perp(u)), u = (cos angle,
/// sin angle). The frame puts the constraining edge on the x-axis and the
/// query point at (0,1); the branch is the one between them (hyperbola_y).
struct HyperbolaPiece {
  Point origin;
  double angle = 0;
  double scale = 1;
  double alpha = 0.5;
  double x_lo = 0, x_hi = 0;
};

using RegionPiece = std::variant<SegPiece, ArcPiece, HyperbolaPiece>;

/// y of the branch between the edge (y=0) and the point (y=1) at abscissa x,
/// i.e. the smaller positive root of (1 - 1/alpha^2) y^2 - 2y + 1 + x^2 = 0.
double hyperbola_y(double alpha, double x);

/// World-coordinate point of a hyperbola piece at frame abscissa x.
Point hyperbola_point(const HyperbolaPiece& h, double x);

/// A closed region with curved boundary: the analytic pieces that generate
/// it, a polyline approximation at sagitta tolerance `tol`, and (when set) an
/// exact membership test assembled from the piece equations.
struct Region {
  std::vector<RegionPiece> pieces;
  MultiPoly approx;
  Point anchor{0, 0};
  double tol = 0;
  /// Zero-area region (e.g. a single segment); approx is empty but the
  /// pieces and membership are still meaningful.
  bool degenerate = false;
  std::function<bool(const Point&)> membership;

  bool contains(const Point& q) const;
  double area() const { return multipoly_area(approx); }
  bool empty() const { return approx.empty() && pieces.empty(); }

  /// Radius of the smallest disk centered at p containing every exact piece
  /// (0 for an empty piece list).
  double size_from(const Point& p) const;
};

}  // namespace rg
