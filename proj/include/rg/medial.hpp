#pragma once

#include <variant>
#include <vector>

#include "rg/overlay.hpp"
#include "rg/params.hpp"

namespace rg {

struct NonTermination : GeomError {
  NonTermination() : GeomError("purple-chain insertion exceeded its geometric bound") {}
};

/// A medial-axis site: either a boundary vertex or an open boundary edge.
using MedialSite = std::variant<Point, Segment>;

/// Distance from q to a site.
double site_distance(const Point& q, const MedialSite& site);

struct MedialVertex {
  Point p;
  double radius = 0;  // clearance = radius of the medial disk
  int degree = 0;     // incident medial edges (interior ones)
};

struct MedialEdge {
  int a = -1, b = -1;  // indices into MedialAxis::vertices, -1 = boundary end
  bool parabolic = false;
  MedialSite site1, site2;  // the two defining sites
};

/// Interior vertices (the set M, including degree-2 junctions) and the axis
/// edges between them.
struct MedialAxis {
  std::vector<MedialVertex> vertices;
  std::vector<MedialEdge> edges;
};

/// Point on edge e at parameter t in [0,1]: straight chord for linear edges,
/// the equidistant parabola for point/segment edges.
Point medial_edge_point(const MedialAxis& ma, const MedialEdge& e, const Point& end_a,
                        const Point& end_b, double t);

/// Medial axis of P restricted to the interior, from the Voronoi diagram of
/// the boundary vertices and edges.
MedialAxis medial_axis(const PolygonWithHoles& P);

enum class CellKind { Red, Purple, Blue };

/// One connected component of P minus the medial disks, labeled by its
/// bounding features.
struct Cell {
  CellKind kind = CellKind::Blue;
  MultiPoly boundary;  // may have several components (tangent-disk purple cells)
  std::vector<int> disks;   // indices into Decomposition::disks (1 or 2)
  std::vector<int> edges;   // indices of P edges on the cell boundary
};

/// Disks inserted along a corridor-like purple cell, anchored at the
/// larger-radius endpoint v and walked toward w.
struct PurpleChain {
  int cell = -1;
  Point v, w;
  double Rv = 0, Rw = 0;
  Segment e1, e2;  // the two defining edges of P
  std::vector<Disk> inserted;
};

struct Decomposition {
  MedialAxis axis;
  std::vector<Disk> disks;  // one per medial vertex, then the inserted ones
  std::size_t base_disks = 0;  // disks[0..base_disks) belong to axis vertices
  std::vector<Cell> cells;
  std::vector<PurpleChain> chains;  // one per purple cell
};

/// Components of P minus the medial disks, classified Red/Purple/Blue.
/// Purple components sharing the same disk pair are merged into one cell.
std::vector<Cell> classify_cells(const PolygonWithHoles& P, const MedialAxis& ma,
                                 const std::vector<Disk>& disks, double tol);

/// The recurrence of the purple-disk insertion: starting from the disk at v,
/// repeatedly place the tangent medial disk through the intersection of the
/// current disk's alpha-expansion with the defining edges, until the
/// expansion reaches w. Throws NonTermination past the geometric cap.
PurpleChain insert_purple_disks(const Point& v, double Rv, const Point& w, double Rw,
                                const Segment& e1, const Segment& e2,
                                const RobustParams& params);

/// Full decomposition: axis, disks, cells, and purple chains (with inserted
/// disks appended to the disk list).
Decomposition decompose(const PolygonWithHoles& P, const RobustParams& params);

/// Disks associated with g: the largest disk containing g if any, otherwise
/// the defining disks of g's cell. Returns indices into decomp.disks.
std::vector<int> associate_disks(const PolygonWithHoles& P, const Decomposition& decomp,
                                 const Point& g);

}  // namespace rg
