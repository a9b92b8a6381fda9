#pragma once

#include <optional>
#include <vector>

#include "rg/medial.hpp"
#include "rg/robust_vis.hpp"

namespace rg {

struct ReplacementNotFound : GeomError {
  ReplacementNotFound() : GeomError("no candidate replacement guards the point") {}
};

/// Square grids on the medial disks: per disk v, spacing k_qgrid*alpha^2*R_v
/// anchored at v and clipped to D(v, R_v), plus the center itself.
struct CandidateSet {
  std::vector<std::vector<Point>> per_disk;  // parallel to Decomposition::disks
  std::vector<double> spacing;
  std::vector<Point> total;  // flattened union (centers included once)
};

/// Evenly spaced boundary candidates: ceil(c_boundary/alpha) points on each
/// disk boundary (first at world angle 0) plus the center.
struct BoundaryCandidateSet {
  std::vector<std::vector<Point>> per_disk;
  std::vector<Point> total;
};

CandidateSet build_Q(const Decomposition& decomp, const RobustParams& params);

BoundaryCandidateSet build_Q_hat(const Decomposition& decomp, const RobustParams& params);

/// Q(g): the candidates of g's associated disks (center + grid each).
std::vector<Point> candidates_for(const PolygonWithHoles& P, const Decomposition& decomp,
                                  const CandidateSet& Q, const Point& g);

/// Some candidate in cands that guards p at the given level, scanning
/// near-to-far from g; nullopt when none does.
std::optional<Point> find_replacement(const PolygonWithHoles& P, const Point& g, const Point& p,
                                      std::vector<Point> cands, const RobustParams& level);

/// find_replacement that treats absence as an error: with a dense enough
/// candidate grid a replacement always exists, so a miss means the grid
/// constants are set too coarse.
Point candidate_replacement_check(const PolygonWithHoles& P, const Point& g, const Point& p,
                                  const std::vector<Point>& cands, const RobustParams& level);

}  // namespace rg
