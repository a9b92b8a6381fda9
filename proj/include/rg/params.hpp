#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "rg/geometry.hpp"

namespace rg {

/// Robustness parameter alpha together with every tunable constant of the
/// guarding pipeline. theta is always arcsin(alpha).
struct RobustParams {
  double alpha = 0.25;
  double theta = std::asin(0.25);

  double eps_geom = 1e-9;   // relative tolerance for geometric predicates
  double tol_arc = 0.0;     // arc-discretization sagitta; 0 = 1e-4 * diameter(P)

  // Tunable constants the analysis leaves open.
  double k_qgrid = 0.125;      // candidate grid spacing coefficient (times alpha^2 R_v)
  double k_fat = 0.125;        // fatness parameter coefficient for hitting sets
  double c_boundary = 2 * M_PI;  // boundary candidate count coefficient
  double sample_density = 200;   // coverage grid density (per bbox side)

  // Budget caps for degenerate inputs.
  std::size_t max_candidates_per_disk = 20000;
  std::size_t max_candidates_total = 400000;
  std::size_t max_arrangement_faces = 250000;

  std::uint64_t seed = 20240817;

  static RobustParams with_alpha(double a) {
    RobustParams p;
    p.alpha = a;
    p.theta = std::asin(a);
    return p;
  }

  /// Arc tolerance resolved against a domain diameter.
  double arc_tol(double diameter) const { return tol_arc > 0 ? tol_arc : 1e-4 * diameter; }

  void check(double min_interior_angle = M_PI) const {
    if (!(alpha > 0 && alpha <= 1)) throw GeomError("alpha must be in (0,1]");
    if (alpha > std::sin(min_interior_angle / 2) + 1e-12)
      throw GeomError("alpha exceeds sin(phi/2) for the smallest interior angle");
  }
};

struct AlphaTooLarge : GeomError {
  AlphaTooLarge() : GeomError("alpha too large for this polygon") {}
};
struct BudgetExceeded : GeomError {
  explicit BudgetExceeded(const std::string& what) : GeomError(what) {}
};

}  // namespace rg
