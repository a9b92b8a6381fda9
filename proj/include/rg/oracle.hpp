#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rg/params.hpp"
#include "rg/polygon.hpp"

namespace rg {

struct Infeasible : GeomError {
  Infeasible() : GeomError("even the full candidate set fails to cover the targets") {}
};
struct DegenerateDisk : GeomError {
  DegenerateDisk() : GeomError("p = g gives a zero-radius disk") {}
};

struct UncoveredSample {
  Point p;
  Point nearest_guard;
  std::string reason;
};

struct CoverageReport {
  std::size_t samples = 0;
  std::size_t covered = 0;
  double level = 0;
  std::uint64_t seed = 0;
  std::vector<UncoveredSample> uncovered;

  bool ok() const { return covered == samples; }
};

struct AreaEstimate {
  double value = 0;       // fraction in [0,1]
  double half_width = 0;  // 95% confidence half-width
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Dense-sample coverage check: grid of density x density over the bounding
/// box, all polygon vertices, and 1000 seeded random interior points; each
/// sample must be level-robustly guarded by some guard. `parallel` selects
/// the OpenMP kernel; the serial kernel is the reference (identical output).
CoverageReport verify_coverage(const PolygonWithHoles& P, const std::vector<Point>& guards,
                               double level, int density, std::uint64_t seed,
                               bool parallel = true);

/// Minimum number of candidates alpha-robustly guarding all targets, by
/// exhaustive subset search over the (small) candidate set.
int exact_opt_small(const PolygonWithHoles& P, const std::vector<Point>& targets,
                    const std::vector<Point>& candidates, const RobustParams& params);

/// Monte-Carlo fraction of D(g, alpha*|p-g|) visible from p.
AreaEstimate visible_area_fraction(const PolygonWithHoles& P, const Point& g, const Point& p,
                                   double alpha, std::size_t samples, std::uint64_t seed,
                                   bool parallel = true);

/// Monte-Carlo lower estimate of the fatness constant gamma of a region
/// given by a membership predicate: min over sampled centers and log-spaced
/// radii of area(local component of region within D(p,r)) / (pi r^2),
/// restricted to disks that do not contain the whole region. The component
/// is traced by flood fill at resolution r/64.
AreaEstimate fatness_estimate(const std::function<bool(const Point&)>& membership,
                              const Point& center, double size, std::size_t samples,
                              std::uint64_t seed);

/// Seeded uniform points inside P (rejection from the bounding box).
std::vector<Point> random_points_in(const PolygonWithHoles& P, std::size_t count,
                                    std::uint64_t seed);

}  // namespace rg
