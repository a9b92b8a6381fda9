#include "rg/candidates.hpp"

#include <algorithm>
#include <cmath>

namespace rg {

CandidateSet build_Q(const Decomposition& decomp, const RobustParams& params) {
  CandidateSet Q;
  Q.per_disk.resize(decomp.disks.size());
  Q.spacing.resize(decomp.disks.size());
  std::size_t totalcount = 0;
  for (std::size_t i = 0; i < decomp.disks.size(); ++i) {
    const Disk& d = decomp.disks[i];
    const double h = params.k_qgrid * params.alpha * params.alpha * d.radius;
    Q.spacing[i] = h;
    std::vector<Point>& pts = Q.per_disk[i];
    pts.push_back(d.center);
    if (h > 0) {
      const long imax = static_cast<long>(std::floor(d.radius / h));
      const std::size_t expect = static_cast<std::size_t>(2 * imax + 1) * (2 * imax + 1);
      if (expect > params.max_candidates_per_disk)
        throw BudgetExceeded("build_Q: per-disk candidate budget exceeded");
      const double r2 = d.radius * d.radius;
      for (long a = -imax; a <= imax; ++a)
        for (long b = -imax; b <= imax; ++b) {
          if (a == 0 && b == 0) continue;
          const double x = a * h, y = b * h;
          if (x * x + y * y <= r2) pts.push_back({d.center.x + x, d.center.y + y});
        }
    }
    totalcount += pts.size();
    if (totalcount > params.max_candidates_total)
      throw BudgetExceeded("build_Q: total candidate budget exceeded");
  }
  for (const auto& pts : Q.per_disk) Q.total.insert(Q.total.end(), pts.begin(), pts.end());
  return Q;
}

BoundaryCandidateSet build_Q_hat(const Decomposition& decomp, const RobustParams& params) {
  BoundaryCandidateSet Q;
  Q.per_disk.resize(decomp.disks.size());
  const int m = static_cast<int>(std::ceil(params.c_boundary / params.alpha));
  for (std::size_t i = 0; i < decomp.disks.size(); ++i) {
    const Disk& d = decomp.disks[i];
    std::vector<Point>& pts = Q.per_disk[i];
    pts.push_back(d.center);
    for (int j = 0; j < m; ++j) {
      const double a = 2 * M_PI * j / m;
      pts.push_back(d.center + Point{d.radius * std::cos(a), d.radius * std::sin(a)});
    }
  }
  for (const auto& pts : Q.per_disk) Q.total.insert(Q.total.end(), pts.begin(), pts.end());
  return Q;
}

std::vector<Point> candidates_for(const PolygonWithHoles& P, const Decomposition& decomp,
                                  const CandidateSet& Q, const Point& g) {
  std::vector<Point> out;
  for (int i : associate_disks(P, decomp, g)) {
    const auto& pts = Q.per_disk[static_cast<std::size_t>(i)];
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

std::optional<Point> find_replacement(const PolygonWithHoles& P, const Point& g, const Point& p,
                                      std::vector<Point> cands, const RobustParams& level) {
  std::sort(cands.begin(), cands.end(), [&g](const Point& a, const Point& b) {
    const double da = dist(a, g), db = dist(b, g);
    if (da != db) return da < db;
    return std::make_pair(a.x, a.y) < std::make_pair(b.x, b.y);
  });
  for (const Point& q : cands)
    if (robustly_guards(P, q, p, level)) return q;
  return std::nullopt;
}

Point candidate_replacement_check(const PolygonWithHoles& P, const Point& g, const Point& p,
                                  const std::vector<Point>& cands, const RobustParams& level) {
  auto q = find_replacement(P, g, p, cands, level);
  if (!q) throw ReplacementNotFound();
  return *q;
}

}  // namespace rg
