#include "rg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "rg/fat_hitting.hpp"
#include "rg/robust_vis.hpp"

namespace rg {

namespace {

// Per-disk candidate target and sample-grid density of the full pipeline.
// Both bound the work on small alpha: the analysis-mandated grid spacings
// scale like alpha^-4 and would dwarf any budget long before alpha = 1/8.
constexpr std::size_t kPipelinePerDisk = 128;
constexpr int kArrangementDensity = 48;
// Predicate evaluations spent per retired target before falling back to the
// target guarding itself.
constexpr std::size_t kHitScanCap = 20000;

RobustParams at_level(RobustParams p, double alpha) {
  p.alpha = alpha;
  p.theta = std::asin(alpha);
  return p;
}

void append_unique(std::vector<Point>& guards, std::set<std::pair<double, double>>& seen,
                   const Point& p) {
  if (seen.insert({p.x, p.y}).second) guards.push_back(p);
}

double piece_distance(const RegionPiece& piece, const Point& c) {
  struct Visitor {
    const Point& c;
    double operator()(const SegPiece& s) const { return point_segment_dist(c, s.a, s.b); }
    double operator()(const ArcPiece& a) const {
      double ang = std::atan2(c.y - a.center.y, c.x - a.center.x);
      while (ang < a.from) ang += 2 * M_PI;
      if (ang <= a.to) return std::abs(dist(c, a.center) - a.radius);
      const Point e0 = a.center + Point{a.radius * std::cos(a.from), a.radius * std::sin(a.from)};
      const Point e1 = a.center + Point{a.radius * std::cos(a.to), a.radius * std::sin(a.to)};
      return std::min(dist(c, e0), dist(c, e1));
    }
    double operator()(const HyperbolaPiece& h) const {
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 32; ++i) {
        const double x = h.x_lo + (h.x_hi - h.x_lo) * i / 32.0;
        best = std::min(best, dist(c, hyperbola_point(h, x)));
      }
      return best;
    }
  };
  return std::visit(Visitor{c}, piece);
}

// Distance from the inverse region to a point (0 when the region reaches it).
double region_gap(const Region& reg, const Point& c) {
  if (reg.membership && reg.membership(c)) return 0.0;
  if (!reg.approx.empty()) return multipoly_distance(reg.approx, c);
  if (reg.pieces.empty()) return dist(reg.anchor, c);
  double best = std::numeric_limits<double>::infinity();
  for (const RegionPiece& piece : reg.pieces) best = std::min(best, piece_distance(piece, c));
  return best;
}

// Cardinality of the hitting grid around a witness (for telemetry only; the
// scan below never materializes it).
std::size_t hitting_grid_count(double R, double gamma) {
  const double side = gamma * R / 6;
  if (!(side > 0)) return 0;
  const long long N = static_cast<long long>(std::floor(4 * R / side + 1e-9));
  std::size_t count = 0;
  for (long long i = -N; i <= N; ++i) {
    const double rem2 = 16 * R * R - (i * side) * (i * side);
    if (rem2 < 0) continue;
    const long long M = static_cast<long long>(std::floor(std::sqrt(rem2) / side + 1e-9));
    count += static_cast<std::size_t>(2 * M + 1);
  }
  return count;
}

// Scans the hitting grid H(g) = grid(side gamma*R/6) cap D(4R, g) for a node
// guarding s at the given level, nearest-to-s first (expanding Chebyshev
// rings around s's cell, each ring sorted by distance). Grid nodes are
// generated from their indices; nullopt once the scan cap is hit.
std::optional<Point> scan_hitting_grid(const PolygonWithHoles& P, const Point& g, double R,
                                       double gamma, const Point& s, const RobustParams& level) {
  const double side = gamma * R / 6;
  if (!(side > 0)) return std::nullopt;
  const long long i0 = std::llround((s.x - g.x) / side);
  const long long j0 = std::llround((s.y - g.y) / side);
  const long long dmax = static_cast<long long>(std::ceil(8 * R / side)) + 1;
  const double reach2 = 16 * R * R * (1 + 1e-12);
  std::size_t tested = 0;
  for (long long d = 0; d <= dmax; ++d) {
    std::vector<Point> ring;
    for (long long i = i0 - d; i <= i0 + d; ++i)
      for (long long j = j0 - d; j <= j0 + d; ++j) {
        if (std::max(std::llabs(i - i0), std::llabs(j - j0)) != d) continue;
        const Point q{g.x + i * side, g.y + j * side};
        const double dx = q.x - g.x, dy = q.y - g.y;
        if (dx * dx + dy * dy > reach2) continue;
        if (!P.contains(q)) continue;
        ring.push_back(q);
      }
    std::sort(ring.begin(), ring.end(), [&s](const Point& a, const Point& b) {
      const double da = dist(a, s), db = dist(b, s);
      if (da != db) return da < db;
      return std::make_pair(a.x, a.y) < std::make_pair(b.x, b.y);
    });
    for (const Point& q : ring) {
      if (++tested > kHitScanCap) return std::nullopt;
      if (robustly_guards(P, q, s, level)) return q;
    }
  }
  return std::nullopt;
}

}  // namespace

GuardSolution discrete_robust_guarding(const PolygonWithHoles& P, const std::vector<Point>& S,
                                       const RobustParams& params) {
  params.check();
  for (const Point& s : S)
    if (!P.contains(s)) throw PointOutsideDomain("discrete_robust_guarding: target outside P");

  GuardSolution sol;
  sol.target = TargetKind::Discrete;
  sol.certified_alpha = params.alpha / 2;

  const double diam = P.diameter();
  const double tol = params.arc_tol(diam);
  const double tiny = 1e-12 * diam;
  const RobustParams half = at_level(params, params.alpha / 2);
  const double gamma = std::min(params.k_fat * params.alpha, 0.25);

  const std::size_t n = S.size();
  std::vector<Region> regions(n);
  std::vector<double> sizes(n);
  for (std::size_t i = 0; i < n; ++i) {
    regions[i] = inverse_region(P, S[i], params);
    sizes[i] = inverse_region_size(regions[i], S[i]);
  }

  std::vector<char> alive(n, 1);
  std::set<std::pair<double, double>> seen;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && (best == n || sizes[i] < sizes[best])) best = i;

    const Point g = S[best];
    const double Rg = sizes[best];
    sol.witnesses.push_back(g);
    if (Rg > tiny)
      sol.stats.max_hitting_grid = std::max(sol.stats.max_hitting_grid,
                                            hitting_grid_count(Rg, gamma));

    for (std::size_t j = 0; j < n; ++j) {
      if (!alive[j]) continue;
      // regions[j] lies in D(S[j], sizes[j]), so a cheap circumradius test
      // rejects far pairs before the exact polyline distance.
      if (dist(g, S[j]) > sizes[j] + Rg + 2 * tol) continue;
      if (region_gap(regions[j], g) > Rg + 2 * tol) continue;
      alive[j] = 0;
      --remaining;
      std::optional<Point> guard;
      if (Rg > tiny) {
        guard = scan_hitting_grid(P, g, Rg, gamma, S[j], half);
        if (!guard) ++sol.stats.fallback_additions;
      }
      append_unique(sol.guards, seen, guard ? *guard : S[j]);
    }
    if (alive[best]) {
      // The witness always retires itself, whatever the state of its region
      // approximation; otherwise the greedy loop could stall.
      alive[best] = 0;
      --remaining;
      std::optional<Point> guard;
      if (Rg > tiny) {
        guard = scan_hitting_grid(P, g, Rg, gamma, g, half);
        if (!guard) ++sol.stats.fallback_additions;
      }
      append_unique(sol.guards, seen, guard ? *guard : g);
    }
  }
  sol.stats.witness_count = sol.witnesses.size();
  return sol;
}

std::vector<Point> arrangement_samples(const PolygonWithHoles& P, const std::vector<Point>& Q,
                                       const RobustParams& params) {
  if (Q.empty()) return {};
  std::vector<Region> regions;
  regions.reserve(Q.size());
  for (const Point& q : Q) regions.push_back(robust_visibility_region(P, q, params));

  const std::size_t words = (Q.size() + 63) / 64;
  const BBox b = P.bbox();
  std::map<std::vector<std::uint64_t>, std::size_t> faces;
  std::vector<Point> reps;
  for (int i = 0; i < kArrangementDensity; ++i)
    for (int j = 0; j < kArrangementDensity; ++j) {
      const Point p{b.xmin + (i + 0.5) * b.width() / kArrangementDensity,
                    b.ymin + (j + 0.5) * b.height() / kArrangementDensity};
      if (!P.contains(p)) continue;
      std::vector<std::uint64_t> sig(words, 0);
      for (std::size_t r = 0; r < regions.size(); ++r)
        if (regions[r].contains(p)) sig[r / 64] |= 1ull << (r % 64);
      if (faces.emplace(std::move(sig), reps.size()).second) {
        reps.push_back(p);
        if (reps.size() > params.max_arrangement_faces)
          throw BudgetExceeded("arrangement_samples: face budget exceeded");
      }
    }
  return reps;
}

std::vector<Point> chain_inner_centers(const PurpleChain& chain) {
  const std::size_t k = chain.inserted.size();
  std::vector<Point> out;
  if (k <= 8) return out;
  for (std::size_t i = 4; i + 4 < k; ++i) out.push_back(chain.inserted[i].center);
  return out;
}

namespace {

// Candidate grids on the medial disks with the analysis spacing clamped so
// no disk exceeds kPipelinePerDisk interior nodes.
CandidateSet build_pipeline_candidates(const Decomposition& decomp, const RobustParams& params) {
  CandidateSet Q;
  Q.per_disk.resize(decomp.disks.size());
  Q.spacing.resize(decomp.disks.size());
  std::size_t totalcount = 0;
  for (std::size_t i = 0; i < decomp.disks.size(); ++i) {
    const Disk& d = decomp.disks[i];
    const double h = std::max(params.k_qgrid * params.alpha * params.alpha * d.radius,
                              d.radius * std::sqrt(M_PI / kPipelinePerDisk));
    Q.spacing[i] = h;
    std::vector<Point>& pts = Q.per_disk[i];
    pts.push_back(d.center);
    if (h > 0) {
      const long imax = static_cast<long>(std::floor(d.radius / h));
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
      throw BudgetExceeded("guard_polygon: total candidate budget exceeded");
  }
  for (const auto& pts : Q.per_disk) Q.total.insert(Q.total.end(), pts.begin(), pts.end());
  return Q;
}

}  // namespace

GuardSolution guard_polygon(const PolygonWithHoles& P, const RobustParams& params) {
  if (!(params.alpha > 0 && params.alpha <= 1)) throw GeomError("alpha must be in (0,1]");
  if (params.alpha > std::sin(P.min_interior_angle() / 2) + 1e-12) throw AlphaTooLarge();

  const double diam = P.diameter();
  RobustParams p8 = at_level(params, params.alpha / 8);
  RobustParams p4 = at_level(params, params.alpha / 4);
  p8.tol_arc = params.arc_tol(diam);
  p4.tol_arc = params.arc_tol(diam);

  auto decomp = std::make_shared<Decomposition>(decompose(P, p8));
  const CandidateSet Q = build_pipeline_candidates(*decomp, p8);

  GuardSolution sol;
  sol.target = TargetKind::FullPolygon;
  sol.certified_alpha = params.alpha / 8;
  sol.decomp = decomp;
  sol.stats.candidate_count = Q.total.size();

  const std::vector<Point> S = arrangement_samples(P, Q.total, p8);
  sol.stats.arrangement_faces = S.size();

  GuardSolution inner = discrete_robust_guarding(P, S, p4);
  sol.witnesses = inner.witnesses;
  sol.stats.witness_count = inner.stats.witness_count;
  sol.stats.fallback_additions = inner.stats.fallback_additions;
  sol.stats.max_hitting_grid = inner.stats.max_hitting_grid;

  // Replace each greedy guard by candidates from its associated disks that
  // take over its targets at the certified level; keep the guard when some
  // target has no candidate replacement.
  std::set<std::pair<double, double>> seen;
  for (const Point& g : inner.guards) {
    std::vector<Point> targets;
    for (const Point& s : S)
      if (robustly_guards(P, g, s, p8)) targets.push_back(s);
    std::vector<Point> cands = candidates_for(P, *decomp, Q, g);
    sol.stats.max_Qg = std::max(sol.stats.max_Qg, cands.size());
    std::vector<Point> repl;
    bool ok = !targets.empty();
    for (const Point& s : targets) {
      auto q = find_replacement(P, g, s, cands, p8);
      if (!q) {
        ok = false;
        break;
      }
      repl.push_back(*q);
    }
    if (ok) {
      for (const Point& q : repl) append_unique(sol.guards, seen, q);
    } else {
      if (!targets.empty()) ++sol.stats.replacement_kept_original;
      append_unique(sol.guards, seen, g);
    }
  }

  // Medial-center backstop: every base and inserted disk center guards its
  // whole disk at any level, so adding them certifies the disk-covered part
  // of P outright. Long purple chains contribute their inner centers only
  // implicitly, by count.
  const std::size_t before = sol.guards.size();
  for (std::size_t i = 0; i < decomp->base_disks; ++i)
    append_unique(sol.guards, seen, decomp->disks[i].center);
  for (std::size_t c = 0; c < decomp->chains.size(); ++c) {
    const PurpleChain& chain = decomp->chains[c];
    const std::size_t k = chain.inserted.size();
    if (k > 8) {
      for (std::size_t i = 0; i < 4; ++i) append_unique(sol.guards, seen, chain.inserted[i].center);
      for (std::size_t i = k - 4; i < k; ++i)
        append_unique(sol.guards, seen, chain.inserted[i].center);
      sol.implicit.push_back({static_cast<int>(c), static_cast<int>(k - 8)});
    } else {
      for (const Disk& d : chain.inserted) append_unique(sol.guards, seen, d.center);
    }
  }
  sol.stats.center_guards_added = sol.guards.size() - before;
  return sol;
}

GuardSolution expand_implicit(const GuardSolution& sol) {
  GuardSolution out = sol;
  if (sol.implicit.empty()) return out;
  if (!sol.decomp) throw GeomError("expand_implicit: solution lacks its decomposition context");
  std::set<std::pair<double, double>> seen;
  for (const Point& g : out.guards) seen.insert({g.x, g.y});
  for (const ImplicitChainGuards& entry : sol.implicit) {
    const auto& chains = sol.decomp->chains;
    if (entry.chain_id < 0 || entry.chain_id >= static_cast<int>(chains.size()))
      throw GeomError("expand_implicit: implicit entry references an unknown chain");
    const std::vector<Point> inner = chain_inner_centers(chains[entry.chain_id]);
    if (static_cast<int>(inner.size()) != entry.count)
      throw GeomError("expand_implicit: implicit count disagrees with the chain");
    for (const Point& g : inner) append_unique(out.guards, seen, g);
  }
  out.implicit.clear();
  return out;
}

}  // namespace rg
