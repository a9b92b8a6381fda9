#pragma once

#include <memory>
#include <vector>

#include "rg/candidates.hpp"
#include "rg/inverse_vis.hpp"
#include "rg/medial.hpp"

namespace rg {

/// Inner guards of a long purple chain, recorded by count instead of being
/// listed; expand_implicit materializes them from the chain.
struct ImplicitChainGuards {
  int chain_id = -1;
  int count = 0;
};

struct SolveStats {
  std::size_t witness_count = 0;
  std::size_t fallback_additions = 0;        // targets rescued by self-guarding
  std::size_t replacement_kept_original = 0; // greedy guards Q(g) could not take over
  std::size_t center_guards_added = 0;       // medial centers in the final cover
  std::size_t arrangement_faces = 0;
  std::size_t candidate_count = 0;
  std::size_t max_hitting_grid = 0;  // largest |H(g)| over greedy steps
  std::size_t max_Qg = 0;            // largest |Q(g)| during replacement
};

enum class TargetKind { Discrete, FullPolygon };

struct GuardSolution {
  std::vector<Point> guards;
  double certified_alpha = 0;
  std::vector<Point> witnesses;
  std::vector<ImplicitChainGuards> implicit;
  SolveStats stats;
  TargetKind target = TargetKind::Discrete;
  /// Generator context for the implicit entries (unset for discrete runs).
  std::shared_ptr<const Decomposition> decomp;
};

/// Greedy discrete guarding: repeatedly pick the target with the smallest
/// inverse region as a witness, retire every target whose inverse region
/// meets that region's enclosing disk, and cover the retired targets from
/// the witness's hitting grid (self-guard fallback when the grid misses).
/// Certifies alpha/2 on S.
GuardSolution discrete_robust_guarding(const PolygonWithHoles& P, const std::vector<Point>& S,
                                       const RobustParams& params);

/// One representative per distinct membership signature of the robust
/// visibility regions of the candidates, over a dense sample grid: the
/// sample-point set S of the full pipeline. Throws BudgetExceeded past
/// params.max_arrangement_faces signatures.
std::vector<Point> arrangement_samples(const PolygonWithHoles& P, const std::vector<Point>& Q,
                                       const RobustParams& params);

/// Full pipeline: decomposition and candidates at alpha/8, greedy at
/// alpha/4, Q(g) replacement at alpha/8, implicit handling of long purple
/// chains, and medial-center backstop. Certifies alpha/8 on all of P.
GuardSolution guard_polygon(const PolygonWithHoles& P, const RobustParams& params);

/// Materializes all implicit chain guards; identity when none are recorded.
GuardSolution expand_implicit(const GuardSolution& sol);

/// Centers of a chain's inserted disks excluding 4 at each end; empty for
/// chains of 8 or fewer disks.
std::vector<Point> chain_inner_centers(const PurpleChain& chain);

}  // namespace rg
