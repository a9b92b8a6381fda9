#include <doctest.h>

#include "helpers.hpp"
#include "rg/oracle.hpp"
#include "rg/robust_vis.hpp"

using namespace rg;

TEST_CASE("coverage verification on the square and the strip") {
  const auto sq = testutil::unit_square();
  const auto full = verify_coverage(sq, {{0.5, 0.5}}, 0.25, 60, 1);
  CHECK(full.ok());
  CHECK(full.samples > 3600);

  const auto strip = testutil::strip10();
  const auto partial = verify_coverage(strip, {{5, 0.5}}, 0.5, 60, 1);
  CHECK_FALSE(partial.ok());
  // Every uncovered sample is beyond the clearance-forced reach R_g/alpha = 1.
  for (const auto& u : partial.uncovered) CHECK(dist(u.p, {5, 0.5}) > 1 - 1e-6);
}

TEST_CASE("serial and parallel coverage kernels are identical") {
  const auto L = l_shape();
  const std::vector<Point> guards = {{0.5, 0.5}, {1.5, 0.5}, {0.5, 1.5}};
  const auto a = verify_coverage(L, guards, 0.1, 80, 9, false);
  const auto b = verify_coverage(L, guards, 0.1, 80, 9, true);
  CHECK(a.samples == b.samples);
  CHECK(a.covered == b.covered);
  REQUIRE(a.uncovered.size() == b.uncovered.size());
  for (std::size_t i = 0; i < a.uncovered.size(); ++i) {
    CHECK(a.uncovered[i].p.x == b.uncovered[i].p.x);
    CHECK(a.uncovered[i].p.y == b.uncovered[i].p.y);
  }
}

TEST_CASE("exact_opt_small finds forced optima") {
  const auto sq = testutil::unit_square();
  const auto params = RobustParams::with_alpha(0.25);
  // Single target colocated with a candidate.
  CHECK(exact_opt_small(sq, {{0.5, 0.5}}, {{0.5, 0.5}, {0.2, 0.2}}, params) == 1);

  // Two far-apart corridor targets cannot share a guard at alpha = 0.5.
  const auto strip = testutil::strip10();
  const auto half = RobustParams::with_alpha(0.5);
  const std::vector<Point> targets = {{1, 0.5}, {9, 0.5}};
  const std::vector<Point> cands = {{1, 0.5}, {5, 0.5}, {9, 0.5}};
  CHECK(exact_opt_small(strip, targets, cands, half) == 2);

  // Infeasible when no candidate can reach a target.
  CHECK_THROWS_AS(exact_opt_small(strip, {{9.9, 0.5}}, {{1, 0.5}}, half), Infeasible);

  // Monotone: more candidates never hurt.
  std::vector<Point> more = cands;
  more.push_back({3, 0.5});
  more.push_back({7, 0.5});
  CHECK(exact_opt_small(strip, targets, more, half) <= 2);
}

TEST_CASE("visible area fraction: unobstructed and half-blocked disks") {
  const auto sq = testutil::unit_square();
  const auto full = visible_area_fraction(sq, {0.5, 0.5}, {0.9, 0.5}, 0.5, 200000, 3);
  CHECK(full.value == doctest::Approx(1.0).epsilon(1e-3));

  // Guard centered on the reflex corner of the L: about half of a small disk
  // around the corner is outside the domain's visible wedge from p.
  const auto L = l_shape();
  const auto est = visible_area_fraction(L, {1.0, 1.0}, {0.5, 1.0}, 0.5, 200000, 3);
  CHECK(est.value > 0.4);
  CHECK(est.value < 0.9);
  CHECK(est.half_width < 0.01);
  CHECK_THROWS_AS(visible_area_fraction(sq, {0.5, 0.5}, {0.5, 0.5}, 0.5, 100, 3),
                  DegenerateDisk);
}

TEST_CASE("area estimates are reproducible and seed-partitioned") {
  const auto sq = testutil::unit_square();
  const auto a = visible_area_fraction(sq, {0.5, 0.5}, {0.9, 0.5}, 0.5, 50000, 11, false);
  const auto b = visible_area_fraction(sq, {0.5, 0.5}, {0.9, 0.5}, 0.5, 50000, 11, true);
  CHECK(a.value == b.value);
  CHECK(a.samples == b.samples);
}

TEST_CASE("fatness estimate separates a disk from a sliver") {
  auto disk = [](const Point& q) { return dist(q, {0, 0}) <= 1.0; };
  const auto round = fatness_estimate(disk, {0, 0}, 1.0, 20000, 17);
  CHECK(round.value > 0.2);  // worst case ~1/4 near the boundary

  auto sliver = [](const Point& q) {
    return q.x >= 0 && q.x <= 100 && q.y >= 0 && q.y <= 1;
  };
  const auto thin = fatness_estimate(sliver, {50, 0.5}, 50.0, 20000, 17);
  CHECK(thin.value < 0.05);
  CHECK(thin.value < round.value);
}
