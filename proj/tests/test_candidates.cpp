#include <doctest.h>

#include "helpers.hpp"
#include "rg/candidates.hpp"

using namespace rg;

TEST_CASE("Q grid on the unit square disk") {
  const auto sq = testutil::unit_square();
  const auto params = RobustParams::with_alpha(0.5);
  const auto dec = decompose(sq, params);
  REQUIRE(dec.disks.size() == 1);
  const auto Q = build_Q(dec, params);
  // Spacing k_qgrid * alpha^2 * R = (1/8)(1/4)(1/2) = 1/64; disk of radius
  // 1/2 holds about pi/4 * 64^2 ~ 3217 nodes.
  CHECK(Q.spacing[0] == doctest::Approx(1.0 / 64));
  CHECK(Q.per_disk[0].size() > 3000);
  CHECK(Q.per_disk[0].size() < 3400);
  for (const Point& q : Q.per_disk[0]) {
    CHECK(dist(q, {0.5, 0.5}) <= 0.5 + 1e-12);
    CHECK(sq.contains(q));
  }
  // Large alpha means O(1) points per disk.
  const auto Q1 = build_Q(dec, RobustParams::with_alpha(1.0));
  CHECK(Q1.per_disk[0].size() < 300);
}

TEST_CASE("Q budget guard") {
  const auto sq = testutil::unit_square();
  auto params = RobustParams::with_alpha(0.1);
  params.max_candidates_per_disk = 1000;
  const auto dec = decompose(sq, RobustParams::with_alpha(0.5));
  CHECK_THROWS_AS(build_Q(dec, params), BudgetExceeded);
}

TEST_CASE("boundary candidates: counts and spacing") {
  const auto sq = testutil::unit_square();
  const auto dec = decompose(sq, RobustParams::with_alpha(0.5));
  const auto Qh = build_Q_hat(dec, RobustParams::with_alpha(0.5));
  // ceil(2*pi / 0.5) = 13 boundary points plus the center.
  CHECK(Qh.per_disk[0].size() == 14);
  const auto Qh2 = build_Q_hat(dec, RobustParams::with_alpha(0.25));
  CHECK(Qh2.per_disk[0].size() == 27);  // ceil(2 pi / 0.25) = 26 plus center
  // First boundary point at world angle 0.
  CHECK(Qh.per_disk[0][1].x == doctest::Approx(1.0));
  CHECK(Qh.per_disk[0][1].y == doctest::Approx(0.5));
  // Consecutive boundary points are chords of the 2*pi/13 angular step.
  const double spacing = dist(Qh.per_disk[0][1], Qh.per_disk[0][2]);
  CHECK(spacing == doctest::Approx(2 * 0.5 * std::sin(M_PI / 13)));
}

TEST_CASE("candidates_for honors the association rule") {
  const auto rect = corridor(4, 2);
  const auto params = RobustParams::with_alpha(0.5);
  const auto dec = decompose(rect, params);
  const auto Q = build_Q(dec, params);
  // Inside the first medial disk.
  const auto inside = candidates_for(rect, dec, Q, {1, 1});
  CHECK(inside.size() == Q.per_disk[associate_disks(rect, dec, {1, 1})[0]].size());
  // Points of a cell get at most two disks' worth.
  const auto corner = candidates_for(rect, dec, Q, {0.05, 0.05});
  CHECK(corner.size() >= Q.per_disk[0].size());
}

TEST_CASE("candidate replacement at level alpha/4") {
  std::mt19937_64 rng(42);
  for (const auto& P : {testutil::unit_square(), corridor(4, 2), l_shape()}) {
    const double alpha = 0.5;
    const auto params = RobustParams::with_alpha(alpha);
    const auto quarter = RobustParams::with_alpha(alpha / 4);
    const auto dec = decompose(P, params);
    const auto Q = build_Q(dec, params);
    const auto pts = testutil::sample_inside(P, 400, rng());
    int trials = 0;
    for (std::size_t i = 0; i + 1 < pts.size() && trials < 100; i += 2) {
      const Point g = pts[i], p = pts[i + 1];
      if (!robustly_guards(P, g, p, params)) continue;
      ++trials;
      const auto cands = candidates_for(P, dec, Q, g);
      CHECK_NOTHROW(candidate_replacement_check(P, g, p, cands, quarter));
    }
    CHECK(trials >= 30);
  }
}

TEST_CASE("replacement scan prefers candidates close to g") {
  const auto sq = testutil::unit_square();
  const auto params = RobustParams::with_alpha(0.5);
  const Point g{0.5, 0.5};
  std::vector<Point> cands = {{0.9, 0.9}, {0.52, 0.5}, {0.1, 0.1}};
  const auto q = find_replacement(sq, g, {0.6, 0.6}, cands, params);
  REQUIRE(q.has_value());
  CHECK(q->x == doctest::Approx(0.52));
}
