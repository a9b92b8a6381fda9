#include <doctest.h>

#include "helpers.hpp"
#include "rg/inverse_vis.hpp"

using namespace rg;

TEST_CASE("hyperbola canonical branch") {
  // At x = 0 the branch passes through y with (1 - 1/a^2) y^2 - 2y + 1 = 0,
  // the smaller root; for alpha = 1 it degenerates to the parabola (1+x^2)/2.
  const double a = 0.5;
  const double y0 = hyperbola_y(a, 0.0);
  const double k = 1 - 1 / (a * a);
  CHECK(k * y0 * y0 - 2 * y0 + 1 == doctest::Approx(0).epsilon(1e-9));
  CHECK(y0 > 0);
  CHECK(y0 < 1);
  CHECK(hyperbola_y(1.0, 0.0) == doctest::Approx(0.5));
  CHECK(hyperbola_y(1.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("inverse region of the square center") {
  const auto sq = testutil::unit_square();
  const Point p{0.5, 0.5};
  const auto params = RobustParams::with_alpha(0.5);
  const auto region = inverse_region(sq, p, params);
  CHECK_FALSE(region.degenerate);
  CHECK(region.contains(p));  // the center self-guards
  CHECK(region.area() > 0);
}

TEST_CASE("inverse region size toward the square corner matches the analytic value") {
  // Along the diagonal the binding constraint is clearance >= alpha*|g-p|:
  // the corner-most guard sits where c = alpha*sqrt(2)*(1/2 - c), giving
  // size = (sqrt(2)/2) / (1 + alpha*sqrt(2)).
  const auto sq = testutil::unit_square();
  const Point p{0.5, 0.5};
  const double alpha = 0.05;
  const auto region = inverse_region(sq, p, RobustParams::with_alpha(alpha));
  const double size = inverse_region_size(region, p);
  CHECK(size ==
        doctest::Approx(std::sqrt(2) / 2 / (1 + alpha * std::sqrt(2))).epsilon(1e-2));
}

TEST_CASE("apex fixture degenerates to the bisector segment") {
  const double alpha = 0.5;
  const auto T = apex_fixture(alpha);
  const Point p = apex_fixture_apex();
  const auto region = inverse_region(T, p, RobustParams::with_alpha(alpha));
  CHECK(region.degenerate);
  REQUIRE_FALSE(region.pieces.empty());
  // Every piece endpoint lies on the bisector x = 0.
  double seg_len = 0;
  for (const auto& piece : region.pieces) {
    const auto* s = std::get_if<SegPiece>(&piece);
    REQUIRE(s != nullptr);
    seg_len = std::max(seg_len, dist(s->a, s->b));
    CHECK(std::abs(s->a.x) < 1e-3 * seg_len + 1e-6);
    CHECK(std::abs(s->b.x) < 1e-3 * seg_len + 1e-6);
  }
  const double size = inverse_region_size(region, p);
  CHECK(size > 0.1);
  CHECK(size == doctest::Approx(seg_len).epsilon(0.05));
}

TEST_CASE("inverse region agrees with the predicate on samples") {
  const auto L = l_shape();
  const Point p{1.5, 0.25};
  const auto params = RobustParams::with_alpha(0.3);
  const auto region = inverse_region(L, p, params);
  const double band = params.arc_tol(L.diameter());
  int checked = 0, agree = 0, far_misses = 0;
  for (const Point& g : testutil::sample_inside(L, 5000, 31)) {
    const bool pred = robustly_guards(L, g, p, params);
    const bool in = region.contains(g);
    ++checked;
    if (pred == in)
      ++agree;
    else if (pred && !in && multipoly_distance(region.approx, g) > 5 * band)
      ++far_misses;
  }
  CHECK(agree >= checked * 995 / 1000);
  CHECK(far_misses == 0);
}

TEST_CASE("region size matches rejection sampling") {
  const auto L = l_shape();
  const Point p{0.5, 1.0};
  const auto params = RobustParams::with_alpha(0.25);
  const auto region = inverse_region(L, p, params);
  const double size = inverse_region_size(region, p);
  double sampled = 0;
  for (const Point& g : testutil::sample_inside(L, 20000, 17))
    if (robustly_guards(L, g, p, params)) sampled = std::max(sampled, dist(g, p));
  CHECK(sampled <= size * 1.02 + 1e-9);
  CHECK(sampled >= size * 0.9);
}

TEST_CASE("guarding asymmetry fixture") {
  // Near a corner the roles of guard and target are not interchangeable.
  const auto L = l_shape();
  const auto params = RobustParams::with_alpha(0.3);
  const Point g{0.5, 0.5};   // deep inside, large clearance
  const Point p{1.9, 0.08};  // close to the boundary
  REQUIRE(robustly_guards(L, g, p, params));
  CHECK_FALSE(robustly_guards(L, p, g, params));
}

TEST_CASE("fat kite construction and half-level guarding") {
  const auto strip = testutil::strip10();
  const Point g{5, 0.5}, p{5.8, 0.5};
  const double alpha = 0.5;
  const auto params = RobustParams::with_alpha(alpha);
  const auto kite = fat_kite(strip, g, p, params);
  const double theta = std::asin(alpha);
  CHECK(kite.apex_angle_at_p == doctest::Approx(theta));
  CHECK(kite.angle_at_g == doctest::Approx(M_PI - 2 * theta));
  // Angle check from the vertices themselves.
  const double at_p = std::acos(dot(normalized(kite.ap - kite.p), normalized(kite.bp - kite.p)));
  CHECK(at_p == doctest::Approx(theta).epsilon(1e-6));

  const auto half = RobustParams::with_alpha(alpha / 2);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    // Random point of the kite via its two triangles.
    double b1 = u01(rng), b2 = u01(rng);
    if (b1 + b2 > 1) {
      b1 = 1 - b1;
      b2 = 1 - b2;
    }
    const Point& third = (i % 2 == 0) ? kite.ap : kite.bp;
    const Point q = kite.g + (kite.p - kite.g) * b1 + (third - kite.g) * b2;
    if (!kite.contains(q)) continue;
    CHECK(robustly_guards(strip, q, p, half));
  }
  CHECK_THROWS_AS(fat_kite(strip, {5, 0.5}, {9.5, 0.5}, params), NotRobustlyGuarded);
}
