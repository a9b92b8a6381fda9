#include <doctest.h>

#include "rg/geometry.hpp"

using namespace rg;

TEST_CASE("orientation sign and degeneracy") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  // Near-degenerate inputs must still give a definite consistent sign.
  const Point a{0, 0}, b{1e8, 1e8};
  const Point above{0.5e8, 0.5e8 + 1e-7};
  CHECK(orientation(a, b, above) == -orientation(b, a, above));
}

TEST_CASE("point-segment distance") {
  CHECK(point_segment_dist({0, 3}, {-4, 0}, {4, 0}) == doctest::Approx(3));
  CHECK(point_segment_dist({8, 3}, {-4, 0}, {4, 0}) == doctest::Approx(5));  // past endpoint
  CHECK(point_segment_dist({1, 1}, {1, 1}, {1, 1}) == doctest::Approx(0));   // point segment
  CHECK(closest_point_on_segment({0, 3}, {-4, 0}, {4, 0}).x == doctest::Approx(0));
}

TEST_CASE("line-circle intersections are sorted parameters") {
  const auto ts = line_circle_intersections({-2, 0}, {1, 0}, {0, 0}, 1);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == doctest::Approx(1));
  CHECK(ts[1] == doctest::Approx(3));
  CHECK(line_circle_intersections({-2, 5}, {1, 0}, {0, 0}, 1).empty());
  const auto tangent = line_circle_intersections({-2, 1}, {1, 0}, {0, 0}, 1);
  for (double t : tangent) CHECK(std::abs(-2 + t) < 1e-6);
}

TEST_CASE("circumscribed circle of a right triangle") {
  const auto c = circumscribed_circle({0, 0}, {4, 0}, {0, 3});
  REQUIRE(c.has_value());
  // Circumcenter of a right triangle is the hypotenuse midpoint.
  CHECK(c->center.x == doctest::Approx(2));
  CHECK(c->center.y == doctest::Approx(1.5));
  CHECK(c->radius == doctest::Approx(2.5));
  CHECK_FALSE(circumscribed_circle({0, 0}, {1, 1}, {2, 2}).has_value());
}

TEST_CASE("point in triangle, both orientations") {
  CHECK(point_in_triangle({0.2, 0.2}, {0, 0}, {1, 0}, {0, 1}));
  CHECK(point_in_triangle({0.2, 0.2}, {0, 0}, {0, 1}, {1, 0}));
  CHECK(point_in_triangle({0.5, 0.5}, {0, 0}, {1, 0}, {0, 1}));  // boundary
  CHECK_FALSE(point_in_triangle({0.6, 0.6}, {0, 0}, {1, 0}, {0, 1}));
  CHECK(point_strictly_in_triangle({0.2, 0.2}, {0, 0}, {1, 0}, {0, 1}, 1e-9));
  CHECK_FALSE(point_strictly_in_triangle({0.5, 0.5}, {0, 0}, {1, 0}, {0, 1}, 1e-9));
}

TEST_CASE("ray-segment intersection returns the nearest hit") {
  auto t = ray_segment_intersection({0, 0}, {1, 0}, {2, -1}, {2, 1});
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(2));
  CHECK_FALSE(ray_segment_intersection({0, 0}, {-1, 0}, {2, -1}, {2, 1}).has_value());
}
