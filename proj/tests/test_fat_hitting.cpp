#include <doctest.h>

#include <random>

#include "rg/fat_hitting.hpp"

using namespace rg;

TEST_CASE("grid parameters and cardinality") {
  const auto hs = hitting_points({0, 0}, 1.0, 0.25);
  CHECK(hs.grid_side == doctest::Approx(0.25 / 6));
  const double bound = std::pow(std::ceil(48 / 0.25 + 1), 2);
  CHECK(hs.points.size() <= static_cast<std::size_t>(bound));
  bool has_origin = false;
  for (const Point& p : hs.points) {
    CHECK(dist(p, {0, 0}) <= 4.0 + 1e-9);
    if (p.x == 0 && p.y == 0) has_origin = true;
  }
  CHECK(has_origin);  // grid anchored at o
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(hitting_points({0, 0}, 1.0, 0.3), FatnessOutOfRange);
  CHECK_THROWS_AS(hitting_points({0, 0}, 1.0, 0.0), FatnessOutOfRange);
  CHECK_THROWS_AS(hitting_points({0, 0}, -1.0, 0.1), FatnessOutOfRange);
}

TEST_CASE("a region containing the query disk contains a grid point") {
  // If D(R, o) itself is inside the region, a full grid cell fits.
  const auto hs = hitting_points({2, 3}, 0.7, 0.2);
  auto in_disk = [&](const Point& p) { return dist(p, {2, 3}) <= 0.7; };
  bool hit = false;
  for (const Point& p : hs.points)
    if (in_disk(p)) hit = true;
  CHECK(hit);
}

TEST_CASE("randomized kite-union regions are hit") {
  // Star-shaped unions of kites with a common vertex, each of size >= R and
  // meeting D(R, o): the construction the grid bound is proved against.
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double R = 1.0;
  const Point o{0, 0};
  for (double gamma : {1.0 / 16, 1.0 / 8, 1.0 / 4}) {
    const auto hs = hitting_points(o, R, gamma);
    for (int trial = 0; trial < 100; ++trial) {
      // Apex near the query disk, kites of half-angle >= gamma opening.
      const Point apex{(u01(rng) * 2 - 1) * R * 0.8, (u01(rng) * 2 - 1) * R * 0.8};
      const int nk = 1 + static_cast<int>(u01(rng) * 3);
      struct Kite {
        double dir, half, len;
      };
      std::vector<Kite> kites;
      for (int k = 0; k < nk; ++k)
        kites.push_back({u01(rng) * 2 * M_PI, std::max(gamma, u01(rng) * 0.6),
                         R * (1.0 + u01(rng) * 2.0)});
      auto member = [&](const Point& q) {
        const Point d = q - apex;
        const double r = norm(d);
        if (r < 1e-12) return true;
        const double ang = std::atan2(d.y, d.x);
        for (const Kite& k : kites) {
          double off = std::remainder(ang - k.dir, 2 * M_PI);
          if (std::abs(off) <= k.half && r <= k.len) return true;
        }
        return false;
      };
      bool hit = false;
      for (const Point& p : hs.points)
        if (member(p)) {
          hit = true;
          break;
        }
      CHECK(hit);
    }
  }
}
