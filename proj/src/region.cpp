#include "rg/region.hpp"

#include <algorithm>
#include <cmath>

namespace rg {

double hyperbola_y(double alpha, double x) {
  const double k = 1.0 - 1.0 / (alpha * alpha);
  if (std::abs(k) < 1e-15) return (1 + x * x) / 2;  // alpha = 1: parabola
  const double disc = 1.0 - k * (1.0 + x * x);
  if (disc < 0) return std::numeric_limits<double>::quiet_NaN();
  return (1.0 - std::sqrt(disc)) / k;
}

Point hyperbola_point(const HyperbolaPiece& h, double x) {
  const Point u{std::cos(h.angle), std::sin(h.angle)};
  const double y = hyperbola_y(h.alpha, x);
  return h.origin + (u * x + perp(u) * y) * h.scale;
}

bool Region::contains(const Point& q) const {
  if (membership) return membership(q);
  return multipoly_contains(approx, q, tol);
}

namespace {

bool angle_in_arc(double ang, double from, double to) {
  for (int k = -1; k <= 1; ++k) {
    const double a = ang + 2 * M_PI * k;
    if (a >= from - 1e-12 && a <= to + 1e-12) return true;
  }
  return false;
}

struct FarthestFrom {
  Point p;
  double operator()(const SegPiece& s) const { return std::max(dist(p, s.a), dist(p, s.b)); }
  double operator()(const ArcPiece& a) const {
    double best = std::max(
        dist(p, a.center + Point{a.radius * std::cos(a.from), a.radius * std::sin(a.from)}),
        dist(p, a.center + Point{a.radius * std::cos(a.to), a.radius * std::sin(a.to)}));
    const Point away = a.center - p;
    if (norm(away) > 0) {
      const double ang = std::atan2(away.y, away.x);
      if (angle_in_arc(ang, a.from, a.to)) best = std::max(best, norm(away) + a.radius);
    } else {
      best = std::max(best, a.radius);
    }
    return best;
  }
  double operator()(const HyperbolaPiece& h) const {
    double best = 0;
    constexpr int kSamples = 64;
    for (int i = 0; i <= kSamples; ++i) {
      const double x = h.x_lo + (h.x_hi - h.x_lo) * i / kSamples;
      best = std::max(best, dist(p, hyperbola_point(h, x)));
    }
    return best;
  }
};

}  // namespace

double Region::size_from(const Point& p) const {
  double best = 0;
  for (const RegionPiece& piece : pieces)
    best = std::max(best, std::visit(FarthestFrom{p}, piece));
  return best;
}

}  // namespace rg
