#include "rg/fat_hitting.hpp"

#include <cmath>

namespace rg {

HittingSet hitting_points(const Point& o, double R, double gamma) {
  if (!(R > 0)) throw FatnessOutOfRange();
  if (!(gamma > 0) || gamma > 0.25) throw FatnessOutOfRange();

  HittingSet hs;
  hs.origin = o;
  hs.R = R;
  hs.gamma = gamma;
  hs.grid_side = gamma * R / 6;

  const double reach = 4 * R;
  const long imax = static_cast<long>(std::floor(reach / hs.grid_side));
  const double reach2 = reach * reach;
  hs.points.reserve(static_cast<std::size_t>((2 * imax + 1)) * (2 * imax + 1) * 4 / 5);
  for (long i = -imax; i <= imax; ++i) {
    const double x = i * hs.grid_side;
    for (long j = -imax; j <= imax; ++j) {
      const double y = j * hs.grid_side;
      if (x * x + y * y <= reach2) hs.points.push_back({o.x + x, o.y + y});
    }
  }
  return hs;
}

}  // namespace rg
