// Compares the serial reference kernels against their OpenMP variants on a
// few fixtures and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "rg/instances.hpp"
#include "rg/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return ms_since(t0);
}

void bench_coverage(const std::string& name, const rg::PolygonWithHoles& P,
                    const std::vector<rg::Point>& guards, double level, int density) {
  rg::CoverageReport serial, parallel;
  const double ts = timed([&] { serial = rg::verify_coverage(P, guards, level, density,
                                                             20240817, false); });
  const double tp = timed([&] { parallel = rg::verify_coverage(P, guards, level, density,
                                                               20240817, true); });
  const bool same = serial.samples == parallel.samples && serial.covered == parallel.covered;
  std::printf("coverage  %-10s density=%-4d serial=%8.1fms  omp=%8.1fms  speedup=%4.2fx  %s\n",
              name.c_str(), density, ts, tp, ts / tp, same ? "identical" : "MISMATCH");
}

void bench_area(const std::string& name, const rg::PolygonWithHoles& P, const rg::Point& g,
                const rg::Point& p, double alpha, std::size_t samples) {
  rg::AreaEstimate serial, parallel;
  const double ts = timed([&] { serial = rg::visible_area_fraction(P, g, p, alpha, samples,
                                                                   20240817, false); });
  const double tp = timed([&] { parallel = rg::visible_area_fraction(P, g, p, alpha, samples,
                                                                     20240817, true); });
  const bool same = serial.value == parallel.value && serial.samples == parallel.samples;
  std::printf("mc-area   %-10s samples=%-7zu serial=%8.1fms  omp=%8.1fms  speedup=%4.2fx  %s\n",
              name.c_str(), samples, ts, tp, ts / tp, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  const rg::PolygonWithHoles square = rg::corridor(1, 1);
  const rg::PolygonWithHoles corridor = rg::corridor(20, 1);
  const rg::PolygonWithHoles lshape = rg::l_shape();
  const rg::PolygonWithHoles blob = rg::random_polygon(24, 2, 7);

  bench_coverage("square", square, {{0.5, 0.5}}, 0.125, 200);
  bench_coverage("corridor", corridor, {{2, 0.5}, {6, 0.5}, {10, 0.5}, {14, 0.5}, {18, 0.5}},
                 0.0625, 200);
  bench_coverage("lshape", lshape, {{0.5, 0.5}, {1.5, 0.5}, {0.5, 1.5}}, 0.0625, 200);
  bench_coverage("random24", blob, {{0, 0}, {2, 2}, {-2, -2}, {2, -2}, {-2, 2}}, 0.03125, 120);

  bench_area("square", square, {0.5, 0.5}, {0.9, 0.9}, 0.5, 2000000);
  bench_area("lshape", lshape, {0.5, 0.5}, {1.9, 0.5}, 0.25, 2000000);
  bench_area("random24", blob, {0, 0}, {1.5, 1.5}, 0.25, 1000000);
  return 0;
}
