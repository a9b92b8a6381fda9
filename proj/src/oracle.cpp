#include "rg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

#include "rg/robust_vis.hpp"
#include "rg/visibility.hpp"

namespace rg {

std::vector<Point> random_points_in(const PolygonWithHoles& P, std::size_t count,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const BBox b = P.bbox();
  std::uniform_real_distribution<double> ux(b.xmin, b.xmax), uy(b.ymin, b.ymax);
  std::vector<Point> out;
  out.reserve(count);
  std::size_t attempts = 0;
  const std::size_t max_attempts = count * 1000 + 100000;
  while (out.size() < count && attempts++ < max_attempts) {
    const Point q{ux(rng), uy(rng)};
    if (P.contains(q)) out.push_back(q);
  }
  return out;
}

CoverageReport verify_coverage(const PolygonWithHoles& P, const std::vector<Point>& guards,
                               double level, int density, std::uint64_t seed, bool parallel) {
  CoverageReport rep;
  rep.level = level;
  rep.seed = seed;

  std::vector<Point> samples;
  const BBox b = P.bbox();
  for (int i = 0; i < density; ++i)
    for (int j = 0; j < density; ++j) {
      const Point q{b.xmin + (i + 0.5) * b.width() / density,
                    b.ymin + (j + 0.5) * b.height() / density};
      if (P.contains(q)) samples.push_back(q);
    }
  for (const Point& v : P.all_vertices()) samples.push_back(v);
  for (const Point& q : random_points_in(P, 1000, seed)) samples.push_back(q);

  const RobustParams lvl = RobustParams::with_alpha(level);
  std::vector<char> hit(samples.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    for (const Point& g : guards) {
      bool ok = false;
      try {
        ok = robustly_guards(P, g, samples[i], lvl);
      } catch (const PointOutsideDomain&) {
        ok = false;
      }
      if (ok) {
        hit[i] = 1;
        break;
      }
    }
  }

  rep.samples = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (hit[i]) {
      ++rep.covered;
      continue;
    }
    UncoveredSample u;
    u.p = samples[i];
    u.reason = "no guard passes the robust-guarding predicate at this level";
    double bd = std::numeric_limits<double>::infinity();
    for (const Point& g : guards)
      if (dist(g, samples[i]) < bd) {
        bd = dist(g, samples[i]);
        u.nearest_guard = g;
      }
    rep.uncovered.push_back(std::move(u));
  }
  return rep;
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_covers_all(const Mask& m, std::size_t nbits) {
  for (std::size_t w = 0; w < m.size(); ++w) {
    std::uint64_t want = ~0ull;
    if (w == m.size() - 1 && nbits % 64) want = (1ull << (nbits % 64)) - 1;
    if ((m[w] & want) != want) return false;
  }
  return true;
}

int first_uncovered(const Mask& m, std::size_t nbits) {
  for (std::size_t w = 0; w < m.size(); ++w) {
    std::uint64_t want = ~0ull;
    if (w == m.size() - 1 && nbits % 64) want = (1ull << (nbits % 64)) - 1;
    const std::uint64_t missing = want & ~m[w];
    if (missing) return static_cast<int>(w * 64 + __builtin_ctzll(missing));
  }
  return -1;
}

// Depth-limited cover search branching on candidates that cover the first
// uncovered target.
bool cover_search(const std::vector<Mask>& cover, std::size_t nbits, const Mask& acc, int depth) {
  const int t = first_uncovered(acc, nbits);
  if (t < 0) return true;
  if (depth == 0) return false;
  for (std::size_t c = 0; c < cover.size(); ++c) {
    if (!(cover[c][t / 64] >> (t % 64) & 1)) continue;
    Mask next = acc;
    for (std::size_t w = 0; w < next.size(); ++w) next[w] |= cover[c][w];
    if (cover_search(cover, nbits, next, depth - 1)) return true;
  }
  return false;
}

}  // namespace

int exact_opt_small(const PolygonWithHoles& P, const std::vector<Point>& targets,
                    const std::vector<Point>& candidates, const RobustParams& params) {
  if (candidates.size() > 40) throw GeomError("exact_opt_small: too many candidates");
  if (targets.size() > 10000) throw GeomError("exact_opt_small: too many targets");
  const std::size_t nbits = targets.size();
  const std::size_t words = (nbits + 63) / 64;

  std::vector<Mask> cover(candidates.size(), Mask(words, 0));
  Mask all(words, 0);
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t t = 0; t < nbits; ++t)
      if (robustly_guards(P, candidates[c], targets[t], params)) {
        cover[c][t / 64] |= 1ull << (t % 64);
        all[t / 64] |= 1ull << (t % 64);
      }
  if (!mask_covers_all(all, nbits)) throw Infeasible();

  Mask empty(words, 0);
  for (int k = 1; k <= static_cast<int>(candidates.size()); ++k)
    if (cover_search(cover, nbits, empty, k)) return k;
  throw Infeasible();  // unreachable: the full set covers
}

AreaEstimate visible_area_fraction(const PolygonWithHoles& P, const Point& g, const Point& p,
                                   double alpha, std::size_t samples, std::uint64_t seed,
                                   bool parallel) {
  const double d = dist(p, g);
  if (d == 0) throw DegenerateDisk();
  if (!P.contains(p)) throw PointOutsideDomain("visible_area_fraction: p outside P");
  const double r = alpha * d;

  constexpr std::size_t kChunks = 64;
  const std::size_t per_chunk = (samples + kChunks - 1) / kChunks;
  std::vector<std::size_t> counts(kChunks, 0), totals(kChunks, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(kChunks); ++c) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (c + 1));
    std::uniform_real_distribution<double> uu(0.0, 1.0), ua(0.0, 2 * M_PI);
    const std::size_t want =
        std::min(per_chunk, samples - std::min(samples, c * per_chunk));
    for (std::size_t i = 0; i < want; ++i) {
      const double rr = r * std::sqrt(uu(rng));
      const double aa = ua(rng);
      const Point q = g + Point{rr * std::cos(aa), rr * std::sin(aa)};
      ++totals[c];
      if (P.contains(q) && segment_in_polygon(P, p, q)) ++counts[c];
    }
  }
  std::size_t vis = 0, tot = 0;
  for (std::size_t c = 0; c < kChunks; ++c) {
    vis += counts[c];
    tot += totals[c];
  }
  AreaEstimate est;
  est.samples = tot;
  est.seed = seed;
  est.value = tot ? static_cast<double>(vis) / tot : 0.0;
  est.half_width = tot ? 1.96 * std::sqrt(est.value * (1 - est.value) / tot) : 0.0;
  return est;
}

AreaEstimate fatness_estimate(const std::function<bool(const Point&)>& membership,
                              const Point& center, double size, std::size_t samples,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  // Region sample pool by rejection around the center.
  std::vector<Point> pool;
  const std::size_t budget = std::max<std::size_t>(samples, 20000);
  for (std::size_t i = 0; i < budget && pool.size() < 2000; ++i) {
    const Point q = center + Point{u(rng) * size, u(rng) * size};
    if (membership(q)) pool.push_back(q);
  }
  AreaEstimate est;
  est.seed = seed;
  est.value = 1.0;
  if (pool.empty()) {
    est.value = 0.0;
    return est;
  }

  constexpr int kGrid = 64;  // flood-fill resolution r/64
  std::vector<Point> centers;
  const std::size_t step = std::max<std::size_t>(1, pool.size() / 8);
  for (std::size_t i = 0; i < pool.size(); i += step) centers.push_back(pool[i]);

  for (const Point& p : centers) {
    for (int ri = 0; ri < 8; ++ri) {
      const double r = size * std::pow(2.0, -4.0 + ri * 5.0 / 7.0);  // size/16 .. 2*size
      // Only disks that do not contain the whole region count.
      bool contains_region = true;
      for (const Point& q : pool)
        if (dist(q, p) > r) {
          contains_region = false;
          break;
        }
      if (contains_region) continue;

      const double cell = r / kGrid;
      const int n = 2 * kGrid + 1;
      std::vector<char> in(n * n, 0), seen(n * n, 0);
      auto idx = [n](int i, int j) { return i * n + j; };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Point q{p.x + (i - kGrid) * cell, p.y + (j - kGrid) * cell};
          if (dist(q, p) <= r && membership(q)) in[idx(i, j)] = 1;
        }
      std::queue<std::pair<int, int>> bfs;
      if (!in[idx(kGrid, kGrid)]) continue;  // p on a membership knife-edge
      bfs.push({kGrid, kGrid});
      seen[idx(kGrid, kGrid)] = 1;
      std::size_t cells = 0;
      while (!bfs.empty()) {
        auto [i, j] = bfs.front();
        bfs.pop();
        ++cells;
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int ii = i + di[k], jj = j + dj[k];
          if (ii < 0 || jj < 0 || ii >= n || jj >= n) continue;
          if (seen[idx(ii, jj)] || !in[idx(ii, jj)]) continue;
          seen[idx(ii, jj)] = 1;
          bfs.push({ii, jj});
        }
      }
      const double frac = cells * cell * cell / (M_PI * r * r);
      est.value = std::min(est.value, frac);
      est.samples += cells;
    }
  }
  est.half_width = 1.96 * std::sqrt(est.value * (1 - est.value) /
                                    std::max<std::size_t>(est.samples, 1));
  return est;
}

}  // namespace rg
