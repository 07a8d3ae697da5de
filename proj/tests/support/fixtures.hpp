#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "puregaps/generating_set.hpp"
#include "puregaps/lattice.hpp"

namespace puregaps::testing {

// GK q=2 generating set, pi = 9.
inline const std::vector<LatticePoint> kGkQ2Gamma = {{1, 19}, {2, 11}, {3, 3},  {4, 13}, {5, 5},
                                                     {7, 7},  {10, 10}, {11, 2}, {13, 4}, {19, 1}};

// The q=2 pure gap listing, sorted.
inline const PointSet kGkQ2PureGaps = {
    {1, 1},  {1, 2},  {1, 3}, {1, 4}, {1, 5},  {1, 7},  {1, 10}, {1, 11}, {1, 13}, {2, 1},  {2, 2},  {2, 3},
    {2, 4},  {2, 5},  {2, 7}, {2, 10}, {3, 1}, {3, 2},  {4, 1},  {4, 2},  {4, 4},  {4, 5},  {4, 7},  {4, 10},
    {5, 1},  {5, 2},  {5, 4}, {7, 1}, {7, 2},  {7, 4},  {10, 1}, {10, 2}, {10, 4}, {11, 1}, {13, 1}};

inline const PointSet kGkQ2G1k0 = {{1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {2, 4}, {4, 1}, {4, 2}, {4, 4}};
inline const PointSet kGkQ2G3k0 = {{3, 1}, {3, 2}, {5, 1}, {5, 2}, {5, 4}, {7, 1}, {7, 2}, {7, 4}};
inline const PointSet kGkQ2G4k0 = {{1, 3}, {1, 5}, {1, 7}, {2, 3}, {2, 5}, {2, 7}, {4, 5}, {4, 7}};
inline const PointSet kGkQ2G1k1 = {{10, 1}};
inline const PointSet kGkQ2G3k1 = {{11, 1}, {13, 1}};
inline const PointSet kGkQ2G4k1 = {{10, 2}, {10, 4}};

enum class GammaShape { Any, Diagonal, SwapSymmetric };

struct RandomGamma {
  std::vector<LatticePoint> points;
  std::int64_t period = 1;
};

// Random set with the box structure: row-zero points (k·pi + x, y) with
// pairwise distinct residues x and y, spread into Gamma_{k-j,j} by w_j.
// Rejection-sampled until it validates.
inline RandomGamma random_gamma(std::mt19937_64& rng, GammaShape shape, std::int64_t max_period = 12) {
  auto pick = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  for (;;) {
    const std::int64_t pi = pick(2, max_period);
    std::vector<std::int64_t> xs(static_cast<std::size_t>(pi - 1));
    std::iota(xs.begin(), xs.end(), 1);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::vector<std::int64_t> ys = xs;
    std::shuffle(ys.begin(), ys.end(), rng);
    const auto n = static_cast<std::size_t>(pick(0, pi - 1));

    // row index per residue slot; low rows are favoured so the genus bound holds
    std::vector<std::pair<std::int64_t, LatticePoint>> row_points;
    const std::int64_t top = pick(0, 3);
    if (shape == GammaShape::SwapSymmetric) {
      // (x, y) and (y, x) share a row; both residue lists come from xs.
      std::vector<bool> used(static_cast<std::size_t>(pi), false);
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t x = xs[i];
        if (used[static_cast<std::size_t>(x)]) continue;
        std::int64_t y = x;
        if (pick(0, 1) == 1) {
          const std::int64_t cand = pick(1, pi - 1);
          if (!used[static_cast<std::size_t>(cand)]) y = cand;
        }
        used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = true;
        const std::int64_t k = pick(0, top);
        row_points.push_back({k, {x, y}});
        if (y != x) row_points.push_back({k, {y, x}});
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t y = shape == GammaShape::Diagonal ? xs[i] : ys[i];
        row_points.push_back({pick(0, top), {xs[i], y}});
      }
    }

    RandomGamma out;
    out.period = pi;
    for (const auto& [k, r] : row_points) {
      for (std::int64_t j = 0; j <= k; ++j) out.points.push_back({(k - j) * pi + r.a, j * pi + r.b});
    }
    std::shuffle(out.points.begin(), out.points.end(), rng);
    try {
      (void)validate_generating_set(out.points, pi);
      return out;
    } catch (const ValidationError&) {
    }
  }
}

inline GeneratingSet validated(const RandomGamma& g) { return validate_generating_set(g.points, g.period); }

}  // namespace puregaps::testing
