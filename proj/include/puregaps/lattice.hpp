#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "puregaps/wide_int.hpp"

namespace puregaps {

/// A pair (a, b) of nonnegative pole orders at (P1, P2). Ordered
/// lexicographically for storage; the product order is `precedes`.
struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr LatticePoint() = default;
  constexpr LatticePoint(std::int64_t first, std::int64_t second) : a(first), b(second) {
    if (first < 0 || second < 0) throw std::invalid_argument("LatticePoint coordinates must be nonnegative");
  }

  constexpr LatticePoint swapped() const { return {b, a}; }

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

/// Sorted, duplicate-free collection of points.
using PointSet = std::vector<LatticePoint>;

/// p ⪯ q in the product order.
constexpr bool precedes(const LatticePoint& p, const LatticePoint& q) { return p.a <= q.a && p.b <= q.b; }

constexpr LatticePoint lub(const LatticePoint& p, const LatticePoint& q) {
  return {std::max(p.a, q.a), std::max(p.b, q.b)};
}

constexpr LatticePoint glb(const LatticePoint& p, const LatticePoint& q) {
  return {std::min(p.a, q.a), std::min(p.b, q.b)};
}

/// Neither point dominates the other.
constexpr bool incomparable(const LatticePoint& p, const LatticePoint& q) {
  return (p.a > q.a && p.b < q.b) || (p.a < q.a && p.b > q.b);
}

/// w_j = (-j·period, j·period). Negative j translates the other way.
struct TranslationVector {
  std::int64_t j = 0;
  std::int64_t period = 1;

  constexpr TranslationVector operator-() const { return {-j, period}; }
};

/// Throws OverflowError on 64-bit overflow and std::invalid_argument if the
/// result leaves the nonnegative quadrant.
inline LatticePoint operator+(const LatticePoint& p, const TranslationVector& w) {
  const std::int64_t shift = checked_mul(w.j, w.period);
  return {checked_sub(p.a, shift), checked_add(p.b, shift)};
}

inline LatticePoint operator-(const LatticePoint& p, const TranslationVector& w) { return p + (-w); }

/// Sorts and removes duplicates.
inline void normalize(PointSet& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

inline PointSet swapped(const PointSet& points) {
  PointSet out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.swapped());
  normalize(out);
  return out;
}

}  // namespace puregaps
