#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "puregaps/generating_set.hpp"
#include "puregaps/lattice.hpp"
#include "puregaps/wide_int.hpp"

namespace puregaps {

/// Gamma split into the row-zero boxes Gamma_{k,0}; every other box
/// Gamma_{i,j} is Gamma_{i+j,0} + w_j.
struct BoxedGamma {
  /// rows[k] = Gamma_{k,0}, sorted; size() == kmax.
  std::vector<std::vector<LatticePoint>> rows;
  std::int64_t period = 1;
  std::int64_t genus = 0;
  /// ceil((2g-1)/pi); every box with k1+k2 >= kmax is empty.
  std::int64_t kmax = 0;
  /// beta ≡ tau(beta) (mod pi) for every point of Gamma.
  bool diagonal = true;

  std::span<const LatticePoint> row(std::int64_t k) const {
    if (k < 0 || k >= kmax) return {};
    return rows[static_cast<std::size_t>(k)];
  }
  std::int64_t row_size(std::int64_t k) const { return static_cast<std::int64_t>(row(k).size()); }
  std::vector<std::int64_t> row_sizes() const;
  /// Sum of |Gamma_{k1,0}| over k1 > k.
  std::int64_t rows_above(std::int64_t k) const;
};

/// G^1..G^4 for one box index k; pairwise disjoint, each sorted.
struct BoxComponents {
  PointSet g1, g2, g3, g4;

  /// G_{k,0} as a sorted set. Throws DisjointnessViolation if components overlap.
  PointSet merged() const;
  std::size_t size() const { return g1.size() + g2.size() + g3.size() + g4.size(); }
};

struct BoundValues {
  WideInt lower = 0;
  WideInt upper = 0;
  WideInt homma_kim = 0;
};

struct PureGapResult {
  PointSet g0;
  /// per_box[k] for 0 <= k < kmax.
  std::vector<BoxComponents> per_box;
  WideInt cardinality = 0;
  BoundValues bounds;
};

struct EngineOptions {
  /// Compute G^4 both through the general formula and through the diagonal
  /// reflection (when applicable) and compare them.
  bool verify = false;
  /// Worker count for the per-k loops; results are identical for any value.
  unsigned threads = 1;
};

BoxedGamma decompose(const GeneratingSet& gamma);

/// Gamma_{i,j} = Gamma_{i+j,0} + w_j.
std::vector<LatticePoint> reconstruct_box(const BoxedGamma& boxed, std::int64_t i, std::int64_t j);

/// {glb(u + w_{k2-k}, v) : u in Gamma_{k2,0}, v in Gamma_{k1,0}, k < k1, k < k2}.
/// Checked against the count (sum_{k<k1} |Gamma_{k1,0}|)^2.
PointSet compute_g1(const BoxedGamma& boxed, std::int64_t k);
/// glb over incomparable pairs inside Gamma_{k,0}.
PointSet compute_g2(const BoxedGamma& boxed, std::int64_t k);
/// {glb(u, v) : u in Gamma_{k,0}, v in Gamma_{k1,0}, u not ⪯ v, k < k1}.
PointSet compute_g3(const BoxedGamma& boxed, std::int64_t k);
/// General formula for G^4_{k,0}.
PointSet compute_g4_general(const BoxedGamma& boxed, std::int64_t k);
/// Swap coordinates of G^3_{k,0} and subtract w_k. Equals G^4_{k,0} when
/// Gamma is diagonal.
PointSet reflect_g3(const PointSet& g3, std::int64_t k, std::int64_t period);
/// G^4 via the reflection fast path when the diagonal predicate holds,
/// otherwise the general formula. In verify mode both paths run and must agree.
PointSet compute_g4(const BoxedGamma& boxed, std::int64_t k, const EngineOptions& options = {});

BoxComponents compute_components(const BoxedGamma& boxed, std::int64_t k, const EngineOptions& options = {});

/// Union over 0 <= j <= k < per_box.size() of G_{k,0} + w_j. Checks that the
/// translates are pairwise disjoint and that |G0| = sum (k+1)|G_{k,0}|.
PointSet assemble_translates(std::span<const BoxComponents> per_box, std::int64_t period, WideInt& cardinality);

PureGapResult assemble_pure_gaps(const BoxedGamma& boxed, const EngineOptions& options = {});

/// lower = sum (k+1)(sum_{k<k1} n_{k1})^2,
/// upper = sum (k+1)(sum_{k<=k1} n_{k1})^2 - g, homma_kim = g(g-1)/2,
/// where n_k = |Gamma_{k,0}|.
BoundValues bounds_from_row_sizes(std::span<const std::int64_t> row_sizes, std::int64_t genus);
BoundValues bounds(const BoxedGamma& boxed);

}  // namespace puregaps
