#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "puregaps/generating_set.hpp"
#include "puregaps/lattice.hpp"

// Brute-force reference computations straight from the glb/lub
// characterizations. Shares nothing with gap_engine beyond lattice.hpp.
namespace puregaps::oracle {

struct GapProjections {
  std::vector<std::int64_t> gaps1;  // G(P1), sorted
  std::vector<std::int64_t> gaps2;  // G(P2), sorted
};

GapProjections gap_projections(const GeneratingSet& gamma);

/// H(P1, P2) ∩ [0, bound]^2.
class SemigroupBox {
 public:
  SemigroupBox(std::int64_t bound, std::vector<bool> grid);

  std::int64_t bound() const noexcept { return bound_; }
  bool contains(const LatticePoint& p) const;
  /// Members in lexicographic order.
  PointSet members() const;
  std::size_t size() const noexcept { return count_; }

 private:
  std::int64_t bound_;
  std::vector<bool> grid_;
  std::size_t count_;
};

/// All lubs of pairs from Gamma ∪ (H(P1) × {0}) ∪ ({0} × H(P2)) inside the
/// box. H(Pi) ∩ [0, bound] is taken as the complement of the gap projection.
SemigroupBox semigroup_box(const GeneratingSet& gamma, std::int64_t bound);

/// G0(P1, P2) = {glb(x, y) : x, y in Gamma incomparable}; naive pair scan.
PointSet pure_gaps_direct(const GeneratingSet& gamma);

struct PeriodViolation {
  LatticePoint point;
  std::int64_t k = 0;
  std::string reason;
};

struct PeriodReport {
  std::vector<PeriodViolation> violations;
  std::size_t checks = 0;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks beta + k·pi ∈ G(P1) ⟺ k·pi < tau(beta), and the displacement
/// tau(beta + k·pi) = tau(beta) - k·pi, for every beta and every k up to the
/// largest gap. Accepts unvalidated points so tampered sets can be examined.
PeriodReport check_period_property(std::span<const LatticePoint> points, std::int64_t period);
PeriodReport check_period_property(const GeneratingSet& gamma);

}  // namespace puregaps::oracle
