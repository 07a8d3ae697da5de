#pragma once

#include <cstdint>
#include <vector>

#include "puregaps/gap_engine.hpp"
#include "puregaps/generating_set.hpp"
#include "puregaps/lattice.hpp"
#include "puregaps/wide_int.hpp"

// Closed forms for the GK function field at the place pair (P0, P_inf).
namespace puregaps::gk {

/// Only the integer q matters to the combinatorics; prime_power() reports
/// whether an actual curve exists for it.
class GKParams {
 public:
  /// Throws ParameterError(InvalidParams) for q < 2.
  explicit GKParams(std::int64_t q);

  std::int64_t q() const noexcept { return q_; }
  /// (q^3+1)(q^2-2)/2 + 1
  std::int64_t genus() const noexcept { return genus_; }
  /// q^3 + 1
  std::int64_t period() const noexcept { return period_; }
  /// Gamma_{k,0} is nonempty exactly for 0 <= k <= q^2 - 2.
  std::int64_t last_row() const noexcept { return q_ * q_ - 2; }
  bool prime_power() const noexcept;

 private:
  std::int64_t q_;
  std::int64_t genus_;
  std::int64_t period_;
};

/// gamma_{i,j,k} over the unified index ranges
/// 1 <= k <= q^2-1, max{0, k-q^2+q+1} <= i <= q, max{0, k-i+1} <= j <= q^2-q.
/// Throws ParameterError(IndexOutOfRange) outside them.
LatticePoint gk_gamma_point(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t q);

GeneratingSet gk_generating_set(std::int64_t q);

/// Gamma_{k,0} = {gamma_{i, k-i+2, k+1} : max{0, k-q^2+q+2} <= i <= min{q, k+2}}.
std::vector<LatticePoint> gk_gamma_k0(std::int64_t q, std::int64_t k);

/// |Gamma_{k,0}| from the explicit endpoints, cross-checked against every
/// applicable branch of the three-branch piecewise formula.
std::int64_t gk_card_gamma_k0(std::int64_t q, std::int64_t k);

/// Values of the piecewise branches whose range contains k (0, 1 or 2 values;
/// the ranges overlap at q = 2).
std::vector<std::int64_t> gk_card_gamma_k0_piecewise(std::int64_t q, std::int64_t k);

PointSet gk_g1(std::int64_t q, std::int64_t k);
PointSet gk_g2(std::int64_t q, std::int64_t k);
PointSet gk_g3(std::int64_t q, std::int64_t k);
PointSet gk_g4(std::int64_t q, std::int64_t k);

BoxComponents gk_components(std::int64_t q, std::int64_t k);

/// Compares the explicit components with the generic engine on
/// gk_generating_set(q) for every k; throws ConsistencyError(GenericMismatch).
void gk_verify_components(std::int64_t q, const EngineOptions& options = {});

/// Assembled from the explicit components; throws ClosedFormMismatch if the
/// size disagrees with gk_card_g0.
PureGapResult gk_pure_gaps(std::int64_t q, const EngineOptions& options = {});

/// q(q-1)(10q^8+10q^7-25q^6-9q^5+71q^4-111q^3-86q^2+128q-12)/120
WideInt gk_card_g0(std::int64_t q);

/// (10q^10-15q^8-4q^7+20q^6-56q^5-35q^4+124q^3-40q^2-4q)/120
WideInt gk_upper_bound(std::int64_t q);

}  // namespace puregaps::gk
