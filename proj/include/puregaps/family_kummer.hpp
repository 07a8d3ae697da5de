#pragma once

#include <cstdint>
#include <vector>

#include "puregaps/gap_engine.hpp"
#include "puregaps/generating_set.hpp"
#include "puregaps/lattice.hpp"
#include "puregaps/wide_int.hpp"

// Closed forms for Kummer extensions y^m = f(x)^lambda, deg f = r, at two
// totally ramified places other than P_inf. The gap structure depends only on
// (m, r); callers are responsible for a curve with p ∤ m and gcd(m, lambda·r) = 1
// existing.
namespace puregaps::kummer {

class KummerParams {
 public:
  /// Throws ParameterError(InvalidParams) unless m, r >= 2 and gcd(m, r) = 1.
  KummerParams(std::int64_t m, std::int64_t r);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t r() const noexcept { return r_; }
  /// (m-1)(r-1)/2
  std::int64_t genus() const noexcept { return (m_ - 1) * (r_ - 1) / 2; }
  std::int64_t period() const noexcept { return m_; }
  /// r - 2 - floor(r/m): the last index with Gamma_{k,0} nonempty.
  std::int64_t last_row() const noexcept { return r_ - 2 - r_ / m_; }

 private:
  std::int64_t m_;
  std::int64_t r_;
};

/// {(m k1 + j, m k2 + j) : 1 <= j <= m-1-floor(m/r), k1 + k2 = r-2-floor(rj/m)}.
GeneratingSet kummer_generating_set(std::int64_t m, std::int64_t r);

/// {(mk + j, j) : max{1, m - floor(m(k+2)/r)} <= j <= m-1-floor(m(k+1)/r)}.
std::vector<LatticePoint> kummer_gamma_k0(std::int64_t m, std::int64_t r, std::int64_t k);

/// Count from the explicit endpoints, cross-checked against
/// ceil(m(k+2)/r) - ceil(m(k+1)/r).
std::int64_t kummer_card_gamma_k0(std::int64_t m, std::int64_t r, std::int64_t k);

PointSet kummer_g1(std::int64_t m, std::int64_t r, std::int64_t k);
PointSet kummer_g2(std::int64_t m, std::int64_t r, std::int64_t k);
PointSet kummer_g3(std::int64_t m, std::int64_t r, std::int64_t k);
PointSet kummer_g4(std::int64_t m, std::int64_t r, std::int64_t k);

BoxComponents kummer_components(std::int64_t m, std::int64_t r, std::int64_t k);

/// Explicit components against the generic engine; throws GenericMismatch.
void kummer_verify_components(std::int64_t m, std::int64_t r, const EngineOptions& options = {});

/// Assembled from the explicit components; throws ClosedFormMismatch if the
/// size disagrees with kummer_card_g0.
PureGapResult kummer_pure_gaps(std::int64_t m, std::int64_t r, const EngineOptions& options = {});

/// sum_{k=1}^{r-2-floor(r/m)} k[(m - ceil(mk/r))^2 - (ceil(m(k+1)/r) - ceil(mk/r))^2]
WideInt kummer_card_g0(std::int64_t m, std::int64_t r);

/// u^2 (r-1)(r-2) r (r+3) / 12 for m = ur + 1; checked against kummer_card_g0.
WideInt kummer_card_special_ur1(std::int64_t u, std::int64_t r);

/// (q+1)(m-1)/12 ((q+1)(m-1) - 2m + N + 7) - q(m-1) for m = (q+1)/N, r = q;
/// checked against kummer_card_g0.
WideInt kummer_card_special_qN(std::int64_t q, std::int64_t N);

}  // namespace puregaps::kummer
