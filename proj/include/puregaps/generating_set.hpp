#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "puregaps/lattice.hpp"

namespace puregaps {

enum class ValidationErrorKind {
  NonPositivePeriod,
  DuplicateFirstCoordinate,
  DuplicateSecondCoordinate,
  ZeroOrNegativeCoordinate,
  CoordinateDivisibleByPeriod,
  CoordinateExceedsGenusBound,
  PeriodPropertyViolation,
};

std::string_view to_string(ValidationErrorKind kind);

/// Rejection of a candidate generating set. `index` is the position of the
/// offending point in the caller's input sequence; `k` is set only for
/// PeriodPropertyViolation.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationErrorKind kind, LatticePoint point, std::size_t index, std::int64_t k,
                  const std::string& detail);

  ValidationErrorKind kind() const noexcept { return kind_; }
  const LatticePoint& point() const noexcept { return point_; }
  std::size_t index() const noexcept { return index_; }
  std::int64_t k() const noexcept { return k_; }

 private:
  ValidationErrorKind kind_;
  LatticePoint point_;
  std::size_t index_;
  std::int64_t k_;
};

/// Gamma(P1, P2): the graph {(beta, tau(beta))} of the bijection between the
/// gap sets at P1 and P2, together with the period of H(P1, P2).
/// Only obtainable through validate_generating_set.
class GeneratingSet {
 public:
  /// Points sorted by first coordinate (hence lexicographically).
  std::span<const LatticePoint> points() const noexcept { return points_; }
  std::int64_t period() const noexcept { return period_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(points_.size()); }

  /// tau(beta), or nullopt if beta is not a gap at P1.
  std::optional<std::int64_t> tau(std::int64_t beta) const;

  /// beta ≡ tau(beta) (mod period) for every point.
  bool is_diagonal() const noexcept;

  /// Gamma is invariant under (a, b) -> (b, a).
  bool is_swap_symmetric() const;

 private:
  friend GeneratingSet validate_generating_set(std::span<const LatticePoint>, std::int64_t);
  GeneratingSet(std::vector<LatticePoint> points, std::int64_t period)
      : points_(std::move(points)), period_(period) {}

  std::vector<LatticePoint> points_;
  std::int64_t period_;
};

/// Checks every GeneratingSet invariant, including the full period property:
/// beta + k·pi is a first coordinate iff k·pi < tau(beta), and then
/// tau(beta + k·pi) = tau(beta) - k·pi. Throws ValidationError.
GeneratingSet validate_generating_set(std::span<const LatticePoint> points, std::int64_t period);

}  // namespace puregaps
