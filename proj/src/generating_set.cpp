#include "puregaps/generating_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace puregaps {

std::string_view to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::NonPositivePeriod: return "NonPositivePeriod";
    case ValidationErrorKind::DuplicateFirstCoordinate: return "DuplicateFirstCoordinate";
    case ValidationErrorKind::DuplicateSecondCoordinate: return "DuplicateSecondCoordinate";
    case ValidationErrorKind::ZeroOrNegativeCoordinate: return "ZeroOrNegativeCoordinate";
    case ValidationErrorKind::CoordinateDivisibleByPeriod: return "CoordinateDivisibleByPeriod";
    case ValidationErrorKind::CoordinateExceedsGenusBound: return "CoordinateExceedsGenusBound";
    case ValidationErrorKind::PeriodPropertyViolation: return "PeriodPropertyViolation";
  }
  return "Unknown";
}

namespace {

std::string describe(ValidationErrorKind kind, const LatticePoint& p, const std::string& detail) {
  std::ostringstream os;
  os << to_string(kind) << ": point " << p;
  if (!detail.empty()) os << ", " << detail;
  return os.str();
}

}  // namespace

ValidationError::ValidationError(ValidationErrorKind kind, LatticePoint point, std::size_t index, std::int64_t k,
                                 const std::string& detail)
    : std::invalid_argument(describe(kind, point, detail)), kind_(kind), point_(point), index_(index), k_(k) {}

std::optional<std::int64_t> GeneratingSet::tau(std::int64_t beta) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), beta,
                             [](const LatticePoint& p, std::int64_t x) { return p.a < x; });
  if (it == points_.end() || it->a != beta) return std::nullopt;
  return it->b;
}

bool GeneratingSet::is_diagonal() const noexcept {
  return std::all_of(points_.begin(), points_.end(),
                     [this](const LatticePoint& p) { return (p.a - p.b) % period_ == 0; });
}

bool GeneratingSet::is_swap_symmetric() const {
  return std::all_of(points_.begin(), points_.end(), [this](const LatticePoint& p) {
    const auto t = tau(p.b);
    return t && *t == p.a;
  });
}

GeneratingSet validate_generating_set(std::span<const LatticePoint> points, std::int64_t period) {
  using Kind = ValidationErrorKind;
  if (period < 1) {
    throw ValidationError(Kind::NonPositivePeriod, {}, 0, 0, "period " + std::to_string(period));
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].a <= 0 || points[i].b <= 0) throw ValidationError(Kind::ZeroOrNegativeCoordinate, points[i], i, 0, "");
  }

  // Indices sorted by each coordinate; ties expose duplicates. The later
  // input position is reported.
  std::vector<std::size_t> order(points.size());
  auto check_duplicates = [&](auto coord, Kind kind) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return coord(points[x]) < coord(points[y]); });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (coord(points[order[i]]) == coord(points[order[i - 1]])) {
        const std::size_t idx = std::max(order[i], order[i - 1]);
        throw ValidationError(kind, points[idx], idx, 0, "coordinate " + std::to_string(coord(points[idx])));
      }
    }
  };
  check_duplicates([](const LatticePoint& p) { return p.a; }, Kind::DuplicateFirstCoordinate);
  check_duplicates([](const LatticePoint& p) { return p.b; }, Kind::DuplicateSecondCoordinate);

  const auto genus = static_cast<std::int64_t>(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.a % period == 0 || p.b % period == 0) {
      throw ValidationError(Kind::CoordinateDivisibleByPeriod, p, i, 0, "period " + std::to_string(period));
    }
  }

  std::vector<LatticePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  GeneratingSet gamma(std::move(sorted), period);

  std::vector<std::size_t> input_index(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto pos = std::lower_bound(gamma.points_.begin(), gamma.points_.end(), points[i]) - gamma.points_.begin();
    input_index[static_cast<std::size_t>(pos)] = i;
  }

  const std::int64_t max_beta = gamma.points_.empty() ? 0 : gamma.points_.back().a;
  for (std::size_t pos = 0; pos < gamma.points_.size(); ++pos) {
    const auto [beta, t] = gamma.points_[pos];
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t shift = checked_mul(k, period);
      const std::int64_t shifted = checked_add(beta, shift);
      if (shifted > max_beta) {
        if (shift < t) {
          throw ValidationError(Kind::PeriodPropertyViolation, gamma.points_[pos], input_index[pos], k,
                                "k=" + std::to_string(k) + ": beta+k*pi=" + std::to_string(shifted) +
                                    " must be a gap since k*pi < tau(beta)");
        }
        break;
      }
      const auto shifted_tau = gamma.tau(shifted);
      if (shifted_tau.has_value() != (shift < t)) {
        throw ValidationError(Kind::PeriodPropertyViolation, gamma.points_[pos], input_index[pos], k,
                              "k=" + std::to_string(k) + ": beta+k*pi=" + std::to_string(shifted) +
                                  (shifted_tau ? " is a gap but k*pi >= tau(beta)" : " is not a gap but k*pi < tau(beta)"));
      }
      if (shifted_tau && *shifted_tau != t - shift) {
        throw ValidationError(Kind::PeriodPropertyViolation, gamma.points_[pos], input_index[pos], k,
                              "k=" + std::to_string(k) + ": tau(beta+k*pi)=" + std::to_string(*shifted_tau) +
                                  " != tau(beta)-k*pi=" + std::to_string(t - shift));
      }
    }
  }
  // A numerical semigroup with g gaps has all gaps below 2g.
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.a >= 2 * genus || p.b >= 2 * genus) {
      throw ValidationError(Kind::CoordinateExceedsGenusBound, p, i, 0, "genus " + std::to_string(genus));
    }
  }
  return gamma;
}

}  // namespace puregaps
