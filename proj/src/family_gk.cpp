#include "puregaps/family_gk.hpp"

#include <algorithm>
#include <array>

#include "puregaps/detail/parallel.hpp"
#include "puregaps/errors.hpp"

namespace puregaps::gk {

namespace {

void require_q(std::int64_t q) {
  if (q < 2) throw ParameterError(ParameterKind::InvalidParams, "GK requires q >= 2, got q=" + std::to_string(q));
}

/// (c-1)(q^3+1) + (q+1-a)(q^2-q+1) - b: each coordinate of gamma_{i,j,k} and
/// of the doubly indexed points in G^1 and G^3 has this shape.
std::int64_t coordinate(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t pi = checked_add(checked_mul(checked_mul(q, q), q), 1);
  const std::int64_t s = q * q - q + 1;
  return checked_sub(checked_add(checked_mul(c - 1, pi), checked_mul(q + 1 - a, s)), b);
}

std::int64_t i_low(std::int64_t q, std::int64_t k) { return std::max<std::int64_t>(0, k - q * q + q + 2); }
std::int64_t i_high(std::int64_t q, std::int64_t k) { return std::min<std::int64_t>(q, k + 2); }

WideInt divide_exact(WideInt numerator, WideInt divisor, const char* what) {
  if (numerator % divisor != 0) {
    throw ConsistencyError(ConsistencyKind::DivisibilityViolation,
                           std::string(what) + " numerator " + to_string(numerator) + " not divisible by " +
                               to_string(divisor));
  }
  return numerator / divisor;
}

}  // namespace

GKParams::GKParams(std::int64_t q) : q_(q) {
  require_q(q);
  period_ = checked_add(checked_mul(checked_mul(q, q), q), 1);
  genus_ = checked_add(checked_mul(period_, checked_sub(checked_mul(q, q), 2)) / 2, 1);
}

bool GKParams::prime_power() const noexcept {
  std::int64_t n = q_;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return n > 1;
}

LatticePoint gk_gamma_point(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t q) {
  require_q(q);
  const std::int64_t q2 = q * q;
  const bool in_range = 1 <= k && k <= q2 - 1 && std::max<std::int64_t>(0, k - q2 + q + 1) <= i && i <= q &&
                        std::max<std::int64_t>(0, k - i + 1) <= j && j <= q2 - q;
  if (!in_range) {
    throw ParameterError(ParameterKind::IndexOutOfRange, "gamma_{" + std::to_string(i) + "," + std::to_string(j) +
                                                             "," + std::to_string(k) + "} for q=" + std::to_string(q));
  }
  // The second coordinate is the first with k replaced by i + j - k.
  return {coordinate(q, i, j, k), coordinate(q, i, j, i + j - k)};
}

GeneratingSet gk_generating_set(std::int64_t q) {
  const GKParams params(q);
  const std::int64_t q2 = q * q;
  std::vector<LatticePoint> points;
  points.reserve(static_cast<std::size_t>(params.genus()));
  for (std::int64_t k = 1; k <= q2 - 1; ++k) {
    for (std::int64_t i = std::max<std::int64_t>(0, k - q2 + q + 1); i <= q; ++i) {
      for (std::int64_t j = std::max<std::int64_t>(0, k - i + 1); j <= q2 - q; ++j) {
        points.push_back(gk_gamma_point(i, j, k, q));
      }
    }
  }
  if (static_cast<std::int64_t>(points.size()) != params.genus()) {
    throw ConsistencyError(ConsistencyKind::GenusIdentityViolation,
                           "GK q=" + std::to_string(q) + " enumerates " + std::to_string(points.size()) +
                               " points, genus is " + std::to_string(params.genus()));
  }
  try {
    return validate_generating_set(points, params.period());
  } catch (const ValidationError& e) {
    throw ConsistencyError(ConsistencyKind::GenericMismatch, std::string("GK Gamma failed validation: ") + e.what());
  }
}

std::vector<LatticePoint> gk_gamma_k0(std::int64_t q, std::int64_t k) {
  require_q(q);
  std::vector<LatticePoint> out;
  if (k < 0 || k > q * q - 2) return out;
  for (std::int64_t i = i_low(q, k); i <= i_high(q, k); ++i) out.push_back(gk_gamma_point(i, k - i + 2, k + 1, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> gk_card_gamma_k0_piecewise(std::int64_t q, std::int64_t k) {
  require_q(q);
  std::vector<std::int64_t> values;
  const std::int64_t q2 = q * q;
  if (0 <= k && k <= q - 2) values.push_back(k + 3);
  if (q - 1 <= k && k <= q2 - q - 3) values.push_back(q + 1);
  if (q2 - q - 2 <= k && k <= q2 - 2) values.push_back(q2 - 1 - k);
  return values;
}

std::int64_t gk_card_gamma_k0(std::int64_t q, std::int64_t k) {
  require_q(q);
  const std::int64_t count = (k < 0 || k > q * q - 2) ? 0 : i_high(q, k) - i_low(q, k) + 1;
  for (std::int64_t branch : gk_card_gamma_k0_piecewise(q, k)) {
    if (branch != count) {
      throw ConsistencyError(ConsistencyKind::PiecewiseMismatch,
                             "|Gamma_{" + std::to_string(k) + ",0}| = " + std::to_string(count) +
                                 " but piecewise branch gives " + std::to_string(branch) + " (q=" + std::to_string(q) + ")");
    }
  }
  return count;
}

PointSet gk_g1(std::int64_t q, std::int64_t k) {
  require_q(q);
  PointSet out;
  const std::int64_t top = q * q - 2;
  if (k < 0 || k > top - 1) return out;
  for (std::int64_t k2 = k + 1; k2 <= top; ++k2) {
    for (std::int64_t i2 = i_low(q, k2); i2 <= i_high(q, k2); ++i2) {
      const std::int64_t a = coordinate(q, i2, k2 - i2 + 2, k + 1);
      for (std::int64_t k1 = k + 1; k1 <= top; ++k1) {
        for (std::int64_t i1 = i_low(q, k1); i1 <= i_high(q, k1); ++i1) {
          out.emplace_back(a, coordinate(q, i1, k1 - i1 + 2, 1));
        }
      }
    }
  }
  normalize(out);
  return out;
}

PointSet gk_g2(std::int64_t q, std::int64_t) {
  require_q(q);
  return {};
}

PointSet gk_g3(std::int64_t q, std::int64_t k) {
  require_q(q);
  PointSet out;
  const std::int64_t top = q * q - 2;
  if (k < 0 || k > top - 1) return out;
  for (std::int64_t i2 = i_low(q, k); i2 <= i_high(q, k); ++i2) {
    const std::int64_t a = coordinate(q, i2, k - i2 + 2, k + 1);
    for (std::int64_t k1 = k + 1; k1 <= top; ++k1) {
      for (std::int64_t i1 = std::max(i_low(q, k1), i2); i1 <= i_high(q, k1); ++i1) {
        out.emplace_back(a, coordinate(q, i1, k1 - i1 + 2, 1));
      }
    }
  }
  normalize(out);
  return out;
}

PointSet gk_g4(std::int64_t q, std::int64_t k) {
  const GKParams params(q);
  return reflect_g3(gk_g3(q, k), k, params.period());
}

BoxComponents gk_components(std::int64_t q, std::int64_t k) {
  BoxComponents c;
  c.g1 = gk_g1(q, k);
  c.g2 = gk_g2(q, k);
  c.g3 = gk_g3(q, k);
  c.g4 = reflect_g3(c.g3, k, GKParams(q).period());
  return c;
}

void gk_verify_components(std::int64_t q, const EngineOptions& options) {
  const auto boxed = decompose(gk_generating_set(q));
  const std::int64_t q2 = q * q;
  std::vector<std::string> failures(static_cast<std::size_t>(std::max(boxed.kmax, q2 - 1)));
  detail::parallel_for(failures.size(), options.threads, [&](std::size_t idx) {
    const auto k = static_cast<std::int64_t>(idx);
    const std::string at = " at q=" + std::to_string(q) + ", k=" + std::to_string(k);
    if (gk_gamma_k0(q, k) != std::vector<LatticePoint>(boxed.row(k).begin(), boxed.row(k).end())) {
      failures[idx] = "Gamma_k0 differs" + at;
      return;
    }
    const auto explicit_parts = gk_components(q, k);
    const auto generic = compute_components(boxed, k, options);
    if (explicit_parts.g1 != generic.g1) failures[idx] = "G1 differs" + at;
    else if (explicit_parts.g2 != generic.g2) failures[idx] = "G2 differs" + at;
    else if (explicit_parts.g3 != generic.g3) failures[idx] = "G3 differs" + at;
    else if (explicit_parts.g4 != generic.g4) failures[idx] = "G4 differs" + at;
  });
  for (const auto& f : failures) {
    if (!f.empty()) throw ConsistencyError(ConsistencyKind::GenericMismatch, f);
  }
}

PureGapResult gk_pure_gaps(std::int64_t q, const EngineOptions& options) {
  const GKParams params(q);
  const std::int64_t rows = q * q - 1;
  PureGapResult result;
  result.per_box.resize(static_cast<std::size_t>(rows));
  detail::parallel_for(result.per_box.size(), options.threads,
                       [&](std::size_t k) { result.per_box[k] = gk_components(q, static_cast<std::int64_t>(k)); });
  result.g0 = assemble_translates(result.per_box, params.period(), result.cardinality);

  std::vector<std::int64_t> sizes;
  for (std::int64_t k = 0; k < rows; ++k) sizes.push_back(gk_card_gamma_k0(q, k));
  result.bounds = bounds_from_row_sizes(sizes, params.genus());

  const WideInt expected = gk_card_g0(q);
  if (result.cardinality != expected) {
    throw ConsistencyError(ConsistencyKind::ClosedFormMismatch,
                           "GK q=" + std::to_string(q) + ": assembled |G0| = " + to_string(result.cardinality) +
                               ", closed form " + to_string(expected));
  }
  return result;
}

WideInt gk_card_g0(std::int64_t q) {
  require_q(q);
  static constexpr std::array<std::int64_t, 9> inner{-12, 128, -86, -111, 71, -9, -25, 10, 10};
  const WideInt x = q;
  const WideInt numerator = checked_mul(checked_mul(x, x - 1), checked_polynomial(inner, x));
  return divide_exact(numerator, 120, "GK |G0|");
}

WideInt gk_upper_bound(std::int64_t q) {
  require_q(q);
  static constexpr std::array<std::int64_t, 11> coeffs{0, -4, -40, 124, -35, -56, 20, -4, -15, 0, 10};
  return divide_exact(checked_polynomial(coeffs, WideInt{q}), 120, "GK upper bound");
}

}  // namespace puregaps::gk
