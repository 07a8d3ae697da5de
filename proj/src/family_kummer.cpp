#include "puregaps/family_kummer.hpp"

#include <algorithm>
#include <numeric>

#include "puregaps/detail/parallel.hpp"
#include "puregaps/errors.hpp"

namespace puregaps::kummer {

namespace {

std::string params_text(std::int64_t m, std::int64_t r) {
  return "(m,r)=(" + std::to_string(m) + "," + std::to_string(r) + ")";
}

/// Upper end of the j-range of Gamma_{k,0}: m - 1 - floor(m(k+1)/r).
std::int64_t j_high(std::int64_t m, std::int64_t r, std::int64_t k) {
  return m - 1 - floor_div(checked_mul(m, k + 1), r);
}

std::int64_t j_low(std::int64_t m, std::int64_t r, std::int64_t k) {
  return std::max<std::int64_t>(1, m - floor_div(checked_mul(m, k + 2), r));
}

void check_closed_form(WideInt closed, WideInt enumerated, const std::string& what) {
  if (closed != enumerated) {
    throw ConsistencyError(ConsistencyKind::ClosedFormMismatch,
                           what + ": closed form " + to_string(closed) + " vs theorem sum " + to_string(enumerated));
  }
}

}  // namespace

KummerParams::KummerParams(std::int64_t m, std::int64_t r) : m_(m), r_(r) {
  if (m < 2 || r < 2) throw ParameterError(ParameterKind::InvalidParams, "Kummer requires m, r >= 2, got " + params_text(m, r));
  if (std::gcd(m, r) != 1) throw ParameterError(ParameterKind::InvalidParams, "Kummer requires gcd(m, r) = 1, got " + params_text(m, r));
  checked_mul(m, r);
}

GeneratingSet kummer_generating_set(std::int64_t m, std::int64_t r) {
  const KummerParams params(m, r);
  std::vector<LatticePoint> points;
  for (std::int64_t j = 1; j <= m - 1 - m / r; ++j) {
    const std::int64_t total = r - 2 - floor_div(checked_mul(r, j), m);
    for (std::int64_t k1 = 0; k1 <= total; ++k1) {
      points.emplace_back(checked_add(checked_mul(m, k1), j), checked_add(checked_mul(m, total - k1), j));
    }
  }
  if (static_cast<std::int64_t>(points.size()) != params.genus()) {
    throw ConsistencyError(ConsistencyKind::GenusIdentityViolation,
                           "Kummer " + params_text(m, r) + " enumerates " + std::to_string(points.size()) +
                               " points, genus is " + std::to_string(params.genus()));
  }
  try {
    return validate_generating_set(points, params.period());
  } catch (const ValidationError& e) {
    throw ConsistencyError(ConsistencyKind::GenericMismatch, std::string("Kummer Gamma failed validation: ") + e.what());
  }
}

std::vector<LatticePoint> kummer_gamma_k0(std::int64_t m, std::int64_t r, std::int64_t k) {
  const KummerParams params(m, r);
  std::vector<LatticePoint> out;
  if (k < 0 || k > params.last_row()) return out;
  for (std::int64_t j = j_low(m, r, k); j <= j_high(m, r, k); ++j) out.emplace_back(m * k + j, j);
  return out;
}

std::int64_t kummer_card_gamma_k0(std::int64_t m, std::int64_t r, std::int64_t k) {
  const KummerParams params(m, r);
  if (k < 0 || k > params.last_row()) return 0;
  const std::int64_t count = std::max<std::int64_t>(0, j_high(m, r, k) - j_low(m, r, k) + 1);
  const std::int64_t ceiling_difference = ceil_div(m * (k + 2), r) - ceil_div(m * (k + 1), r);
  if (count != ceiling_difference) {
    throw ConsistencyError(ConsistencyKind::PiecewiseMismatch,
                           "|Gamma_{" + std::to_string(k) + ",0}| = " + std::to_string(count) +
                               " but ceiling difference gives " + std::to_string(ceiling_difference) + " for " +
                               params_text(m, r));
  }
  // The top-index expression m - ceil(m(r-1)/r) presumes floor(r/m) = 0.
  if (k == params.last_row() && m > r && count != m - ceil_div(m * (r - 1), r)) {
    throw ConsistencyError(ConsistencyKind::PiecewiseMismatch,
                           "top-index count mismatch for " + params_text(m, r));
  }
  return count;
}

PointSet kummer_g1(std::int64_t m, std::int64_t r, std::int64_t k) {
  const KummerParams params(m, r);
  PointSet out;
  if (k < 0 || k > params.last_row() - 1) return out;
  const std::int64_t side = j_high(m, r, k + 1);
  for (std::int64_t j2 = 1; j2 <= side; ++j2) {
    for (std::int64_t j1 = 1; j1 <= side; ++j1) out.emplace_back(m * k + j2, j1);
  }
  return out;
}

PointSet kummer_g2(std::int64_t m, std::int64_t r, std::int64_t) {
  KummerParams(m, r);
  return {};
}

PointSet kummer_g3(std::int64_t m, std::int64_t r, std::int64_t k) {
  const KummerParams params(m, r);
  PointSet out;
  if (k < 0 || k > params.last_row() - 1) return out;
  const std::int64_t below = j_high(m, r, k + 1);
  for (std::int64_t j = m - floor_div(m * (k + 2), r); j <= j_high(m, r, k); ++j) {
    for (std::int64_t j1 = 1; j1 <= below; ++j1) out.emplace_back(m * k + j, j1);
  }
  return out;
}

PointSet kummer_g4(std::int64_t m, std::int64_t r, std::int64_t k) {
  return reflect_g3(kummer_g3(m, r, k), k, m);
}

BoxComponents kummer_components(std::int64_t m, std::int64_t r, std::int64_t k) {
  BoxComponents c;
  c.g1 = kummer_g1(m, r, k);
  c.g2 = kummer_g2(m, r, k);
  c.g3 = kummer_g3(m, r, k);
  c.g4 = reflect_g3(c.g3, k, m);
  return c;
}

void kummer_verify_components(std::int64_t m, std::int64_t r, const EngineOptions& options) {
  const KummerParams params(m, r);
  const auto boxed = decompose(kummer_generating_set(m, r));
  const auto rows = static_cast<std::size_t>(std::max(boxed.kmax, params.last_row() + 1));
  std::vector<std::string> failures(rows);
  detail::parallel_for(rows, options.threads, [&](std::size_t idx) {
    const auto k = static_cast<std::int64_t>(idx);
    const std::string at = " at " + params_text(m, r) + ", k=" + std::to_string(k);
    if (kummer_gamma_k0(m, r, k) != std::vector<LatticePoint>(boxed.row(k).begin(), boxed.row(k).end())) {
      failures[idx] = "Gamma_k0 differs" + at;
      return;
    }
    if (kummer_card_gamma_k0(m, r, k) != boxed.row_size(k)) {
      failures[idx] = "|Gamma_k0| differs" + at;
      return;
    }
    const auto explicit_parts = kummer_components(m, r, k);
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

PureGapResult kummer_pure_gaps(std::int64_t m, std::int64_t r, const EngineOptions& options) {
  const KummerParams params(m, r);
  const std::int64_t rows = std::max<std::int64_t>(0, params.last_row() + 1);
  PureGapResult result;
  result.per_box.resize(static_cast<std::size_t>(rows));
  detail::parallel_for(result.per_box.size(), options.threads, [&](std::size_t k) {
    result.per_box[k] = kummer_components(m, r, static_cast<std::int64_t>(k));
  });
  result.g0 = assemble_translates(result.per_box, params.period(), result.cardinality);

  std::vector<std::int64_t> sizes;
  for (std::int64_t k = 0; k < rows; ++k) sizes.push_back(kummer_card_gamma_k0(m, r, k));
  result.bounds = bounds_from_row_sizes(sizes, params.genus());

  check_closed_form(kummer_card_g0(m, r), result.cardinality, "Kummer " + params_text(m, r) + " assembled |G0|");
  return result;
}

WideInt kummer_card_g0(std::int64_t m, std::int64_t r) {
  const KummerParams params(m, r);
  WideInt total = 0;
  for (std::int64_t k = 1; k <= params.last_row(); ++k) {
    const WideInt lo = ceil_div(checked_mul(m, k), r);
    const WideInt hi = ceil_div(checked_mul(m, k + 1), r);
    const WideInt tail = m - lo;
    const WideInt step = hi - lo;
    total = checked_add(total, checked_mul(WideInt{k}, checked_sub(checked_mul(tail, tail), step * step)));
  }
  return total;
}

WideInt kummer_card_special_ur1(std::int64_t u, std::int64_t r) {
  if (u < 1 || r < 2) {
    throw ParameterError(ParameterKind::InvalidParams,
                         "m = ur + 1 case requires u >= 1, r >= 2, got u=" + std::to_string(u) + ", r=" + std::to_string(r));
  }
  const WideInt U = u, R = r;
  const WideInt numerator =
      checked_mul(checked_mul(checked_mul(U, U), checked_mul(R - 1, R - 2)), checked_mul(R, R + 3));
  if (numerator % 12 != 0) {
    throw ConsistencyError(ConsistencyKind::DivisibilityViolation, "u^2(r-1)(r-2)r(r+3) not divisible by 12");
  }
  const WideInt closed = numerator / 12;
  const std::int64_t m = checked_add(checked_mul(u, r), 1);
  check_closed_form(closed, kummer_card_g0(m, r), "m=ur+1 with u=" + std::to_string(u) + ", r=" + std::to_string(r));
  return closed;
}

WideInt kummer_card_special_qN(std::int64_t q, std::int64_t N) {
  if (q < 2 || N < 1 || (q + 1) % N != 0 || q - 2 - N < 0) {
    throw ParameterError(ParameterKind::InvalidParams,
                         "m = (q+1)/N case requires N | q+1 and q-2-N >= 0, got q=" + std::to_string(q) +
                             ", N=" + std::to_string(N));
  }
  const std::int64_t m = (q + 1) / N;
  const WideInt Q = q, M = m;
  const WideInt lead = checked_mul(Q + 1, M - 1);
  const WideInt numerator = checked_mul(lead, checked_add(lead - 2 * M + N, 7));
  if (numerator % 12 != 0) {
    throw ConsistencyError(ConsistencyKind::DivisibilityViolation, "(q+1)(m-1)(...) not divisible by 12");
  }
  const WideInt closed = checked_sub(numerator / 12, checked_mul(Q, M - 1));
  check_closed_form(closed, kummer_card_g0(m, q), "m=(q+1)/N with q=" + std::to_string(q) + ", N=" + std::to_string(N));
  return closed;
}

}  // namespace puregaps::kummer
