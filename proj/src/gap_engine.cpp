#include "puregaps/gap_engine.hpp"

#include <algorithm>
#include <sstream>

#include "puregaps/detail/parallel.hpp"
#include "puregaps/errors.hpp"

namespace puregaps {

std::vector<std::int64_t> BoxedGamma::row_sizes() const {
  std::vector<std::int64_t> sizes;
  sizes.reserve(rows.size());
  for (const auto& r : rows) sizes.push_back(static_cast<std::int64_t>(r.size()));
  return sizes;
}

std::int64_t BoxedGamma::rows_above(std::int64_t k) const {
  std::int64_t total = 0;
  for (std::int64_t k1 = std::max<std::int64_t>(k + 1, 0); k1 < kmax; ++k1) total += row_size(k1);
  return total;
}

PointSet BoxComponents::merged() const {
  PointSet all;
  all.reserve(size());
  for (const auto* part : {&g1, &g2, &g3, &g4}) all.insert(all.end(), part->begin(), part->end());
  std::sort(all.begin(), all.end());
  const auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) {
    std::ostringstream os;
    os << "point " << *dup << " appears in two components of the same box";
    throw ConsistencyError(ConsistencyKind::DisjointnessViolation, os.str());
  }
  return all;
}

BoxedGamma decompose(const GeneratingSet& gamma) {
  BoxedGamma boxed;
  boxed.period = gamma.period();
  boxed.genus = gamma.genus();
  boxed.kmax = std::max<std::int64_t>(0, ceil_div(2 * boxed.genus - 1, boxed.period));
  boxed.diagonal = gamma.is_diagonal();
  boxed.rows.resize(static_cast<std::size_t>(boxed.kmax));

  const std::int64_t pi = boxed.period;
  for (const auto& p : gamma.points()) {
    if (p.b / pi != 0) continue;
    const std::int64_t k = p.a / pi;
    if (k >= boxed.kmax) {
      std::ostringstream os;
      os << "point " << p << " lies in box " << k << " beyond kmax=" << boxed.kmax;
      throw ConsistencyError(ConsistencyKind::GenusIdentityViolation, os.str());
    }
    boxed.rows[static_cast<std::size_t>(k)].push_back(p);
  }
  for (auto& r : boxed.rows) std::sort(r.begin(), r.end());

  std::int64_t weighted = 0;
  for (std::int64_t k = 0; k < boxed.kmax; ++k) weighted += (k + 1) * boxed.row_size(k);
  if (weighted != boxed.genus) {
    throw ConsistencyError(ConsistencyKind::GenusIdentityViolation,
                           "sum (k+1)|Gamma_k0| = " + std::to_string(weighted) + " but g = " +
                               std::to_string(boxed.genus));
  }
  return boxed;
}

std::vector<LatticePoint> reconstruct_box(const BoxedGamma& boxed, std::int64_t i, std::int64_t j) {
  std::vector<LatticePoint> out;
  if (i < 0 || j < 0) return out;
  const TranslationVector w{j, boxed.period};
  for (const auto& u : boxed.row(i + j)) out.push_back(u + w);
  std::sort(out.begin(), out.end());
  return out;
}

PointSet compute_g1(const BoxedGamma& boxed, std::int64_t k) {
  PointSet out;
  for (std::int64_t k2 = k + 1; k2 < boxed.kmax; ++k2) {
    const TranslationVector w{k2 - k, boxed.period};
    for (const auto& u : boxed.row(k2)) {
      const LatticePoint shifted = u + w;
      for (std::int64_t k1 = k + 1; k1 < boxed.kmax; ++k1) {
        for (const auto& v : boxed.row(k1)) out.push_back(glb(shifted, v));
      }
    }
  }
  normalize(out);
  const std::int64_t above = boxed.rows_above(k);
  if (static_cast<std::int64_t>(out.size()) != above * above) {
    throw ConsistencyError(ConsistencyKind::CardinalityMismatch,
                           "|G1_" + std::to_string(k) + "| = " + std::to_string(out.size()) + ", expected " +
                               std::to_string(above * above));
  }
  return out;
}

PointSet compute_g2(const BoxedGamma& boxed, std::int64_t k) {
  PointSet out;
  const auto row = boxed.row(k);
  for (std::size_t x = 0; x < row.size(); ++x) {
    for (std::size_t y = x + 1; y < row.size(); ++y) {
      if (incomparable(row[x], row[y])) out.push_back(glb(row[x], row[y]));
    }
  }
  normalize(out);
  return out;
}

PointSet compute_g3(const BoxedGamma& boxed, std::int64_t k) {
  PointSet out;
  for (const auto& u : boxed.row(k)) {
    for (std::int64_t k1 = k + 1; k1 < boxed.kmax; ++k1) {
      for (const auto& v : boxed.row(k1)) {
        if (!precedes(u, v)) out.push_back(glb(u, v));
      }
    }
  }
  normalize(out);
  return out;
}

PointSet compute_g4_general(const BoxedGamma& boxed, std::int64_t k) {
  PointSet out;
  const auto row = boxed.row(k);
  for (std::int64_t k2 = k + 1; k2 < boxed.kmax; ++k2) {
    const TranslationVector w{k2 - k, boxed.period};
    for (const auto& u : boxed.row(k2)) {
      const LatticePoint shifted = u + w;
      for (const auto& v : row) {
        if (!precedes(v, shifted)) out.push_back(glb(shifted, v));
      }
    }
  }
  normalize(out);
  return out;
}

PointSet reflect_g3(const PointSet& g3, std::int64_t k, std::int64_t period) {
  PointSet out;
  out.reserve(g3.size());
  const TranslationVector w{k, period};
  for (const auto& p : g3) out.push_back(p.swapped() - w);
  normalize(out);
  return out;
}

namespace {

PointSet g4_from(const BoxedGamma& boxed, std::int64_t k, const PointSet& g3, const EngineOptions& options) {
  if (!boxed.diagonal) return compute_g4_general(boxed, k);
  PointSet fast = reflect_g3(g3, k, boxed.period);
  if (options.verify && fast != compute_g4_general(boxed, k)) {
    throw ConsistencyError(ConsistencyKind::DiagonalReflectionMismatch,
                           "reflected G3 differs from general G4 at k=" + std::to_string(k));
  }
  return fast;
}

}  // namespace

PointSet compute_g4(const BoxedGamma& boxed, std::int64_t k, const EngineOptions& options) {
  return g4_from(boxed, k, compute_g3(boxed, k), options);
}

BoxComponents compute_components(const BoxedGamma& boxed, std::int64_t k, const EngineOptions& options) {
  BoxComponents c;
  c.g1 = compute_g1(boxed, k);
  c.g2 = compute_g2(boxed, k);
  c.g3 = compute_g3(boxed, k);
  c.g4 = g4_from(boxed, k, c.g3, options);
  return c;
}

PointSet assemble_translates(std::span<const BoxComponents> per_box, std::int64_t period, WideInt& cardinality) {
  std::vector<PointSet> merged(per_box.size());
  WideInt expected = 0;
  std::size_t total = 0;
  for (std::size_t k = 0; k < per_box.size(); ++k) {
    merged[k] = per_box[k].merged();
    expected = checked_add(expected, checked_mul(static_cast<WideInt>(k + 1), static_cast<WideInt>(merged[k].size())));
    total += (k + 1) * merged[k].size();
  }

  PointSet g0;
  g0.reserve(total);
  for (std::size_t k = 0; k < merged.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      const TranslationVector w{static_cast<std::int64_t>(j), period};
      for (const auto& p : merged[k]) g0.push_back(p + w);
    }
  }
  std::sort(g0.begin(), g0.end());
  const auto dup = std::adjacent_find(g0.begin(), g0.end());
  if (dup != g0.end()) {
    std::ostringstream os;
    os << "point " << *dup << " lies in two translates G_{k,0} + w_j";
    throw ConsistencyError(ConsistencyKind::DisjointnessViolation, os.str());
  }
  if (static_cast<WideInt>(g0.size()) != expected) {
    throw ConsistencyError(ConsistencyKind::CardinalityMismatch,
                           "|G0| = " + std::to_string(g0.size()) + " but sum (k+1)|G_k0| = " + to_string(expected));
  }
  cardinality = expected;
  return g0;
}

PureGapResult assemble_pure_gaps(const BoxedGamma& boxed, const EngineOptions& options) {
  PureGapResult result;
  result.per_box.resize(static_cast<std::size_t>(boxed.kmax));
  detail::parallel_for(result.per_box.size(), options.threads, [&](std::size_t k) {
    result.per_box[k] = compute_components(boxed, static_cast<std::int64_t>(k), options);
  });
  result.g0 = assemble_translates(result.per_box, boxed.period, result.cardinality);
  result.bounds = bounds(boxed);
  return result;
}

BoundValues bounds_from_row_sizes(std::span<const std::int64_t> row_sizes, std::int64_t genus) {
  BoundValues b;
  // suffix[k] = sum_{k1 >= k} n_{k1}
  std::vector<WideInt> suffix(row_sizes.size() + 1, 0);
  for (std::size_t k = row_sizes.size(); k-- > 0;) suffix[k] = checked_add(suffix[k + 1], WideInt{row_sizes[k]});
  for (std::size_t k = 0; k < row_sizes.size(); ++k) {
    const WideInt weight = static_cast<WideInt>(k + 1);
    b.lower = checked_add(b.lower, checked_mul(weight, checked_mul(suffix[k + 1], suffix[k + 1])));
    b.upper = checked_add(b.upper, checked_mul(weight, checked_mul(suffix[k], suffix[k])));
  }
  b.upper = checked_sub(b.upper, WideInt{genus});
  const WideInt g = genus;
  b.homma_kim = checked_mul(g, g - 1) / 2;
  return b;
}

BoundValues bounds(const BoxedGamma& boxed) {
  const auto sizes = boxed.row_sizes();
  return bounds_from_row_sizes(sizes, boxed.genus);
}

}  // namespace puregaps
