#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "puregaps/errors.hpp"
#include "puregaps/family_gk.hpp"
#include "puregaps/family_kummer.hpp"
#include "puregaps/gap_engine.hpp"
#include "puregaps/oracle.hpp"
#include "support/fixtures.hpp"

using namespace puregaps;
namespace t = puregaps::testing;

namespace {

constexpr int kCases = 1000;

std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

std::int64_t pick(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng()); }

LatticePoint random_point(std::int64_t hi = 40) { return {pick(0, hi), pick(0, hi)}; }

// A family generating set drawn at random: Kummer with coprime m, r <= 30, or
// GK with q <= 4. GK sets are cached.
struct FamilyCase {
  std::string label;
  const GeneratingSet* gamma;
};

const GeneratingSet& gk_cached(std::int64_t q) {
  static std::map<std::int64_t, GeneratingSet> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, gk::gk_generating_set(q)).first;
  return it->second;
}

const GeneratingSet& kummer_cached(std::int64_t m, std::int64_t r) {
  static std::map<std::pair<std::int64_t, std::int64_t>, GeneratingSet> cache;
  auto it = cache.find({m, r});
  if (it == cache.end()) it = cache.emplace(std::pair{m, r}, kummer::kummer_generating_set(m, r)).first;
  return it->second;
}

FamilyCase random_family() {
  if (pick(0, 9) == 0) {
    const std::int64_t q = pick(2, 4);
    return {"gk q=" + std::to_string(q), &gk_cached(q)};
  }
  for (;;) {
    const std::int64_t m = pick(2, 30), r = pick(2, 30);
    if (std::gcd(m, r) != 1) continue;
    return {"kummer m=" + std::to_string(m) + " r=" + std::to_string(r), &kummer_cached(m, r)};
  }
}

bool is_swap_closed(const PointSet& s) { return swapped(s) == s; }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("lattice laws") {
    for (int i = 0; i < kCases; ++i) {
      const auto x = random_point(), y = random_point(), z = random_point();
      CHECK(lub(x, y) == lub(y, x));
      CHECK(glb(x, y) == glb(y, x));
      CHECK(lub(lub(x, y), z) == lub(x, lub(y, z)));
      CHECK(glb(glb(x, y), z) == glb(x, glb(y, z)));
      CHECK(lub(x, x) == x);
      CHECK(glb(x, x) == x);
      CHECK(lub(x, glb(x, y)) == x);
      CHECK(glb(x, lub(x, y)) == x);
      CHECK(precedes(x, lub(x, y)));
      CHECK(precedes(glb(x, y), y));
      CHECK(incomparable(x, y) == incomparable(y, x));
      CHECK(incomparable(x, y) == (!precedes(x, y) && !precedes(y, x)));
      // lub is the least upper bound
      if (precedes(x, z) && precedes(y, z)) CHECK(precedes(lub(x, y), z));
      if (precedes(z, x) && precedes(z, y)) CHECK(precedes(z, glb(x, y)));
    }
  }

  TEST_CASE("genus identity on family sets") {
    for (int i = 0; i < kCases; ++i) {
      const auto c = random_family();
      INFO(c.label);
      const auto boxed = decompose(*c.gamma);
      std::int64_t total = 0;
      for (std::int64_t k = 0; k < boxed.kmax; ++k) total += (k + 1) * boxed.row_size(k);
      CHECK(total == c.gamma->genus());
      for (std::int64_t i2 = 0; i2 < boxed.kmax; ++i2) {
        for (std::int64_t j = 0; i2 + j < boxed.kmax; ++j) {
          for (const auto& p : reconstruct_box(boxed, i2, j)) {
            CHECK(p.a / boxed.period == i2);
            CHECK(p.b / boxed.period == j);
            CHECK(c.gamma->tau(p.a) == p.b);
          }
        }
      }
    }
  }

  TEST_CASE("period checker passes on family sets and catches tampering") {
    for (int i = 0; i < kCases; ++i) {
      const auto c = random_family();
      INFO(c.label);
      CHECK(oracle::check_period_property(*c.gamma).ok());

      std::vector<LatticePoint> pts(c.gamma->points().begin(), c.gamma->points().end());
      if (pts.empty()) continue;
      const auto idx = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(pts.size()) - 1));
      const std::int64_t pi = c.gamma->period();
      const bool down = pts[idx].b > pi && pick(0, 1) == 1;
      pts[idx].b += down ? -pi : pi;
      INFO("tampered " << pts[idx] << (down ? " (tau - pi)" : " (tau + pi)"));
      CHECK_FALSE(oracle::check_period_property(pts, pi).ok());
      CHECK_THROWS_AS((void)validate_generating_set(pts, pi), ValidationError);
    }
  }

  TEST_CASE("period checker passes on random valid sets") {
    for (int i = 0; i < kCases; ++i) {
      const auto g = t::random_gamma(rng(), t::GammaShape::Any);
      CHECK(oracle::check_period_property(g.points, g.period).ok());
    }
  }

  TEST_CASE("swap-symmetric sets have swap-symmetric pure gaps") {
    for (int i = 0; i < kCases; ++i) {
      const auto g = t::validated(t::random_gamma(rng(), t::GammaShape::SwapSymmetric));
      REQUIRE(g.is_swap_symmetric());
      CHECK(is_swap_closed(assemble_pure_gaps(decompose(g)).g0));
    }
    for (int i = 0; i < 200; ++i) {
      const auto c = random_family();
      INFO(c.label);
      REQUIRE(c.gamma->is_swap_symmetric());
      CHECK(is_swap_closed(assemble_pure_gaps(decompose(*c.gamma)).g0));
    }
  }

  TEST_CASE("translates of G_{k,0} are pairwise disjoint") {
    for (int i = 0; i < kCases; ++i) {
      const auto g = t::validated(t::random_gamma(rng(), t::GammaShape::Any));
      const auto boxed = decompose(g);
      std::set<LatticePoint> seen;
      std::size_t total = 0;
      for (std::int64_t k = 0; k < boxed.kmax; ++k) {
        const auto box = compute_components(boxed, k).merged();
        for (std::int64_t j = 0; j <= k; ++j) {
          for (const auto& p : box) {
            const auto moved = p + TranslationVector{j, boxed.period};
            CHECK(moved.a / boxed.period == k - j);
            CHECK(moved.b / boxed.period == j);
            seen.insert(moved);
            ++total;
          }
        }
      }
      CHECK(seen.size() == total);
    }
  }

  TEST_CASE("diagonal lemma on family sets") {
    for (int i = 0; i < kCases; ++i) {
      const auto c = random_family();
      INFO(c.label);
      const auto boxed = decompose(*c.gamma);
      REQUIRE(boxed.diagonal);
      for (std::int64_t k = 0; k < boxed.kmax; ++k) {
        CHECK(compute_g2(boxed, k).empty());
        CHECK(compute_g4_general(boxed, k) == reflect_g3(compute_g3(boxed, k), k, boxed.period));
      }
    }
  }

  TEST_CASE("diagonal lemma on random diagonal sets") {
    for (int i = 0; i < kCases; ++i) {
      const auto g = t::validated(t::random_gamma(rng(), t::GammaShape::Diagonal));
      const auto boxed = decompose(g);
      REQUIRE(boxed.diagonal);
      for (std::int64_t k = 0; k < boxed.kmax; ++k) {
        CHECK(compute_g4_general(boxed, k) == reflect_g3(compute_g3(boxed, k), k, boxed.period));
      }
    }
  }

  TEST_CASE("engine matches the oracle on random sets") {
    for (int i = 0; i < kCases; ++i) {
      const auto shape = static_cast<t::GammaShape>(pick(0, 2));
      const auto g = t::validated(t::random_gamma(rng(), shape));
      const auto result = assemble_pure_gaps(decompose(g), {.verify = true});
      CHECK(result.g0 == oracle::pure_gaps_direct(g));
      CHECK(result.cardinality == static_cast<WideInt>(result.g0.size()));
      const auto b = result.bounds;
      CHECK(b.lower <= result.cardinality);
      CHECK(result.cardinality <= b.upper);
      CHECK(result.cardinality <= b.homma_kim);
    }
  }

  TEST_CASE("parallel assembly equals sequential") {
    for (int i = 0; i < kCases; ++i) {
      const auto g = t::validated(t::random_gamma(rng(), t::GammaShape::Any));
      const auto boxed = decompose(g);
      const auto threads = static_cast<unsigned>(pick(2, 8));
      CHECK(assemble_pure_gaps(boxed, {.threads = threads}).g0 == assemble_pure_gaps(boxed).g0);
    }
  }

  TEST_CASE("non-diagonal sets occur in the generator") {
    int non_diagonal = 0, with_g2 = 0;
    for (int i = 0; i < kCases; ++i) {
      const auto boxed = decompose(t::validated(t::random_gamma(rng(), t::GammaShape::Any)));
      if (!boxed.diagonal) ++non_diagonal;
      for (std::int64_t k = 0; k < boxed.kmax; ++k) {
        if (!compute_g2(boxed, k).empty()) {
          ++with_g2;
          break;
        }
      }
    }
    CHECK(non_diagonal > kCases / 2);
    CHECK(with_g2 > 0);
  }
}
