#include <doctest.h>

#include "puregaps/errors.hpp"
#include "puregaps/family_gk.hpp"
#include "puregaps/oracle.hpp"
#include "support/fixtures.hpp"

using namespace puregaps;
using namespace puregaps::gk;
namespace t = puregaps::testing;

TEST_SUITE("family_gk") {
  TEST_CASE("parameters") {
    CHECK(GKParams(2).genus() == 10);
    CHECK(GKParams(2).period() == 9);
    CHECK(GKParams(3).genus() == 99);
    CHECK(GKParams(7).genus() == 8085);
    CHECK(GKParams(4).prime_power());
    CHECK_FALSE(GKParams(6).prime_power());
    CHECK_THROWS_AS(GKParams(1), ParameterError);
  }

  TEST_CASE("gamma points") {
    CHECK(gk_gamma_point(2, 0, 1, 2) == LatticePoint{3, 3});
    CHECK(gk_gamma_point(1, 2, 2, 2) == LatticePoint{13, 4});
    CHECK(gk_gamma_point(2, 2, 3, 2) == LatticePoint{19, 1});
    CHECK_THROWS_AS(gk_gamma_point(3, 0, 1, 2), ParameterError);
    CHECK_THROWS_AS(gk_gamma_point(0, 0, 4, 2), ParameterError);
  }

  TEST_CASE("generating set") {
    const auto g2 = gk_generating_set(2);
    CHECK(PointSet(g2.points().begin(), g2.points().end()) == PointSet(t::kGkQ2Gamma.begin(), t::kGkQ2Gamma.end()));
    CHECK(gk_generating_set(3).genus() == 99);
    CHECK(gk_generating_set(4).genus() == 456);
  }

  TEST_CASE("row sizes") {
    CHECK(gk_card_gamma_k0(3, 1) == 4);
    CHECK(gk_card_gamma_k0(3, 7) == 1);
    CHECK(gk_card_gamma_k0(3, 8) == 0);
    for (std::int64_t q = 2; q <= 6; ++q) {
      const auto boxed = decompose(gk_generating_set(q));
      for (std::int64_t k = 0; k <= q * q; ++k) {
        CHECK(gk_card_gamma_k0(q, k) == boxed.row_size(k));
        CHECK(gk_gamma_k0(q, k) == std::vector<LatticePoint>(boxed.row(k).begin(), boxed.row(k).end()));
      }
    }
    // the middle branch is empty at q=2, so both outer branches apply at k=0
    CHECK(gk_card_gamma_k0_piecewise(2, 0).size() == 2);
  }

  TEST_CASE("components at q=2") {
    CHECK(gk_g1(2, 0) == t::kGkQ2G1k0);
    CHECK(gk_g1(2, 1) == t::kGkQ2G1k1);
    CHECK(gk_g2(2, 0).empty());
    CHECK(gk_g3(2, 0) == t::kGkQ2G3k0);
    CHECK(gk_g3(2, 1) == t::kGkQ2G3k1);
    CHECK(gk_g4(2, 0) == t::kGkQ2G4k0);
    CHECK(gk_g4(2, 1) == t::kGkQ2G4k1);
  }

  TEST_CASE("explicit components agree with the engine") {
    for (std::int64_t q = 2; q <= 5; ++q) CHECK_NOTHROW(gk_verify_components(q));
  }

  TEST_CASE("pure gaps") {
    CHECK(gk_pure_gaps(2).g0 == t::kGkQ2PureGaps);
    const auto r3 = gk_pure_gaps(3);
    CHECK(r3.cardinality == 3471);
    CHECK(r3.g0 == oracle::pure_gaps_direct(gk_generating_set(3)));
  }

  TEST_CASE("closed forms") {
    // polynomial values frozen from an independent evaluation
    const std::int64_t card[] = {35, 3471, 71778, 716288, 4606209, 22022007, 84991508};
    const std::int64_t upper[] = {47, 4037, 78834, 763454, 4823545, 22802955, 87339140};
    for (std::int64_t q = 2; q <= 8; ++q) {
      CHECK(gk_card_g0(q) == card[q - 2]);
      CHECK(gk_upper_bound(q) == upper[q - 2]);
    }
    for (std::int64_t q = 2; q <= 5; ++q) CHECK(bounds(decompose(gk_generating_set(q))).upper == gk_upper_bound(q));
    CHECK_THROWS_AS(gk_card_g0(1), ParameterError);
  }
}
