#include <doctest.h>

#include <numeric>

#include "puregaps/errors.hpp"
#include "puregaps/family_kummer.hpp"
#include "puregaps/oracle.hpp"

using namespace puregaps;
using namespace puregaps::kummer;

TEST_SUITE("family_kummer") {
  TEST_CASE("parameters") {
    const KummerParams p(4, 7);
    CHECK(p.genus() == 9);
    CHECK(p.period() == 4);
    CHECK(p.last_row() == 4);
    CHECK_THROWS_AS(KummerParams(4, 6), ParameterError);
    CHECK_THROWS_AS(KummerParams(1, 3), ParameterError);
    CHECK_THROWS_AS(KummerParams(3, 1), ParameterError);
  }

  TEST_CASE("generating set m=4 r=3") {
    const auto g = kummer_generating_set(4, 3);
    CHECK(PointSet(g.points().begin(), g.points().end()) == PointSet{{1, 5}, {2, 2}, {5, 1}});
    CHECK(kummer_gamma_k0(4, 3, 0) == std::vector<LatticePoint>{{2, 2}});
    CHECK(kummer_gamma_k0(4, 3, 1) == std::vector<LatticePoint>{{5, 1}});
    CHECK(kummer_gamma_k0(4, 3, 2).empty());
  }

  TEST_CASE("components m=4 r=3") {
    CHECK(kummer_g1(4, 3, 0) == PointSet{{1, 1}});
    CHECK(kummer_g2(4, 3, 0).empty());
    CHECK(kummer_g3(4, 3, 0) == PointSet{{2, 1}});
    CHECK(kummer_g4(4, 3, 0) == PointSet{{1, 2}});
    CHECK(kummer_pure_gaps(4, 3).g0 == PointSet{{1, 1}, {1, 2}, {2, 1}});
  }

  TEST_CASE("cardinality") {
    CHECK(kummer_card_g0(4, 3) == 3);
    CHECK(kummer_card_g0(4, 7) == 29);
    CHECK(kummer_card_g0(7, 3) == 12);
    CHECK(kummer_pure_gaps(4, 7).g0 == oracle::pure_gaps_direct(kummer_generating_set(4, 7)));
  }

  TEST_CASE("special closed forms") {
    CHECK(kummer_card_special_ur1(1, 3) == 3);
    CHECK(kummer_card_special_ur1(2, 3) == 12);
    CHECK(kummer_card_special_ur1(1, 2) == 0);
    CHECK(kummer_card_special_qN(7, 2) == 29);
    CHECK(kummer_card_special_qN(8, 3) == 17);
    CHECK(kummer_card_special_qN(11, 2) == 230);
    CHECK(kummer_card_special_qN(11, 3) == 81);
    CHECK_THROWS_AS(kummer_card_special_qN(3, 2), ParameterError);   // q-2-N < 0
    CHECK_THROWS_AS(kummer_card_special_qN(8, 2), ParameterError);   // 2 does not divide 9
    CHECK_THROWS_AS(kummer_card_special_ur1(0, 3), ParameterError);
  }

  TEST_CASE("row counts against the ceiling difference") {
    for (std::int64_t m = 2; m <= 30; ++m) {
      for (std::int64_t r = 2; r <= 30; ++r) {
        if (std::gcd(m, r) != 1) continue;
        for (std::int64_t k = 0; k <= r; ++k) {
          const std::int64_t diff = (m * (k + 2) + r - 1) / r - (m * (k + 1) + r - 1) / r;
          const std::int64_t expected = k <= r - 2 ? diff : 0;
          CHECK(kummer_card_gamma_k0(m, r, k) == expected);
        }
      }
    }
  }

  TEST_CASE("m > r^2 leaves only the first rows populated") {
    for (std::int64_t r = 2; r <= 6; ++r) {
      for (std::int64_t m = r * r + 1; m <= r * r + 12; ++m) {
        if (std::gcd(m, r) != 1) continue;
        const KummerParams p(m, r);
        const auto boxed = decompose(kummer_generating_set(m, r));
        CHECK(p.last_row() == r - 2);
        for (std::int64_t k = r - 1; k < boxed.kmax; ++k) CHECK(boxed.row(k).empty());
        std::int64_t total = 0;
        for (std::int64_t k = 0; k <= r - 2; ++k) total += (k + 1) * boxed.row_size(k);
        CHECK(total == p.genus());
        CHECK_NOTHROW(kummer_verify_components(m, r));
      }
    }
  }
}
