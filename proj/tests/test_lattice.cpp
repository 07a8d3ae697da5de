#include <doctest.h>

#include <sstream>

#include "puregaps/generating_set.hpp"
#include "puregaps/lattice.hpp"
#include "support/fixtures.hpp"

using namespace puregaps;
using puregaps::testing::kGkQ2Gamma;

TEST_SUITE("lattice") {
  TEST_CASE("lub") {
    CHECK(lub({1, 5}, {5, 1}) == LatticePoint{5, 5});
    CHECK(lub({3, 3}, {3, 3}) == LatticePoint{3, 3});
    CHECK(lub({10, 10}, {19, 1}) == LatticePoint{19, 10});
  }

  TEST_CASE("glb") {
    CHECK(glb({1, 5}, {5, 1}) == LatticePoint{1, 1});
    CHECK(glb({0, 0}, {7, 7}) == LatticePoint{0, 0});
    CHECK(glb({10, 10}, {19, 1}) == LatticePoint{10, 1});
  }

  TEST_CASE("incomparable") {
    CHECK(incomparable({1, 5}, {5, 1}));
    CHECK_FALSE(incomparable({3, 3}, {13, 4}));
    CHECK_FALSE(incomparable({3, 3}, {3, 5}));
    CHECK_FALSE(incomparable({3, 3}, {3, 3}));
  }

  TEST_CASE("negative coordinates are rejected") {
    CHECK_THROWS_AS(LatticePoint(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(LatticePoint(0, -1), std::invalid_argument);
  }

  TEST_CASE("translation") {
    const TranslationVector w1{1, 9};
    CHECK((LatticePoint{11, 2} + w1) == LatticePoint{2, 11});
    CHECK((LatticePoint{2, 11} - w1) == LatticePoint{11, 2});
    CHECK_THROWS_AS(LatticePoint(3, 3) + w1, std::invalid_argument);
    const TranslationVector huge{-1, INT64_MAX};
    CHECK_THROWS_AS(LatticePoint(1, 1) + huge, OverflowError);
  }

  TEST_CASE("normalize and swap") {
    PointSet s{{2, 1}, {1, 2}, {2, 1}};
    normalize(s);
    CHECK(s == PointSet{{1, 2}, {2, 1}});
    CHECK(swapped(PointSet{{1, 3}, {2, 5}}) == PointSet{{3, 1}, {5, 2}});
    std::ostringstream os;
    os << LatticePoint{4, 7};
    CHECK(os.str() == "(4,7)");
  }
}

TEST_SUITE("generating_set") {
  TEST_CASE("GK q=2 set is valid") {
    const auto g = validate_generating_set(kGkQ2Gamma, 9);
    CHECK(g.genus() == 10);
    CHECK(g.period() == 9);
    CHECK(g.tau(2) == 11);
    CHECK(g.tau(11) == 2);
    CHECK_FALSE(g.tau(6).has_value());
    CHECK(g.is_diagonal());
    CHECK(g.is_swap_symmetric());
    CHECK(g.points().front() == LatticePoint{1, 19});
  }

  TEST_CASE("empty set with period 1") {
    const auto g = validate_generating_set({}, 1);
    CHECK(g.genus() == 0);
    CHECK(g.is_diagonal());
  }

  auto kind_of = [](std::vector<LatticePoint> pts, std::int64_t period) {
    try {
      (void)validate_generating_set(pts, period);
    } catch (const ValidationError& e) {
      return std::optional<ValidationError>(e);
    }
    return std::optional<ValidationError>();
  };

  TEST_CASE("rejections") {
    using K = ValidationErrorKind;
    auto e = kind_of({{3, 3}, {12, 5}}, 9);
    REQUIRE(e);
    CHECK(e->kind() == K::PeriodPropertyViolation);

    e = kind_of({}, 0);
    REQUIRE(e);
    CHECK(e->kind() == K::NonPositivePeriod);

    e = kind_of({{1, 2}, {1, 3}}, 5);
    REQUIRE(e);
    CHECK(e->kind() == K::DuplicateFirstCoordinate);
    CHECK(e->index() == 1);

    e = kind_of({{1, 2}, {3, 2}}, 5);
    REQUIRE(e);
    CHECK(e->kind() == K::DuplicateSecondCoordinate);

    e = kind_of({{0, 2}}, 5);
    REQUIRE(e);
    CHECK(e->kind() == K::ZeroOrNegativeCoordinate);

    e = kind_of({{1, 1}, {5, 2}}, 5);
    REQUIRE(e);
    CHECK(e->kind() == K::CoordinateDivisibleByPeriod);
    CHECK(e->point() == LatticePoint{5, 2});

    // period property holds, but a single gap cannot exceed 2g - 1 = 1
    e = kind_of({{3, 3}}, 9);
    REQUIRE(e);
    CHECK(e->kind() == K::CoordinateExceedsGenusBound);
  }

  TEST_CASE("kind names") {
    CHECK(to_string(ValidationErrorKind::PeriodPropertyViolation) == "PeriodPropertyViolation");
    CHECK(to_string(ValidationErrorKind::DuplicateFirstCoordinate) == "DuplicateFirstCoordinate");
  }
}
