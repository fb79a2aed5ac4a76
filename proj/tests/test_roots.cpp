#include "doctest.h"

#include "stostab/roots.hpp"

#include <array>

using namespace stostab;

TEST_CASE("quadratic with known real roots") {
    // (x-1)(x-3) = x^2 - 4x + 3
    const std::array<double, 3> c{1, -4, 3};
    const auto roots = real_roots(c);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(1.0));
    CHECK(roots[1] == doctest::Approx(3.0));
    CHECK(*smallest_positive_root(c) == doctest::Approx(1.0));
}

TEST_CASE("complex pair is filtered out") {
    const std::array<double, 3> c{1, 0, 1}; // x^2 + 1
    CHECK(real_roots(c).empty());
    CHECK_FALSE(smallest_positive_root(c).has_value());
}

TEST_CASE("cubic with mixed roots") {
    // (x+2)(x-0.5)(x-4) = x^3 - 2.5x^2 - 7x + 4
    const std::array<double, 4> c{1, -2.5, -7, 4};
    const auto roots = real_roots(c);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(-2.0));
    CHECK(roots[1] == doctest::Approx(0.5));
    CHECK(roots[2] == doctest::Approx(4.0));
    CHECK(*smallest_positive_root(c) == doctest::Approx(0.5));
}

TEST_CASE("no positive root") {
    const std::array<double, 3> c{1, 3, 2}; // roots -1, -2
    CHECK_FALSE(smallest_positive_root(c).has_value());
}

TEST_CASE("leading zeros are trimmed") {
    const std::array<double, 4> c{0, 2, -6, 4}; // 2x^2-6x+4, roots 1, 2
    const auto roots = real_roots(c);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(1.0));
}

TEST_CASE("degenerate inputs") {
    const std::array<double, 3> zeros{0, 0, 0};
    CHECK_THROWS_AS(real_roots(zeros), DegenerateAllZero);
    const std::array<double, 1> constant{5};
    CHECK(real_roots(constant).empty());
    const std::array<double, 5> quartic{1, 0, 0, 0, -1};
    CHECK_THROWS_AS(real_roots(quartic), std::invalid_argument);
}

TEST_CASE("root at zero is not counted positive") {
    const std::array<double, 3> c{1, -2, 0}; // roots 0, 2
    CHECK(*smallest_positive_root(c) == doctest::Approx(2.0));
}
