#include "doctest.h"

#include "stostab/quadratic_form.hpp"

#include <cmath>
#include <random>

using namespace stostab;

namespace {

// Independent path: evaluate LV pointwise from the generator definition
// rather than through the coefficient formulas.
double generator_pointwise(const SystemSpec& s, const QuadraticForm& v, double x, double y) {
    const double vx = 2 * v.p * x + 2 * v.q * y;
    const double vy = 2 * v.q * x + 2 * v.r * y;
    const double sx = s.e * x + s.f * y;
    const double sy = s.g * x + s.h * y;
    return (s.a * x + s.b * y) * vx + (s.c * x + s.m * y) * vy +
           0.5 * (sx * sx * 2 * v.p + 2 * sx * sy * 2 * v.q + sy * sy * 2 * v.r);
}

} // namespace

TEST_CASE("generator image matches pointwise evaluation") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        SystemSpec s{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        QuadraticForm v{u(rng), u(rng), u(rng)};
        const QuadraticForm lv = apply_generator(s, v);
        for (double x : {1.0, -0.5, 0.3})
            for (double y : {0.7, -1.2}) {
                CHECK(lv.evaluate(x, y) ==
                      doctest::Approx(generator_pointwise(s, v, x, y)).epsilon(1e-10));
            }
    }
}

TEST_CASE("generator is linear in the form") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        SystemSpec s{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        QuadraticForm v1{u(rng), u(rng), u(rng)}, v2{u(rng), u(rng), u(rng)};
        const double alpha = u(rng);
        const QuadraticForm lhs = apply_generator(s, v1 * alpha + v2);
        const QuadraticForm rhs = apply_generator(s, v1) * alpha + apply_generator(s, v2);
        CHECK(lhs.p == doctest::Approx(rhs.p).epsilon(1e-12));
        CHECK(lhs.q == doctest::Approx(rhs.q).epsilon(1e-12));
        CHECK(lhs.r == doctest::Approx(rhs.r).epsilon(1e-12));
    }
}

TEST_CASE("generator requires Ito form") {
    SystemSpec s{0, 1, -1, -1, 1, 0, 0, 0, Calculus::Stratonovich};
    CHECK_THROWS_AS(apply_generator(s, QuadraticForm{1, 0, 1}), CalculusError);
}

TEST_CASE("definiteness tests") {
    CHECK(is_positive_definite({1, 0, 1}));
    CHECK(is_positive_definite({2, 1, 1}));
    CHECK_FALSE(is_positive_definite({1, 2, 1}));   // indefinite
    CHECK_FALSE(is_positive_definite({-1, 0, -1}));
    CHECK(is_negative_definite({-1, 0, -1}));
    CHECK_FALSE(is_negative_definite({-1, 1, -1})); // det = 0
    CHECK(is_negative_semidefinite({-1, 1, -1}));
    CHECK(is_negative_semidefinite({0, 0, 0}));
    CHECK_FALSE(is_negative_semidefinite({1e-6, 0, -1}));
}

TEST_CASE("single-e certificate expands (am-bc)x^2 + (mx-by)^2") {
    SystemSpec s{-2, 1, 1, -1, 0.5, 0, 0, 0};
    const QuadraticForm v = build_certificate(s, NoisePattern::OnlyE,
                                              StabilityNotion::ProbabilityStability);
    const double det = s.a * s.m - s.b * s.c;
    CHECK(v.p == doctest::Approx(det + s.m * s.m));
    CHECK(v.q == doctest::Approx(-s.m * s.b));
    CHECK(v.r == doctest::Approx(s.b * s.b));
}

TEST_CASE("single-e mean-square certificate verifies below the bound") {
    // a+m=-3 < 0, am-bc=1 > 0, bound is positive; e^2 = 0.25 is inside
    SystemSpec s{-2, 1, 1, -1, 0.5, 0, 0, 0};
    const QuadraticForm v = build_certificate(s, NoisePattern::OnlyE,
                                              StabilityNotion::ProbabilityStability);
    const CertificateReport rep = verify_certificate(s, v);
    CHECK(rep.v_positive_definite);
    CHECK(rep.lv_negative_semidefinite);
    CHECK(rep.circle_check_passed);
}

TEST_CASE("unsupported pattern/notion pairs throw") {
    SystemSpec s{-2, 1, 1, -1, 0, 0, 0.5, 0.5};
    CHECK_THROWS_AS(build_certificate(s, NoisePattern::Unsupported,
                                      StabilityNotion::ProbabilityStability),
                    UnsupportedPattern);
}

TEST_CASE("dual-pattern certificates come back in swapped coordinates") {
    // OnlyG spec: its certificate must be the dual's with x and y swapped,
    // so V(x, y) here equals V_dual(y, x).
    SystemSpec s{-1, 1, -0.5, -2, 0, 0, 0.4, 0};
    const QuadraticForm v = build_certificate(s, NoisePattern::OnlyG,
                                              StabilityNotion::ProbabilityStability);
    const SystemSpec d = dual_transform(s);
    const QuadraticForm vd = build_certificate(d, NoisePattern::OnlyF,
                                               StabilityNotion::ProbabilityStability);
    CHECK(v.p == doctest::Approx(vd.r));
    CHECK(v.q == doctest::Approx(vd.q));
    CHECK(v.r == doctest::Approx(vd.p));
}
