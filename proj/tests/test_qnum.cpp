#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles/fixtures.hpp"
#include "qis/qnum.hpp"

using qis::DeformationParameter;
using qis::q_bracket;
using qis::q_bracket_ratio;

namespace {
DeformationParameter Q(double q) { return DeformationParameter(q); }
}

TEST_CASE("bracket values at forced points") {
    CHECK(q_bracket(0.0, Q(2.0)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(q_bracket(1.0, Q(3.7)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q_bracket(2.0, Q(2.0)) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(q_bracket(5.0, Q(1.0)) == 5.0);
}

TEST_CASE("bracket ratio values") {
    CHECK(q_bracket_ratio(3.0, Q(1.0)) == 1.0);
    CHECK(q_bracket_ratio(2.0, Q(2.0)) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(q_bracket_ratio(4.0, Q(1.5)) ==
          doctest::Approx(fixtures::q_bracket_ratio_x4_q15).epsilon(1e-14));
    // x = 0 limit is 2 ln q / (q - 1/q)
    CHECK(q_bracket_ratio(0.0, Q(2.0)) ==
          doctest::Approx(2.0 * std::log(2.0) / 1.5).epsilon(1e-14));
    CHECK(q_bracket_ratio(0.0, Q(1.0)) == 1.0);
    // the limit is the continuous continuation of nearby ratios
    CHECK(q_bracket_ratio(1e-10, Q(2.0)) ==
          doctest::Approx(q_bracket_ratio(0.0, Q(2.0))).epsilon(1e-9));
}

TEST_CASE("inversion symmetry and oddness over random samples") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> xs(-20.0, 20.0);
    std::uniform_real_distribution<double> qs(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = xs(rng);
        const double q = qs(rng);
        const double v = q_bracket(x, Q(q));
        const double vi = q_bracket(x, Q(1.0 / q));
        CHECK(std::abs(v - vi) <= 1e-12 * std::max(1.0, std::abs(v)));
        const double vo = q_bracket(-x, Q(q));
        CHECK(std::abs(v + vo) <= 1e-14 * std::max(1.0, std::abs(v)));
    }
}

TEST_CASE("product identity [a][b] - [a-1][b-1] = [a+b-1]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xs(-10.0, 10.0);
    std::uniform_real_distribution<double> qs(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = xs(rng), b = xs(rng), q = qs(rng);
        const double p1 = q_bracket(a, Q(q)) * q_bracket(b, Q(q));
        const double p2 = q_bracket(a - 1, Q(q)) * q_bracket(b - 1, Q(q));
        const double rhs = q_bracket(a + b - 1, Q(q));
        // relative to the operand scale: the difference itself cancels
        const double scale = std::max({1.0, std::abs(p1), std::abs(p2)});
        CHECK(std::abs(p1 - p2 - rhs) <= 1e-10 * scale);
    }
}

TEST_CASE("continuity at q = 1") {
    const double eps = 1e-6;
    for (double x = -20.0; x <= 20.0; x += 0.5) {
        const double bound = (2.0 * x * x + 2.0) * eps;
        CHECK(std::abs(q_bracket(x, Q(1.0 + eps)) - x) <= bound);
        CHECK(std::abs(q_bracket(x, Q(1.0 - eps)) - x) <= bound);
    }
}

TEST_CASE("series branch agrees with the direct form near the switch") {
    // just inside the |q-1| <= 1e-4 window the series is active; compare
    // against the sinh form evaluated directly
    for (double q : {1.0 + 9e-5, 1.0 - 9e-5, 1.0 + 1e-6}) {
        const double t = std::log(q);
        for (double x = -20.0; x <= 20.0; x += 1.0) {
            const double direct = std::sinh(x * t) / std::sinh(t);
            CHECK(std::abs(q_bracket(x, Q(q)) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(Q(0.0), std::domain_error);
    CHECK_THROWS_AS(Q(-2.0), std::domain_error);
    CHECK_THROWS_AS(Q(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(q_bracket(std::numeric_limits<double>::infinity(), Q(2.0)), std::domain_error);
    CHECK_THROWS_AS(q_bracket_ratio(std::numeric_limits<double>::quiet_NaN(), Q(2.0)),
                    std::domain_error);
}
