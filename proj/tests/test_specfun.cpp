#include "fracops/specfun.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

using fracops::mittag_leffler;
using fracops::testing::rel_err;

TEST_CASE("gamma known values") {
    CHECK(fracops::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_err(fracops::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-15);
    // mpmath, 40 digits
    CHECK(rel_err(fracops::gamma(1.0 / 9.0), 8.5226881392194759505) < 1e-12);
    CHECK(rel_err(fracops::gamma(27.0 / 70.0), 2.3025736968906668225) < 1e-12);
    CHECK(rel_err(fracops::gamma(50.0), 6.0828186403426756087e62) < 1e-12);
}

TEST_CASE("gamma recurrence on (0, 20]") {
    for (int k = 1; k <= 2000; ++k) {
        const double x = 20.0 * k / 2000.0;
        CHECK(rel_err(fracops::gamma(x + 1.0), x * fracops::gamma(x)) <= 1e-12);
    }
}

TEST_CASE("gamma rejects non-positive and overflowing arguments") {
    CHECK_THROWS_AS(fracops::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(fracops::gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(fracops::gamma(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(fracops::gamma(200.0), std::overflow_error);
}

TEST_CASE("mittag_leffler trivial values") {
    for (double a : {0.05, 0.3, 2.0 / 3.0, 0.9, 1.0}) CHECK(mittag_leffler(a, 0.0) == 1.0);
    CHECK(rel_err(mittag_leffler(1.0, 1.0), std::numbers::e) < 1e-15);
}

TEST_CASE("mittag_leffler order 1/2 matches the erfc identity") {
    // E_{1/2}(z) = exp(z^2) erfc(-z); covers both the series and integral routes.
    CHECK(rel_err(mittag_leffler(0.5, 1.0), 5.0089800807622834663) < 1e-13);
    CHECK(rel_err(mittag_leffler(0.5, -1.0), 0.42758357615580700441) < 1e-13);
    CHECK(rel_err(mittag_leffler(0.5, -5.0), 0.11070463773306862637) < 1e-12);
    for (int k = 0; k <= 300; ++k) {
        const double z = -25.0 + 30.0 * k / 300.0;
        const double want = std::exp(z * z) * std::erfc(-z);
        CHECK(rel_err(mittag_leffler(0.5, z), want) < 1e-11);
    }
}

TEST_CASE("mittag_leffler generic orders against high-precision series") {
    // Series summed at 200 digits with mpmath.
    CHECK(rel_err(mittag_leffler(0.9, -20.0), 0.0057495078161091138828) < 1e-11);
    CHECK(rel_err(mittag_leffler(0.7, -3.0), 0.13789710966502707183) < 1e-12);
    CHECK(rel_err(mittag_leffler(2.0 / 3.0, -9.2831776672255), 0.043000965855496436179) < 1e-11);
    CHECK(rel_err(mittag_leffler(0.3, -2.0), 0.29023222616787535326) < 1e-12);
    CHECK(rel_err(mittag_leffler(0.9, -71.4), 0.0015075011948718190635) < 1e-11);
    CHECK(rel_err(mittag_leffler(0.75, 4.0), 762.96668169426913489) < 1e-13);
}

TEST_CASE("E_1 agrees with exp") {
    for (int k = 0; k <= 200; ++k) {
        const double z = -5.0 + 10.0 * k / 200.0;
        CHECK(rel_err(mittag_leffler(1.0, z), std::exp(z)) <= 1e-10);
    }
    CHECK(rel_err(mittag_leffler(1.0, -40.0), std::exp(-40.0)) < 1e-13);
}

TEST_CASE("mittag_leffler is increasing on [0, 10]") {
    for (double a : {0.5, 2.0 / 3.0, 0.9, 1.0}) {
        double prev = mittag_leffler(a, 0.0);
        for (int k = 1; k <= 100; ++k) {
            const double cur = mittag_leffler(a, 0.1 * k);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("mittag_leffler argument checks") {
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(1.2, 1.0), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(0.5, 50.5), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(0.5, -1000.5), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(0.1, 50.0), std::overflow_error);
}
