#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hermitewave/core_math.hpp"
#include "hermitewave/errors.hpp"

using namespace hermitewave;
using math::hermite_pair;

namespace {

// Explicit coefficient forms, independent of the recurrence.
double hermite_explicit(int n, double y) {
    switch (n) {
        case 0: return 1.0;
        case 1: return 2.0 * y;
        case 2: return 4.0 * y * y - 2.0;
        case 3: return 8.0 * y * y * y - 12.0 * y;
        case 4: return 16.0 * std::pow(y, 4) - 48.0 * y * y + 12.0;
        case 5: return 32.0 * std::pow(y, 5) - 160.0 * std::pow(y, 3) + 120.0 * y;
        default: return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

TEST_CASE("hermite_pair reproduces low orders") {
    auto h0 = hermite_pair(0, 3.7);
    CHECK(h0.h_n == 1.0);
    CHECK(h0.h_nm1 == 0.0);

    auto h1 = hermite_pair(1, 2.0);
    CHECK(h1.h_n == 4.0);
    CHECK(h1.h_nm1 == 1.0);

    auto h2 = hermite_pair(2, 1.5);
    CHECK(h2.h_n == 7.0);
    CHECK(h2.h_nm1 == 3.0);

    for (int n = 0; n <= 5; ++n) {
        for (double y : {-3.1, -0.4, 0.0, 0.7, 2.25}) {
            CHECK(hermite_pair(n, y).h_n == doctest::Approx(hermite_explicit(n, y)).epsilon(1e-13));
        }
    }
}

TEST_CASE("hermite_pair rejects bad input") {
    CHECK_THROWS_AS(hermite_pair(2, std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(hermite_pair(2, std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(hermite_pair(-1, 0.5), DomainError);
}

TEST_CASE("hermite properties over random arguments") {
    std::mt19937_64 rng(20261017);
    std::uniform_int_distribution<int> order(1, 30);
    std::uniform_real_distribution<double> arg(-20.0, 20.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = order(rng);
        const double y = arg(rng);
        const auto here = hermite_pair(n, y);
        const auto next = hermite_pair(n + 1, y);
        const double rhs = 2.0 * y * here.h_n - 2.0 * n * here.h_nm1;
        const double scale = std::max({std::abs(next.h_n), std::abs(2.0 * y * here.h_n), 1.0});
        CHECK(std::abs(next.h_n - rhs) <= 1e-12 * scale);

        const auto mirrored = hermite_pair(n, -y);
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        CHECK(std::abs(mirrored.h_n - sign * here.h_n) <= 1e-12 * std::max(1.0, std::abs(here.h_n)));
    }
}

TEST_CASE("hermite derivative identity H_n' = 2n H_{n-1}") {
    constexpr double h = 1e-5;
    for (int n = 1; n <= 12; ++n) {
        for (double y : {-2.3, -0.9, 0.15, 1.1, 2.7}) {
            const double numeric = (math::hermite(n, y + h) - math::hermite(n, y - h)) / (2.0 * h);
            const double exact = 2.0 * n * hermite_pair(n, y).h_nm1;
            CHECK(std::abs(numeric - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("log_norm_constant matches direct prefactor") {
    const double pi = std::numbers::pi;
    CHECK(math::log_norm_constant({0, 1.0, 1.0, 0.5}) == doctest::Approx(std::log(std::pow(0.5 / pi, 0.25))));
    CHECK(math::log_norm_constant({0, 1.0, 1.0, 0.5}) == doctest::Approx(-0.459469).epsilon(1e-6));
    CHECK(std::abs(math::log_norm_constant({0, 1.0, 1.0, pi})) < 1e-15);
    const double n2 = std::log(std::sqrt(1.0 / 2.0) * 0.5 * std::pow(0.5 / pi, 0.25));
    CHECK(math::log_norm_constant({2, 1.0, 1.0, 0.5}) == doctest::Approx(n2).epsilon(1e-14));
    CHECK(math::log_norm_constant({2, 1.0, 1.0, 0.5}) == doctest::Approx(-1.499190).epsilon(1e-6));

    // factorial of 200 overflows a double; the log form does not
    CHECK(std::isfinite(math::log_norm_constant({200, 1.0, 1.0, 0.5})));
    CHECK_THROWS_AS(math::log_norm_constant({0, 0.0, 1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(math::log_norm_constant({0, -1.0, 1.0, 0.5}), DomainError);
}

TEST_CASE("integrate") {
    auto one = math::integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-10);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.abs_error_estimate >= 0.0);
    CHECK(one.evaluations > 0);

    auto gauss = math::integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0, 1e-10);
    CHECK(std::abs(gauss.value - std::sqrt(std::numbers::pi)) < 1e-10);
    CHECK(gauss.abs_error_estimate <= 1e-10);

    auto odd = math::integrate([](double x) { return x * std::exp(-x * x); }, -10.0, 10.0, 1e-10);
    CHECK(std::abs(odd.value) < 1e-12);

    // polynomial of degree 22 is integrated exactly by one K15 panel
    auto poly = math::integrate([](double x) { return std::pow(x, 22); }, 0.0, 1.0, 1e-14);
    CHECK(poly.value == doctest::Approx(1.0 / 23.0).epsilon(1e-14));
}

TEST_CASE("integrate reports non-convergence with best estimate") {
    math::QuadratureOptions tight;
    tight.max_intervals = 3;
    try {
        (void)math::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-15, tight);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.best_estimate() == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
        CHECK(e.error_estimate() > 1e-15);
    }
    CHECK_THROWS_AS(math::integrate([](double x) { return x; }, 1.0, 0.0, 1e-8), DomainError);
    CHECK_THROWS_AS(math::integrate([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("find_root") {
    CHECK(math::find_root([](double x) { return x - 1.0; }, 0.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    // n = 1 peak condition 2 H_0 = xi H_1
    CHECK(std::abs(math::find_root([](double x) { return 2.0 - 2.0 * x * x; }, 0.5, 2.0) - 1.0) < 1e-12);
    // n = 2 reduced peak condition
    CHECK(std::abs(math::find_root([](double x) { return x * x - 2.5; }, 1.0, 2.0) - std::sqrt(2.5)) < 1e-12);
    // strongly curved function still converges (bisection fallback)
    CHECK(std::abs(math::find_root([](double x) { return std::pow(x, 9) - 0.5; }, 0.0, 3.0) -
                   std::pow(0.5, 1.0 / 9.0)) < 1e-12);

    CHECK_THROWS_AS(math::find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
    CHECK_THROWS_AS(math::find_root([](double x) { return x; }, 1.0, -1.0), BracketError);
}
