#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hermitewave/errors.hpp"
#include "hermitewave/semiclassics.hpp"
#include "hermitewave/wavefunction.hpp"

using namespace hermitewave;

namespace {

WaveParams au(int n, double t_c = 1.0) { return {n, t_c, 1.0, 0.5}; }
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("initial_conditions lie on the energy shell") {
    const WaveParams p = au(2);
    auto a = initial_conditions(p, 0.0);
    CHECK(a.x == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(a.p == 0.0);
    auto b = initial_conditions(p, kPi / 2);
    CHECK(std::abs(b.x) < 1e-15);
    CHECK(b.p == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
    auto c = initial_conditions(p, kPi);
    CHECK(c.x == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-15));
    CHECK(std::abs(c.p) < 1e-15);

    for (double theta = 0.0; theta < 2 * kPi; theta += 0.1) {
        const auto q = initial_conditions(p, theta);
        const double shell = q.p * q.p / (2 * p.m) + 0.5 * p.m * p.omega() * p.omega() * q.x * q.x;
        CHECK(std::abs(shell - energy(p)) <= 1e-12 * energy(p));
    }
}

TEST_CASE("evolve_path is straight-line motion") {
    auto still = evolve_path({std::sqrt(5.0), 0.0, 0.0}, 7.0, 0.5);
    CHECK(still.x == std::sqrt(5.0));
    CHECK(still.p == 0.0);

    auto moving = evolve_path({0.0, std::sqrt(1.25), kPi / 2}, 2.0, 0.5);
    CHECK(moving.x == doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));

    const PhasePoint q{1.3, -0.4, 0.2};
    auto same = evolve_path(q, 0.0, 0.5);
    CHECK(same.x == q.x);
    CHECK(same.p == q.p);
    CHECK_THROWS_AS(evolve_path(q, 1.0, 0.0), DomainError);
}

TEST_CASE("phase_space_snapshot") {
    const WaveParams p = au(2);
    auto start = phase_space_snapshot(p, 0.0, 64);
    REQUIRE(start.thetas.size() == 64);
    CHECK(start.thetas.front() == 0.0);
    for (std::size_t i = 1; i < start.thetas.size(); ++i) {
        CHECK(start.thetas[i] > start.thetas[i - 1]);
        CHECK(start.thetas[i] - start.thetas[i - 1] == doctest::Approx(2 * kPi / 64));
    }
    for (const auto& q : start.points) {
        const double shell = q.p * q.p / (2 * p.m) + 0.5 * p.m * p.omega() * p.omega() * q.x * q.x;
        CHECK(std::abs(shell - 1.25) < 1e-12);
    }

    auto later = phase_space_snapshot(p, 1.7, 64);
    for (std::size_t i = 0; i < 64; ++i) CHECK(later.points[i].p == start.points[i].p);

    CHECK_THROWS_AS(phase_space_snapshot(p, 0.0, 2), DomainError);
}

TEST_CASE("Liouville: enclosed phase-space area is constant") {
    for (int n : {0, 2, 5}) {
        const WaveParams p = au(n);
        const double expected = 2 * kPi * energy(p) * p.t_c;
        for (double t : {0.0, 0.5, 1.0, 2.0}) {
            const double area = enclosed_area(phase_space_snapshot(p, t, 4096));
            CHECK(std::abs(area - expected) <= 1e-3 * expected);
        }
    }
}

TEST_CASE("caustic") {
    const WaveParams p = au(2);
    auto c0 = caustic(p, 0.0);
    CHECK(c0.x_plus == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(c0.x_minus == -c0.x_plus);
    auto c2 = caustic(p, 2.0);
    CHECK(c2.x_plus == doctest::Approx(5.0).epsilon(1e-15));
    for (double t : {0.3, 1.0, 3.7}) CHECK(caustic(p, -t).x_plus == caustic(p, t).x_plus);

    auto branch = caustic_branch(p, -1, {-1.0, 0.0, 2.0});
    REQUIRE(branch.samples.size() == 3);
    CHECK(branch.samples[2].second == doctest::Approx(-5.0));
    for (auto [t, x] : branch.samples) CHECK(std::abs(x) >= c0.x_plus);
    CHECK_THROWS_AS(caustic_branch(p, 0, {0.0}), DomainError);
}

TEST_CASE("caustic scaling law x^2 m / (2 (t_c^2 + t^2)) = E_n") {
    for (int n = 0; n <= 6; ++n) {
        for (double t_c : {0.5, 1.0, 3.0}) {
            const WaveParams p = au(n, t_c);
            for (double t : {-2.0, 0.0, 1.1}) {
                const double x = caustic(p, t).x_plus;
                CHECK(std::abs(x * x * p.m / (2 * (t_c * t_c + t * t)) - energy(p)) <= 1e-12 * energy(p));
            }
        }
    }
}

TEST_CASE("caustic equals the n = 2 peak hyperbola") {
    const WaveParams p = au(2);
    for (int i = 0; i <= 1000; ++i) {
        const double t = -5.0 + 0.01 * i;
        CHECK(std::abs(caustic(p, t).x_plus - peak_hyperbola_n2(p, t).x_plus) < 1e-12);
    }
}

TEST_CASE("envelope bound and tangency") {
    const WaveParams p = au(2);
    for (double t : {-3.0, -0.4, 0.0, 1.2, 3.4}) {
        const double bound = caustic(p, t).x_plus;
        for (const auto& q : phase_space_snapshot(p, t, 4096).points) CHECK(std::abs(q.x) <= bound + 1e-12);
        CHECK(std::abs(family_extent(p, t, 4096) - bound) < 1e-6);
        CHECK(std::abs(family_extent(p, t, 16) - bound) < 1e-6);
    }
}

TEST_CASE("peak condition residual") {
    const WaveParams p1 = au(1);
    CHECK(std::abs(peak_condition_residual(p1, std::sqrt(2.0), 0.0)) < 1e-14);
    const double x1 = std::sqrt(1.0 * (1.0 + 9.0) / (0.5 * 1.0));  // xi = 1 at t = 3
    CHECK(std::abs(peak_condition_residual(p1, x1, 3.0)) < 1e-13);

    const WaveParams p2 = au(2);
    CHECK(peak_condition_residual(p2, 0.0, 0.0) == 0.0);
    CHECK(std::abs(peak_condition_residual(p2, std::sqrt(5.0), 0.0)) < 1e-13);
    CHECK(std::abs(peak_condition_residual(p2, 1.7, 0.0)) > 1e-3);

    const WaveParams p0 = au(0);
    CHECK(peak_condition_residual(p0, 0.0, 0.0) == 0.0);
    CHECK(peak_condition_residual(p0, 1.0, 0.0) != 0.0);
}

TEST_CASE("find_peaks") {
    const WaveParams p2 = au(2);
    auto at0 = find_peaks(p2, 0.0);
    REQUIRE(at0.size() == 3);
    CHECK(std::abs(at0[0] + std::sqrt(5.0)) < 1e-8);
    CHECK(std::abs(at0[1]) < 1e-8);
    CHECK(std::abs(at0[2] - std::sqrt(5.0)) < 1e-8);

    auto at2 = find_peaks(p2, 2.0);
    REQUIRE(at2.size() == 3);
    CHECK(std::abs(at2[0] + 5.0) < 1e-8);
    CHECK(std::abs(at2[2] - 5.0) < 1e-8);

    for (double t : {-2.0, 0.0, 3.0}) {
        auto g = find_peaks(au(0), t);
        REQUIRE(g.size() == 1);
        CHECK(std::abs(g[0]) < 1e-12);
    }

    auto odd = find_peaks(au(1), 0.0);
    REQUIRE(odd.size() == 2);
    CHECK(std::abs(odd[1] - std::sqrt(2.0)) < 1e-8);
}

TEST_CASE("find_peaks returns strict density maxima, n + 1 of them") {
    for (int n = 0; n <= 12; ++n) {
        const WaveParams p = au(n);
        for (double t : {-1.5, 0.0, 2.5}) {
            auto peaks = find_peaks(p, t);
            CHECK(peaks.size() == static_cast<std::size_t>(n + 1));
            for (double x : peaks) {
                const double h = 1e-3 * envelope_scale(p, t);
                CHECK(density(p, x + h, t) < density(p, x, t));
                CHECK(density(p, x - h, t) < density(p, x, t));
            }
        }
    }
}

TEST_CASE("peak_hyperbola_n2") {
    auto a = peak_hyperbola_n2(au(2), 0.0);
    CHECK(a.x_plus == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(peak_hyperbola_n2(au(2), 2.0).x_plus == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(peak_hyperbola_n2(au(2, 2.0), 0.0).x_plus == doctest::Approx(std::sqrt(10.0)).epsilon(1e-15));
    // n is ignored
    CHECK(peak_hyperbola_n2(au(7), 1.0).x_plus == peak_hyperbola_n2(au(2), 1.0).x_plus);
}

TEST_CASE("outer quantum peak vs classical caustic for other n (reported only)") {
    for (int n = 1; n <= 6; ++n) {
        const WaveParams p = au(n);
        const double outer = find_peaks(p, 0.0).back();
        const double edge = caustic(p, 0.0).x_plus;
        MESSAGE("n=" << n << " outer peak " << outer << " caustic " << edge << " ratio " << outer / edge);
    }
}
