#include "hermitewave/semiclassics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hermitewave/core_math.hpp"
#include "hermitewave/errors.hpp"
#include "hermitewave/wavefunction.hpp"

namespace hermitewave {

PhasePoint initial_conditions(const WaveParams& params, double theta) {
    const double e = energy(params);
    const double omega = params.omega();
    const double p_amplitude = std::sqrt(2.0 * params.m * e);
    const double x_amplitude = std::sqrt(2.0 * e / (params.m * omega * omega));
    return {x_amplitude * std::cos(theta), p_amplitude * std::sin(theta), theta};
}

PhasePoint evolve_path(const PhasePoint& point, double t, double m) {
    if (!(m > 0.0)) throw DomainError("mass must be positive");
    return {point.x + point.p * t / m, point.p, point.theta};
}

PathFamily phase_space_snapshot(const WaveParams& params, double t, std::size_t n_theta) {
    params.validate();
    if (n_theta < 3) throw DomainError("phase_space_snapshot needs at least 3 angles");
    PathFamily family{params, t, {}, {}};
    family.thetas.resize(n_theta);
    family.points.resize(n_theta);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_theta);
    for (std::size_t i = 0; i < n_theta; ++i) {
        family.thetas[i] = step * static_cast<double>(i);
        family.points[i] = evolve_path(initial_conditions(params, family.thetas[i]), t, params.m);
    }
    return family;
}

double enclosed_area(const PathFamily& family) {
    const auto& pts = family.points;
    double twice_area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        twice_area += a.x * b.p - b.x * a.p;
    }
    return 0.5 * std::abs(twice_area);
}

double family_extent(const WaveParams& params, double t, std::size_t n_theta) {
    const PathFamily family = phase_space_snapshot(params, t, n_theta);
    auto extent_at = [&](double theta) {
        return std::abs(evolve_path(initial_conditions(params, theta), t, params.m).x);
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < n_theta; ++i) {
        if (std::abs(family.points[i].x) > std::abs(family.points[best].x)) best = i;
    }
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_theta);
    // |x(theta)| is a shifted |cos|, unimodal within one step of the best sample.
    double lo = family.thetas[best] - step;
    double hi = family.thetas[best] + step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = extent_at(a);
    double fb = extent_at(b);
    while (hi - lo > 1e-12) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = extent_at(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = extent_at(a);
        }
    }
    return std::max({fa, fb, std::abs(family.points[best].x)});
}

CausticPair caustic(const WaveParams& params, double t) {
    const double x = std::sqrt(2.0 * energy(params) / params.m)
                     * std::sqrt(params.t_c * params.t_c + t * t);
    return {x, -x};
}

CausticBranch caustic_branch(const WaveParams& params, int sign, const std::vector<double>& times) {
    if (sign != 1 && sign != -1) throw DomainError("caustic branch sign must be +1 or -1");
    CausticBranch branch{sign, {}};
    branch.samples.reserve(times.size());
    for (double t : times) {
        const auto c = caustic(params, t);
        branch.samples.emplace_back(t, sign > 0 ? c.x_plus : c.x_minus);
    }
    return branch;
}

namespace {

double residual_in_xi(int n, double xi) {
    const auto h = math::hermite_pair(n, xi);
    return 2.0 * n * h.h_nm1 - xi * h.h_n;
}

}  // namespace

double peak_condition_residual(const WaveParams& params, double x, double t) {
    return residual_in_xi(params.n, scaled_coordinate(params, x, t));
}

std::vector<double> find_peaks(const WaveParams& params, double t) {
    params.validate();
    const int n = params.n;
    const double xi_max = std::sqrt(2.0 * n + 1.0) + 4.0;
    // Maxima are separated by at least the spacing of consecutive Hermite
    // zeros (~ pi / sqrt(2n + 1)); sample well below that.
    const std::size_t samples = 200 * static_cast<std::size_t>(n + 1) + 1;
    const double step = 2.0 * xi_max / static_cast<double>(samples - 1);
    auto f = [n](double xi) { return residual_in_xi(n, xi); };

    std::vector<double> roots;
    double xi_prev = -xi_max;
    double f_prev = f(xi_prev);
    if (f_prev == 0.0) roots.push_back(xi_prev);
    for (std::size_t i = 1; i < samples; ++i) {
        const double xi = -xi_max + static_cast<double>(i) * step;
        const double fx = f(xi);
        if (fx == 0.0) {
            roots.push_back(xi);
        } else if (f_prev != 0.0 && (fx < 0.0) != (f_prev < 0.0)) {
            roots.push_back(math::find_root(f, xi_prev, xi, 1e-14));
        }
        xi_prev = xi;
        f_prev = fx;
    }

    // Keep only strict maxima of e^{-xi^2} H_n(xi)^2.
    auto scaled_density = [n](double xi) {
        const double h = math::hermite(n, xi);
        return std::exp(-xi * xi) * h * h;
    };
    const double scale = envelope_scale(params, t);
    std::vector<double> peaks;
    constexpr double kProbe = 1e-4;
    for (double xi : roots) {
        const double centre = scaled_density(xi);
        const double curvature = scaled_density(xi + kProbe) - 2.0 * centre + scaled_density(xi - kProbe);
        if (curvature < 0.0) peaks.push_back(xi * scale);
    }
    std::sort(peaks.begin(), peaks.end());
    return peaks;
}

CausticPair peak_hyperbola_n2(const WaveParams& params, double t) {
    const double x = std::sqrt(5.0 * params.hbar / (2.0 * params.m * params.t_c))
                     * std::sqrt(params.t_c * params.t_c + t * t);
    return {x, -x};
}

}  // namespace hermitewave
