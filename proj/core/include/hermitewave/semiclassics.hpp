#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hermitewave/types.hpp"

namespace hermitewave {

/// One member of the classical ensemble: position, momentum and the angle
/// that labels it on the t = 0 energy shell.
struct PhasePoint {
    double x = 0.0;
    double p = 0.0;
    double theta = 0.0;
};

/// The ensemble evolved to time t; thetas are uniform on [0, 2 pi) starting at 0.
struct PathFamily {
    WaveParams params;
    double t = 0.0;
    std::vector<double> thetas;
    std::vector<PhasePoint> points;
};

struct CausticPair {
    double x_plus = 0.0;
    double x_minus = 0.0;
};

/// One sign of the hyperbolic envelope sampled over time.
struct CausticBranch {
    int sign = 1;
    std::vector<std::pair<double, double>> samples;  // (t, x)
};

/// p0 = sqrt(2 m E_n) sin(theta), x0 = sqrt(2 E_n / (m omega^2)) cos(theta).
PhasePoint initial_conditions(const WaveParams& params, double theta);

/// Free motion: p constant, x = x0 + p t / m.
PhasePoint evolve_path(const PhasePoint& point, double t, double m);

/// The n_theta-member family on the energy shell, evolved to time t.
PathFamily phase_space_snapshot(const WaveParams& params, double t, std::size_t n_theta);

/// Shoelace area of the closed (x, p) polygon traced by the family.
double enclosed_area(const PathFamily& family);

/// Largest |x| reached by any member of the family at time t. The sampled
/// maximum over n_theta angles is refined by golden-section search between
/// the neighbouring samples.
double family_extent(const WaveParams& params, double t, std::size_t n_theta);

/// Envelope of the straight-line family: x = +-sqrt(2 E_n / m) sqrt(t_c^2 + t^2).
CausticPair caustic(const WaveParams& params, double t);

CausticBranch caustic_branch(const WaveParams& params, int sign, const std::vector<double>& times);

/// 2n H_{n-1}(xi) - xi H_n(xi) at the scaled coordinate of (x, t); zero at
/// density maxima.
double peak_condition_residual(const WaveParams& params, double x, double t);

/// All density maxima at time t, ascending in x.
std::vector<double> find_peaks(const WaveParams& params, double t);

/// Closed-form outer-peak locus for n = 2: +-sqrt(5 hbar / (2 m t_c)) sqrt(t_c^2 + t^2).
/// params.n is ignored.
CausticPair peak_hyperbola_n2(const WaveParams& params, double t);

}  // namespace hermitewave
