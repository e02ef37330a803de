#pragma once

#include <functional>

#include "hermitewave/core_math.hpp"
#include "hermitewave/types.hpp"

namespace hermitewave {

/// Width of the envelope at time t: s(t) = sqrt(hbar (t_c^2 + t^2) / (m t_c)).
/// The Hermite argument is xi = x / s(t).
double envelope_scale(const WaveParams& params, double t);

/// xi = sqrt(m t_c / (hbar (t_c^2 + t^2))) x
double scaled_coordinate(const WaveParams& params, double x, double t);

/// Half-width |x| beyond which the density tail carries less than 1e-16 of the mass.
double support_half_width(const WaveParams& params, double t);

/// Evaluates the non-separable Hermite solution of the free-particle
/// Schrodinger equation at (x, t). Reduces to the centred Gaussian packet
/// for n = 0 and to the oscillator eigenfunction with omega = 1/t_c at t = 0.
Complex psi(const WaveParams& params, double x, double t);

/// d psi / dx, using H_n' = 2n H_{n-1}.
Complex psi_dx(const WaveParams& params, double x, double t);

/// Oscillator eigenfunction with omega = 1/t_c; equals psi(params, x, 0).
double psi_initial(const WaveParams& params, double x);

/// |psi|^2 from the phase-free closed form.
double density(const WaveParams& params, double x, double t);

/// Density on every x-node of `grid` at time t, evaluated in parallel.
RealField density_grid(const WaveParams& params, const GridSpec& grid, double t);

/// Complex amplitude on every x-node of `grid` at time t.
ComplexField sample_psi(const WaveParams& params, const GridSpec& grid, double t);

/// Grid of +-8 envelope standard deviations around the origin at time t.
GridSpec default_grid(const WaveParams& params, double t, std::size_t nx);

/// E_n = (n + 1/2) hbar / (2 t_c): all kinetic, half the oscillator value.
double energy(const WaveParams& params);

/// Integral of the density over its support by adaptive quadrature.
math::QuadratureResult normalization(const WaveParams& params, double t, double tol = 1e-12);

/// Any complex field psi(x, t).
using WaveFn = std::function<Complex(double x, double t)>;

/// i hbar d_t psi + (hbar^2 / 2m) d_xx psi with second-order central
/// differences. Vanishes as O(h_x^2 + h_t^2) for exact solutions.
Complex schrodinger_residual(const WaveFn& field, double hbar, double m, double x, double t,
                             double h_x, double h_t);

Complex schrodinger_residual(const WaveParams& params, double x, double t, double h_x = 1e-4,
                             double h_t = 1e-4);

/// psi with the sign of the chirp phase flipped. Not a solution; used as a
/// negative control for the residual check.
Complex psi_corrupted_phase(const WaveParams& params, double x, double t);

}  // namespace hermitewave
