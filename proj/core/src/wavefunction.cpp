#include "hermitewave/wavefunction.hpp"

#include <cmath>
#include <numbers>

#include "hermitewave/errors.hpp"
#include "hermitewave/parallel.hpp"

namespace hermitewave {

namespace {

// Pieces of psi shared by the evaluators. With D = t_c^2 + t^2:
//   log_amplitude = log prefactor - 1/4 log(1 + t^2/t_c^2) - m t_c x^2 / (2 hbar D)
//   phase         = m x^2 t / (2 hbar D) - (n + 1/2) atan(t / t_c)
struct Terms {
    double xi;
    double log_amplitude;
    double phase;
};

Terms terms(const WaveParams& params, double x, double t) {
    const double spread = params.t_c * params.t_c + t * t;
    const double ratio = t / params.t_c;
    Terms out{};
    out.xi = x * std::sqrt(params.m * params.t_c / (params.hbar * spread));
    out.log_amplitude = math::log_norm_constant(params) - 0.25 * std::log1p(ratio * ratio)
                        - params.m * params.t_c * x * x / (2.0 * params.hbar * spread);
    out.phase = params.m * x * x * t / (2.0 * params.hbar * spread)
                - (params.n + 0.5) * std::atan(ratio);
    return out;
}

void check_point(double x, double t) {
    if (!(std::isfinite(x) && std::isfinite(t))) throw DomainError("x and t must be finite");
}

}  // namespace

double envelope_scale(const WaveParams& params, double t) {
    params.validate();
    return std::sqrt(params.hbar * (params.t_c * params.t_c + t * t) / (params.m * params.t_c));
}

double scaled_coordinate(const WaveParams& params, double x, double t) {
    return x / envelope_scale(params, t);
}

double support_half_width(const WaveParams& params, double t) {
    // Classical turning point of the t = 0 oscillator in xi units, plus a
    // margin where e^{-xi^2} H_n^2 has decayed below 1e-16 of the total mass.
    return envelope_scale(params, t) * (std::sqrt(2.0 * params.n + 1.0) + 7.0);
}

Complex psi(const WaveParams& params, double x, double t) {
    params.validate();
    check_point(x, t);
    const Terms k = terms(params, x, t);
    const double magnitude = std::exp(k.log_amplitude) * math::hermite(params.n, k.xi);
    return std::polar(1.0, k.phase) * magnitude;
}

Complex psi_dx(const WaveParams& params, double x, double t) {
    params.validate();
    check_point(x, t);
    const double spread = params.t_c * params.t_c + t * t;
    const Terms k = terms(params, x, t);
    const double alpha = std::sqrt(params.m * params.t_c / (params.hbar * spread));
    // psi = A exp(c x^2) H_n(alpha x), c = m (-t_c + i t) / (2 hbar D)
    const Complex c = Complex(-params.t_c, t) * (params.m / (2.0 * params.hbar * spread));
    const auto h = math::hermite_pair(params.n, k.xi);
    const Complex bracket = 2.0 * c * x * h.h_n + alpha * 2.0 * params.n * h.h_nm1;
    return std::polar(std::exp(k.log_amplitude), k.phase) * bracket;
}

double psi_initial(const WaveParams& params, double x) {
    params.validate();
    check_point(x, 0.0);
    const double n = params.n;
    const double m_omega = params.m * params.omega();
    const double log_prefactor = -0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0))
                                 + 0.25 * std::log(m_omega / (params.hbar * std::numbers::pi));
    const double y = std::sqrt(m_omega / params.hbar) * x;
    return std::exp(log_prefactor - m_omega * x * x / (2.0 * params.hbar))
           * math::hermite(params.n, y);
}

double density(const WaveParams& params, double x, double t) {
    params.validate();
    check_point(x, t);
    const Terms k = terms(params, x, t);
    const double h = math::hermite(params.n, k.xi);
    return std::exp(2.0 * k.log_amplitude) * h * h;
}

RealField density_grid(const WaveParams& params, const GridSpec& grid, double t) {
    params.validate();
    grid.validate();
    RealField out{grid, t, std::vector<double>(grid.nx)};
    parallel_for(grid.nx, [&](std::size_t i) { out.values[i] = density(params, grid.x(i), t); });
    return out;
}

ComplexField sample_psi(const WaveParams& params, const GridSpec& grid, double t) {
    params.validate();
    grid.validate();
    ComplexField out{grid, t, std::vector<Complex>(grid.nx)};
    parallel_for(grid.nx, [&](std::size_t i) { out.values[i] = psi(params, grid.x(i), t); });
    return out;
}

GridSpec default_grid(const WaveParams& params, double t, std::size_t nx) {
    const double sigma = envelope_scale(params, t) * std::sqrt(params.n + 0.5);
    GridSpec grid;
    grid.x_min = -8.0 * sigma;
    grid.x_max = 8.0 * sigma;
    grid.nx = nx;
    grid.t_min = grid.t_max = t;
    grid.nt = 1;
    grid.validate();
    return grid;
}

double energy(const WaveParams& params) {
    params.validate();
    return 0.5 * (params.n + 0.5) * params.hbar / params.t_c;
}

math::QuadratureResult normalization(const WaveParams& params, double t, double tol) {
    const double half_width = support_half_width(params, t);
    return math::integrate([&](double x) { return density(params, x, t); }, -half_width,
                           half_width, tol);
}

Complex schrodinger_residual(const WaveFn& field, double hbar, double m, double x, double t,
                             double h_x, double h_t) {
    if (!(h_x > 0.0 && h_t > 0.0)) throw DomainError("finite-difference steps must be positive");
    const Complex centre = field(x, t);
    const Complex d_t = (field(x, t + h_t) - field(x, t - h_t)) / (2.0 * h_t);
    const Complex d_xx = (field(x + h_x, t) - 2.0 * centre + field(x - h_x, t)) / (h_x * h_x);
    return Complex(0.0, hbar) * d_t + (hbar * hbar / (2.0 * m)) * d_xx;
}

Complex schrodinger_residual(const WaveParams& params, double x, double t, double h_x,
                             double h_t) {
    params.validate();
    return schrodinger_residual([&](double xx, double tt) { return psi(params, xx, tt); },
                                params.hbar, params.m, x, t, h_x, h_t);
}

Complex psi_corrupted_phase(const WaveParams& params, double x, double t) {
    params.validate();
    const Terms k = terms(params, x, t);
    const double chirp = params.m * x * x * t / (2.0 * params.hbar * (params.t_c * params.t_c + t * t));
    const double magnitude = std::exp(k.log_amplitude) * math::hermite(params.n, k.xi);
    return std::polar(1.0, k.phase - 2.0 * chirp) * magnitude;
}

}  // namespace hermitewave
