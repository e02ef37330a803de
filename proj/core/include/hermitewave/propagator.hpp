#pragma once

#include <cstddef>

#include "hermitewave/types.hpp"

namespace hermitewave {

/// Periodic grid for the momentum-space propagator: nx (a power of two)
/// nodes x_j = -L/2 + j dx with dx = L / nx, and wavenumbers 2 pi j / L over
/// the signed range [-nx/2, nx/2).
class SpectralGrid {
public:
    SpectralGrid(double length, std::size_t nx);

    /// Recovers the spectral grid behind a GridSpec produced by as_grid().
    static SpectralGrid from_grid(const GridSpec& grid);

    double length() const noexcept { return length_; }
    std::size_t nx() const noexcept { return nx_; }
    double dx() const noexcept { return length_ / static_cast<double>(nx_); }
    double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx(); }
    double k(std::size_t j) const noexcept;

    /// The same nodes as a GridSpec (x_max = x_min + L - dx, no duplicated end point).
    GridSpec as_grid() const;

private:
    SpectralGrid(double length, std::size_t nx, double x_min);

    double length_;
    std::size_t nx_;
    double x_min_;
};

/// The t = 0 oscillator-form state sampled on a spectral grid.
ComplexField initial_field(const WaveParams& params, const SpectralGrid& grid);

/// Exact free-particle evolution by t: psi_hat(k) -> exp(-i hbar k^2 t / 2m) psi_hat(k).
/// Throws GridRefusal when the evolved state's mean +- 6 standard deviations
/// leaves the periodic box; DomainError when nx is not a power of two.
ComplexField spectral_propagate(const ComplexField& initial, double t, double m, double hbar);

struct FieldComparison {
    double max_abs_error = 0.0;
    double l2_error = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    /// Same errors after rotating b by the global phase that matches a at a's largest sample.
    double aligned_max_abs_error = 0.0;
    double aligned_l2_error = 0.0;
};

/// Pointwise and discrete-L2 differences. Throws ShapeError on mismatched grids or times.
FieldComparison compare_fields(const ComplexField& a, const ComplexField& b);

}  // namespace hermitewave
