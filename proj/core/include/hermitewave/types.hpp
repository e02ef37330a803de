#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hermitewave {

using Complex = std::complex<double>;

/// Parameters of the Hermite free-particle wavefunction. Defaults are atomic
/// units with hbar = 1 and m = 1/2.
struct WaveParams {
    int n = 2;          ///< quantum number, n >= 0
    double t_c = 1.0;   ///< timescale, strictly positive
    double hbar = 1.0;
    double m = 0.5;

    /// Oscillator frequency of the t = 0 form; omega * t_c == 1.
    double omega() const noexcept { return 1.0 / t_c; }

    /// Throws DomainError unless n >= 0 and t_c, hbar, m are positive and finite.
    void validate() const;

    friend bool operator==(const WaveParams&, const WaveParams&) = default;
};

/// Uniform sampling of x (and optionally t). Nodes include both end points.
struct GridSpec {
    double x_min = -8.0;
    double x_max = 8.0;
    std::size_t nx = 321;
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t nt = 1;

    double dx() const noexcept { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double dt() const noexcept {
        return nt > 1 ? (t_max - t_min) / static_cast<double>(nt - 1) : 0.0;
    }
    double x(std::size_t i) const noexcept { return x_min + static_cast<double>(i) * dx(); }
    double t(std::size_t j) const noexcept { return t_min + static_cast<double>(j) * dt(); }

    void validate() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Complex amplitude sampled on the x-nodes of a grid at one time.
struct ComplexField {
    GridSpec grid;
    double t = 0.0;
    std::vector<Complex> values;

    /// Discrete norm sum |psi|^2 dx.
    double norm() const;
};

/// Real-valued field (density) on the x-nodes of a grid at one time.
struct RealField {
    GridSpec grid;
    double t = 0.0;
    std::vector<double> values;
};

}  // namespace hermitewave
