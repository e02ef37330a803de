#include "hermitewave/propagator.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "hermitewave/errors.hpp"
#include "hermitewave/wavefunction.hpp"

namespace hermitewave {

namespace {

// Planning is not thread-safe in FFTW; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex mutex;
    return mutex;
}

class FftPlan {
public:
    FftPlan(std::vector<Complex>& data, int direction) {
        std::lock_guard lock(planner_mutex());
        auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
        plan_ = fftw_plan_dft_1d(static_cast<int>(data.size()), buffer, buffer, direction,
                                 FFTW_ESTIMATE);
    }
    ~FftPlan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_;
};

struct SpreadEstimate {
    double mean_x;
    double sigma_x;
};

// Mean and width of the freely evolved state at time t from the moments of
// the initial field: var(t) = var_x + 2 t cov / m + t^2 var_p / m^2.
SpreadEstimate estimate_spread(const ComplexField& field, const SpectralGrid& grid, double t,
                               double m, double hbar) {
    const std::size_t n = field.values.size();
    double norm = 0.0, mean_x = 0.0, mean_x2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w = std::norm(field.values[j]);
        norm += w;
        mean_x += w * grid.x(j);
        mean_x2 += w * grid.x(j) * grid.x(j);
    }
    if (!(norm > 0.0)) throw DomainError("cannot propagate a zero field");
    mean_x /= norm;
    mean_x2 /= norm;

    std::vector<Complex> spectrum = field.values;
    FftPlan(spectrum, FFTW_FORWARD).execute();
    double spec_norm = 0.0, mean_p = 0.0, mean_p2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w = std::norm(spectrum[j]);
        const double p = hbar * grid.k(j);
        spec_norm += w;
        mean_p += w * p;
        mean_p2 += w * p * p;
    }
    mean_p /= spec_norm;
    mean_p2 /= spec_norm;

    // p psi in position space, for the symmetrised covariance Re<x p> - <x><p>.
    for (std::size_t j = 0; j < n; ++j) spectrum[j] *= hbar * grid.k(j) / static_cast<double>(n);
    FftPlan(spectrum, FFTW_BACKWARD).execute();
    double mean_xp = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        mean_xp += (std::conj(field.values[j]) * grid.x(j) * spectrum[j]).real();
    }
    mean_xp /= norm;

    const double var_x = std::max(0.0, mean_x2 - mean_x * mean_x);
    const double var_p = std::max(0.0, mean_p2 - mean_p * mean_p);
    const double cov = mean_xp - mean_x * mean_p;
    const double var_t = std::max(0.0, var_x + 2.0 * t * cov / m + t * t * var_p / (m * m));
    return {mean_x + mean_p * t / m, std::sqrt(var_t)};
}

}  // namespace

SpectralGrid::SpectralGrid(double length, std::size_t nx) : SpectralGrid(length, nx, -0.5 * length) {}

SpectralGrid::SpectralGrid(double length, std::size_t nx, double x_min)
    : length_(length), nx_(nx), x_min_(x_min) {
    if (!(std::isfinite(length) && length > 0.0)) throw DomainError("spectral grid length must be positive");
    if (nx < 2 || !std::has_single_bit(nx)) throw DomainError("spectral grid nx must be a power of two >= 2");
}

SpectralGrid SpectralGrid::from_grid(const GridSpec& grid) {
    grid.validate();
    const double dx = grid.dx();
    return SpectralGrid(dx * static_cast<double>(grid.nx), grid.nx, grid.x_min);
}

double SpectralGrid::k(std::size_t j) const noexcept {
    const auto signed_index = j < nx_ / 2 ? static_cast<double>(j)
                                          : static_cast<double>(j) - static_cast<double>(nx_);
    return 2.0 * std::numbers::pi * signed_index / length_;
}

GridSpec SpectralGrid::as_grid() const {
    GridSpec grid;
    grid.x_min = x_min_;
    grid.x_max = x_min_ + length_ - dx();
    grid.nx = nx_;
    return grid;
}

ComplexField initial_field(const WaveParams& params, const SpectralGrid& grid) {
    ComplexField field{grid.as_grid(), 0.0, std::vector<Complex>(grid.nx())};
    for (std::size_t j = 0; j < grid.nx(); ++j) field.values[j] = psi_initial(params, grid.x(j));
    return field;
}

ComplexField spectral_propagate(const ComplexField& initial, double t, double m, double hbar) {
    if (!(m > 0.0 && hbar > 0.0)) throw DomainError("mass and hbar must be positive");
    if (!std::isfinite(t)) throw DomainError("propagation time must be finite");
    if (initial.values.size() != initial.grid.nx) throw ShapeError("field size does not match its grid");
    const SpectralGrid grid = SpectralGrid::from_grid(initial.grid);

    const SpreadEstimate spread = estimate_spread(initial, grid, t, m, hbar);
    const double centre = grid.x(0) + 0.5 * grid.length();
    const double required = std::abs(spread.mean_x - centre) + 6.0 * spread.sigma_x;
    const double available = 0.5 * grid.length();
    if (required > available) {
        std::ostringstream msg;
        msg << "grid too small: evolved state needs half-width " << required << " (mean "
            << spread.mean_x << " + 6 sigma, sigma = " << spread.sigma_x << ") but box half-width is "
            << available;
        throw GridRefusal(msg.str(), required, available);
    }

    ComplexField out{initial.grid, initial.t + t, initial.values};
    const std::size_t n = out.values.size();
    FftPlan forward(out.values, FFTW_FORWARD);
    FftPlan backward(out.values, FFTW_BACKWARD);
    forward.execute();
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double k = grid.k(j);
        out.values[j] *= std::polar(scale, -hbar * k * k * t / (2.0 * m));
    }
    backward.execute();
    return out;
}

FieldComparison compare_fields(const ComplexField& a, const ComplexField& b) {
    if (!(a.grid == b.grid) || a.values.size() != b.values.size())
        throw ShapeError("compare_fields: grids differ");
    if (a.t != b.t) throw ShapeError("compare_fields: fields are at different times");

    FieldComparison out;
    out.norm_a = a.norm();
    out.norm_b = b.norm();
    if (a.values.empty()) return out;

    const auto largest = std::max_element(a.values.begin(), a.values.end(),
                                          [](Complex l, Complex r) { return std::abs(l) < std::abs(r); });
    const std::size_t pivot = static_cast<std::size_t>(largest - a.values.begin());
    Complex rotation{1.0, 0.0};
    if (std::abs(b.values[pivot]) > 0.0 && std::abs(a.values[pivot]) > 0.0) {
        rotation = std::polar(1.0, std::arg(a.values[pivot]) - std::arg(b.values[pivot]));
    }

    double sq = 0.0, aligned_sq = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
        const double diff = std::abs(a.values[j] - b.values[j]);
        const double aligned = std::abs(a.values[j] - rotation * b.values[j]);
        out.max_abs_error = std::max(out.max_abs_error, diff);
        out.aligned_max_abs_error = std::max(out.aligned_max_abs_error, aligned);
        sq += diff * diff;
        aligned_sq += aligned * aligned;
    }
    const double dx = a.grid.dx();
    out.l2_error = std::sqrt(sq * dx);
    out.aligned_l2_error = std::sqrt(aligned_sq * dx);
    return out;
}

}  // namespace hermitewave
