#pragma once

#include <cstddef>
#include <functional>

#include "hermitewave/types.hpp"

namespace hermitewave::math {

/// H_n(y) together with H_{n-1}(y); h_nm1 is 0 for n = 0.
struct HermitePair {
    double h_n = 1.0;
    double h_nm1 = 0.0;
    int n = 0;
    double y = 0.0;
};

/// Physicists' Hermite polynomials by upward recurrence from H_0 = 1, H_1 = 2y.
HermitePair hermite_pair(int n, double y);

inline double hermite(int n, double y) { return hermite_pair(n, y).h_n; }

/// Natural log of sqrt(1/n!) (m/(hbar t_c pi))^{1/4} 2^{-n/2}, via lgamma.
double log_norm_constant(const WaveParams& params);

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct QuadratureOptions {
    std::size_t max_intervals = 4000;
};

/// Globally adaptive 7-point Gauss / 15-point Kronrod quadrature on [lo, hi].
/// Bisects the interval with the largest |K15 - G7| until the summed error
/// estimate drops below `tol`. Throws ConvergenceError (with the best
/// estimate) when the interval budget is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double tol, const QuadratureOptions& options = {});

/// Root of `f` in [lo, hi] by bisection with secant acceleration. Stops when
/// the bracket is narrower than `tol` or an exact zero is hit.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12);

}  // namespace hermitewave::math
