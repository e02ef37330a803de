#include "hermitewave/core_math.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "hermitewave/errors.hpp"

namespace hermitewave {

void WaveParams::validate() const {
    if (n < 0) throw DomainError("quantum number n must be >= 0, got " + std::to_string(n));
    if (!(std::isfinite(t_c) && t_c > 0.0)) throw DomainError("t_c must be positive and finite");
    if (!(std::isfinite(hbar) && hbar > 0.0)) throw DomainError("hbar must be positive and finite");
    if (!(std::isfinite(m) && m > 0.0)) throw DomainError("mass must be positive and finite");
}

void GridSpec::validate() const {
    if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min))
        throw DomainError("grid requires finite x_max > x_min");
    if (nx < 2) throw DomainError("grid requires nx >= 2");
    if (nt < 1) throw DomainError("grid requires nt >= 1");
    if (!(std::isfinite(t_min) && std::isfinite(t_max))) throw DomainError("grid times must be finite");
    if (nt > 1 && !(t_max > t_min)) throw DomainError("grid with nt > 1 requires t_max > t_min");
}

double ComplexField::norm() const {
    double sum = 0.0;
    for (const auto& v : values) sum += std::norm(v);
    return sum * grid.dx();
}

namespace math {

HermitePair hermite_pair(int n, double y) {
    if (n < 0) throw DomainError("Hermite order must be non-negative");
    if (!std::isfinite(y)) throw DomainError("Hermite argument must be finite");
    double prev = 0.0;  // H_{-1} placeholder, consistent with H_1 = 2y H_0 - 0
    double curr = 1.0;
    for (int k = 0; k < n; ++k) {
        const double next = 2.0 * y * curr - 2.0 * k * prev;
        prev = curr;
        curr = next;
    }
    return {curr, prev, n, y};
}

double log_norm_constant(const WaveParams& params) {
    params.validate();
    const double n = params.n;
    return -0.5 * std::lgamma(n + 1.0)
           + 0.25 * std::log(params.m / (params.hbar * params.t_c * std::numbers::pi))
           - 0.5 * n * std::numbers::ln2;
}

namespace {

// Kronrod abscissae on [-1, 1] (non-negative half). Odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod_15(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double tol, const QuadratureOptions& options) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw DomainError("integrate requires finite lo < hi");
    if (!(tol > 0.0)) throw DomainError("integrate requires tol > 0");

    constexpr std::size_t kEvalsPerSegment = 15;
    std::priority_queue<Segment> heap;
    heap.push(gauss_kronrod_15(f, lo, hi));
    std::size_t evaluations = kEvalsPerSegment;
    double total_value = heap.top().value;
    double total_error = heap.top().error;

    while (total_error > tol) {
        if (heap.size() >= options.max_intervals) {
            throw ConvergenceError("adaptive quadrature exhausted " +
                                       std::to_string(options.max_intervals) + " intervals",
                                   total_value, total_error);
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi)) {
            throw ConvergenceError("adaptive quadrature hit interval resolution limit",
                                   total_value, total_error);
        }
        const Segment left = gauss_kronrod_15(f, worst.lo, mid);
        const Segment right = gauss_kronrod_15(f, mid, worst.hi);
        evaluations += 2 * kEvalsPerSegment;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Resum from the leaves to drop the drift of the running updates.
    double value = 0.0;
    double error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(value)) {
        throw ConvergenceError("integrand produced a non-finite value", value, error);
    }
    return {value, error, evaluations};
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw BracketError("find_root requires lo < hi");
    if (!(tol > 0.0)) throw DomainError("find_root requires tol > 0");
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (!(f_lo * f_hi < 0.0)) {
        throw BracketError("find_root: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }

    constexpr int kMaxIterations = 400;
    bool force_bisection = false;
    for (int it = 0; it < kMaxIterations && hi - lo > tol; ++it) {
        double x = 0.5 * (lo + hi);
        if (!force_bisection) {
            const double secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
            if (secant > lo && secant < hi) x = secant;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        const double width_before = hi - lo;
        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        // Secant steps that shave only one end (regula falsi stalling) are
        // followed by a bisection.
        force_bisection = !force_bisection && (hi - lo) > 0.5 * width_before;
    }
    return std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
}

}  // namespace math
}  // namespace hermitewave
