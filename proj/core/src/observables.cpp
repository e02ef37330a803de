#include "hermitewave/observables.hpp"

#include <algorithm>
#include <cmath>

#include "hermitewave/core_math.hpp"
#include "hermitewave/errors.hpp"
#include "hermitewave/wavefunction.hpp"

namespace hermitewave {

MomentRow make_row(double t, double mean_x, double mean_x2, double mean_p, double mean_p2) {
    MomentRow row{t, mean_x, mean_x2, mean_p, mean_p2, 0.0, 0.0, 0.0};
    row.var_x = mean_x2 - mean_x * mean_x;
    row.var_p = mean_p2 - mean_p * mean_p;
    row.uncertainty_product_sq = row.var_x * row.var_p;
    return row;
}

NumericMoments numeric_moments(const WaveParams& params, double t, double tol) {
    params.validate();
    if (!(tol > 0.0)) throw DomainError("numeric_moments requires tol > 0");
    const double half_width = support_half_width(params, t);
    const double x_scale = envelope_scale(params, t);
    const double p_scale = params.hbar / envelope_scale(params, 0.0);
    const double hbar = params.hbar;

    NumericMoments out;
    auto run = [&](auto&& integrand, double scale) {
        const auto r = math::integrate(integrand, -half_width, half_width, tol * scale);
        out.max_error_estimate = std::max(out.max_error_estimate, r.abs_error_estimate);
        return r.value;
    };

    out.norm = run([&](double x) { return density(params, x, t); }, 1.0);
    const double mean_x = run([&](double x) { return x * density(params, x, t); }, x_scale);
    const double mean_x2 =
        run([&](double x) { return x * x * density(params, x, t); }, x_scale * x_scale);
    // psi* (-i hbar psi') = hbar (Im(psi* psi') - i Re(psi* psi'))
    const double mean_p = run(
        [&](double x) { return hbar * (std::conj(psi(params, x, t)) * psi_dx(params, x, t)).imag(); },
        p_scale);
    out.imag_mean_p = run(
        [&](double x) { return -hbar * (std::conj(psi(params, x, t)) * psi_dx(params, x, t)).real(); },
        p_scale);
    const double mean_p2 =
        run([&](double x) { return hbar * hbar * std::norm(psi_dx(params, x, t)); }, p_scale * p_scale);

    out.row = make_row(t, mean_x, mean_x2, mean_p, mean_p2);
    return out;
}

MomentRow closed_form_moments(const WaveParams& params, double t) {
    params.validate();
    const double level = 2.0 * params.n + 1.0;
    const double mean_x2 = level * params.hbar / (2.0 * params.m) * (params.t_c + t * t / params.t_c);
    const double mean_p2 = level * params.hbar * params.m / (2.0 * params.t_c);
    MomentRow row = make_row(t, 0.0, mean_x2, 0.0, mean_p2);
    // Written in the tabulated form rather than as var_x * var_p.
    const double ratio = t / params.t_c;
    row.uncertainty_product_sq = level * level * params.hbar * params.hbar / 4.0 * (1.0 + ratio * ratio);
    return row;
}

SpreadingCheck spreading_check(const WaveParams& params, double t) {
    const MomentRow zero = closed_form_moments(params, 0.0);
    const MomentRow now = closed_form_moments(params, t);
    return spreading_check(zero, now, params.m);
}

SpreadingCheck spreading_check(const MomentRow& at_zero, const MomentRow& at_t, double m) {
    if (!(m > 0.0)) throw DomainError("mass must be positive");
    const double t = at_t.t;
    return {at_t.var_x, at_zero.var_x + at_zero.var_p / (m * m) * t * t};
}

void AiryParams::validate() const {
    if (!(std::isfinite(v) && v > 0.0)) throw DomainError("Airy velocity v must be positive");
    if (!(std::isfinite(a) && a > 0.0)) throw DomainError("Airy acceleration a must be positive (t_c = v/a > 0)");
}

MomentRow airy_closed_forms(const AiryParams& airy, double m, double hbar, double t) {
    airy.validate();
    if (!(m > 0.0 && hbar > 0.0)) throw DomainError("mass and hbar must be positive");
    const double t_c = airy.t_c();
    const double mean_x = airy.v * airy.v / (2.0 * airy.a) - hbar / (4.0 * m * airy.v);
    const double mean_p2 = hbar * m / (2.0 * t_c);
    const double length = hbar / (m * airy.v);
    const double var_x = length * length / 8.0 + hbar / (2.0 * m) * (t_c + t * t / t_c);

    MomentRow row = make_row(t, mean_x, var_x + mean_x * mean_x, 0.0, mean_p2);
    const double ratio = t / t_c;
    row.uncertainty_product_sq =
        hbar * hbar / 4.0 * (1.0 + hbar / (m * airy.v * airy.v * t_c) + ratio * ratio);
    return row;
}

double airy_product_from_variances(const AiryParams& airy, double m, double hbar, double t) {
    const MomentRow row = airy_closed_forms(airy, m, hbar, t);
    return row.var_x * row.var_p;
}

double relative_delta(double numeric, double closed, double reference) {
    return std::abs(numeric - closed) / std::max(std::abs(closed), reference);
}

double max_moment_delta(const MomentRow& numeric, const MomentRow& closed) {
    return std::max({relative_delta(numeric.mean_x, closed.mean_x, std::sqrt(closed.mean_x2)),
                     relative_delta(numeric.mean_x2, closed.mean_x2),
                     relative_delta(numeric.mean_p, closed.mean_p, std::sqrt(closed.mean_p2)),
                     relative_delta(numeric.mean_p2, closed.mean_p2)});
}

TableReport table_report(const std::vector<WaveParams>& params, const AiryParams& airy,
                         const std::vector<double>& times, double tolerance) {
    if (params.empty() || times.empty()) throw DomainError("table_report needs parameters and times");
    if (!(tolerance > 0.0)) throw DomainError("table_report tolerance must be positive");
    const double hbar = params.front().hbar;
    const double m = params.front().m;
    const double floor = hbar * hbar / 4.0 - 1e-12;

    TableReport report;
    report.tolerance = tolerance;
    for (double t : times) {
        ReportEntry entry;
        entry.label = "Airy";
        entry.closed = airy_closed_forms(airy, m, hbar, t);
        entry.energy = entry.closed.mean_p2 / (2.0 * m);
        entry.expected_energy = entry.energy;
        entry.numeric_energy = entry.energy;
        entry.heisenberg_ok = entry.closed.uncertainty_product_sq >= floor;
        report.all_within_tolerance = report.all_within_tolerance && entry.heisenberg_ok;
        report.entries.push_back(std::move(entry));
    }
    for (const WaveParams& p : params) {
        for (double t : times) {
            ReportEntry entry;
            entry.n = p.n;
            entry.label = p.n == 0 ? "Gaussian (n=0)" : "Hermite (n=" + std::to_string(p.n) + ")";
            entry.closed = closed_form_moments(p, t);
            const NumericMoments numeric = numeric_moments(p, t, 1e-12);
            const MomentRow& row = numeric.row;
            entry.max_delta = max_moment_delta(row, entry.closed);
            entry.energy = entry.closed.mean_p2 / (2.0 * p.m);
            entry.numeric_energy = row.mean_p2 / (2.0 * p.m);
            entry.expected_energy = hermitewave::energy(p);
            const double p_floor = p.hbar * p.hbar / 4.0 - 1e-12;
            entry.heisenberg_ok = entry.closed.uncertainty_product_sq >= p_floor
                                  && row.uncertainty_product_sq >= p_floor;
            const bool energy_ok =
                relative_delta(entry.numeric_energy, entry.expected_energy) <= tolerance;
            report.all_within_tolerance = report.all_within_tolerance && entry.max_delta <= tolerance
                                          && entry.heisenberg_ok && energy_ok;
            entry.numeric = numeric;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace hermitewave
