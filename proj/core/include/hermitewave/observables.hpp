#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermitewave/types.hpp"

namespace hermitewave {

/// Expectation values and uncertainties at one time.
struct MomentRow {
    double t = 0.0;
    double mean_x = 0.0;
    double mean_x2 = 0.0;
    double mean_p = 0.0;
    double mean_p2 = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double uncertainty_product_sq = 0.0;
};

/// Fills var_x, var_p and their product from the four raw moments.
MomentRow make_row(double t, double mean_x, double mean_x2, double mean_p, double mean_p2);

struct NumericMoments {
    MomentRow row;
    double norm = 0.0;
    double imag_mean_p = 0.0;       ///< must vanish for a physical state
    double max_error_estimate = 0.0;  ///< largest quadrature error estimate among the moments
};

/// Moments of psi(., t) by adaptive quadrature. Position moments integrate
/// x^k |psi|^2; momentum moments use the analytic derivative psi_dx.
/// `tol` is relative to the natural scale of each moment.
NumericMoments numeric_moments(const WaveParams& params, double t, double tol = 1e-12);

/// <x^2> = (2n+1)(hbar/2m)(t_c + t^2/t_c), <p^2> = (2n+1) hbar m / (2 t_c),
/// <x> = <p> = 0.
MomentRow closed_form_moments(const WaveParams& params, double t);

struct SpreadingCheck {
    double lhs = 0.0;  ///< var_x(t)
    double rhs = 0.0;  ///< var_x(0) + var_p t^2 / m^2
};

/// Free-particle spreading law from the closed forms.
SpreadingCheck spreading_check(const WaveParams& params, double t);

/// Same law from any pair of rows at 0 and t.
SpreadingCheck spreading_check(const MomentRow& at_zero, const MomentRow& at_t, double m);

/// Rest-frame (u = 0) Airy packet parameters; t_c is identified with v / a.
struct AiryParams {
    double v = 1.0;
    double a = 1.0;
    double t_c() const { return v / a; }
    void validate() const;
};

/// The Airy row as tabulated: <x> = v^2/2a - hbar/(4 m v), <p> = 0,
/// <p^2> = hbar m / (2 t_c), var_x = (hbar/mv)^2/8 + (hbar/2m)(t_c + t^2/t_c),
/// <x^2> = var_x + <x>^2, and the tabulated product
/// (hbar^2/4)(1 + hbar/(m v^2 t_c) + t^2/t_c^2).
///
/// The tabulated product is not equal to var_x * var_p; see
/// airy_product_from_variances.
MomentRow airy_closed_forms(const AiryParams& airy, double m, double hbar, double t);

/// var_x * var_p of the Airy row = (hbar^2/4)(1 + hbar/(4 m v^2 t_c) + t^2/t_c^2).
double airy_product_from_variances(const AiryParams& airy, double m, double hbar, double t);

struct ReportEntry {
    std::string label;         ///< "Airy", "Gaussian (n=0)", "Hermite (n=k)"
    std::optional<int> n;      ///< empty for the Airy row
    MomentRow closed;
    std::optional<NumericMoments> numeric;  ///< Hermite/Gaussian rows only
    double max_delta = 0.0;    ///< largest relative_delta over the four moments
    double energy = 0.0;       ///< <p^2> / 2m from the closed row
    double numeric_energy = 0.0;
    double expected_energy = 0.0;
    bool heisenberg_ok = true;
};

struct TableReport {
    double tolerance = 1e-8;
    std::vector<ReportEntry> entries;
    bool all_within_tolerance = true;
};

/// Airy row plus one Hermite row per requested n at each time, with
/// quadrature-vs-closed-form deltas for the Hermite rows.
TableReport table_report(const std::vector<WaveParams>& params, const AiryParams& airy,
                         const std::vector<double>& times, double tolerance = 1e-8);

/// |numeric - closed| / max(|closed|, reference). For moments whose closed
/// value is zero, pass the natural width (sqrt of the second moment) as reference.
double relative_delta(double numeric, double closed, double reference = 0.0);

/// Largest relative_delta over the four raw moments; first moments are
/// measured against the closed-form widths sqrt(<x^2>) and sqrt(<p^2>).
double max_moment_delta(const MomentRow& numeric, const MomentRow& closed);

}  // namespace hermitewave
