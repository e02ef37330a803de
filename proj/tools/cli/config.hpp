#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermitewave/types.hpp"

namespace hermitewave::cli {

/// Process exit statuses.
enum class ExitCode : int {
    ok = 0,
    check_failed = 1,
    config_error = 2,
    convergence_failure = 3,
    io_error = 4,
};

enum class Format { csv, json };

/// Everything a subcommand needs. Defaults reproduce the figures: n = 2,
/// t_c = 1, atomic units hbar = 1, m = 1/2.
struct RunConfig {
    std::string command = "density";
    WaveParams params{2, 1.0, 1.0, 0.5};
    GridSpec grid{-8.0, 8.0, 321, -4.0, 4.0, 81};
    std::size_t thetas = 64;
    std::vector<double> times;  ///< empty: per-command default
    std::vector<int> table_ns{0, 1, 2};
    double airy_v = 1.0;
    double airy_a = 1.0;
    double oracle_length = 80.0;
    std::size_t oracle_nx = 4096;
    double tol = 1e-8;
    std::string out = "-";
    Format format = Format::csv;  ///< grids only; observables and verify always write JSON
    bool corrupt_phase = false;  ///< verify negative control

    /// Throws DomainError on any invalid field.
    void validate() const;

    /// times, or the command's default list when none were given.
    std::vector<double> effective_times() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string to_json_text(const RunConfig& config);
RunConfig config_from_json_text(const std::string& text);

std::string format_name(Format format);
Format parse_format(const std::string& name);

}  // namespace hermitewave::cli
