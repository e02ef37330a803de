#pragma once

#include <string>

#include "cli/config.hpp"

namespace hermitewave::cli {

/// Rendered artifact plus the exit status it implies.
struct CommandResult {
    std::string content;
    ExitCode status = ExitCode::ok;
};

/// Density over the (t, x) grid: `x,t,density`, t-major.
CommandResult cmd_density(const RunConfig& config);

/// Density maxima per t: `t,x_peak,branch`; branch is the signed rank from the centre.
CommandResult cmd_peaks(const RunConfig& config);

/// `t,x_plus,x_minus` over the time grid.
CommandResult cmd_caustic(const RunConfig& config);

/// Straight-line classical paths: `path,theta,t,x` for every theta and grid time.
CommandResult cmd_paths(const RunConfig& config);

/// Phase-space loci: `t,theta,x,p` at each requested time.
CommandResult cmd_phasespace(const RunConfig& config);

/// Expectation-value table as JSON; check_failed when any delta exceeds --tol.
CommandResult cmd_observables(const RunConfig& config);

/// Verification suite as JSON; check_failed when any check fails.
CommandResult cmd_verify(const RunConfig& config);

/// Dispatches on config.command.
CommandResult run_command(const RunConfig& config);

}  // namespace hermitewave::cli
