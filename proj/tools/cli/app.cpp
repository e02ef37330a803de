#include "cli/app.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/output.hpp"
#include "hermitewave/errors.hpp"

namespace hermitewave::cli {

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot read config '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& err) {
    CLI::App app{"Hermite free-particle wavefunction: evaluation, semiclassics and verification", "hermitewave"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig flags;
    std::string format = "csv";
    std::string config_path;
    bool dump_config = false;

    // Each flag also knows how to copy its value onto a config loaded from JSON.
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;
    auto track = [&](CLI::Option* opt, std::function<void(RunConfig&)> apply) {
        overrides.emplace_back(opt, std::move(apply));
    };

    track(app.add_option("--n", flags.params.n, "Quantum number")->capture_default_str(),
          [&](RunConfig& c) { c.params.n = flags.params.n; });
    track(app.add_option("--tc", flags.params.t_c, "Timescale t_c (au)")->capture_default_str(),
          [&](RunConfig& c) { c.params.t_c = flags.params.t_c; });
    track(app.add_option("--hbar", flags.params.hbar, "Reduced Planck constant")->capture_default_str(),
          [&](RunConfig& c) { c.params.hbar = flags.params.hbar; });
    track(app.add_option("--mass", flags.params.m, "Particle mass")->capture_default_str(),
          [&](RunConfig& c) { c.params.m = flags.params.m; });
    track(app.add_option("--xmin", flags.grid.x_min, "Grid lower x")->capture_default_str(),
          [&](RunConfig& c) { c.grid.x_min = flags.grid.x_min; });
    track(app.add_option("--xmax", flags.grid.x_max, "Grid upper x")->capture_default_str(),
          [&](RunConfig& c) { c.grid.x_max = flags.grid.x_max; });
    track(app.add_option("--nx", flags.grid.nx, "Grid x nodes")->capture_default_str(),
          [&](RunConfig& c) { c.grid.nx = flags.grid.nx; });
    track(app.add_option("--tmin", flags.grid.t_min, "Grid lower t")->capture_default_str(),
          [&](RunConfig& c) { c.grid.t_min = flags.grid.t_min; });
    track(app.add_option("--tmax", flags.grid.t_max, "Grid upper t")->capture_default_str(),
          [&](RunConfig& c) { c.grid.t_max = flags.grid.t_max; });
    track(app.add_option("--nt", flags.grid.nt, "Grid t nodes")->capture_default_str(),
          [&](RunConfig& c) { c.grid.nt = flags.grid.nt; });
    track(app.add_option("--thetas", flags.thetas, "Members of the classical path family")->capture_default_str(),
          [&](RunConfig& c) { c.thetas = flags.thetas; });
    track(app.add_option("--times", flags.times, "Explicit times (phasespace, observables, verify)")
              ->delimiter(','),
          [&](RunConfig& c) { c.times = flags.times; });
    track(app.add_option("--rows", flags.table_ns, "Quantum numbers tabulated by observables")
              ->delimiter(',')
              ->capture_default_str(),
          [&](RunConfig& c) { c.table_ns = flags.table_ns; });
    track(app.add_option("--airy-v", flags.airy_v, "Airy packet velocity v")->capture_default_str(),
          [&](RunConfig& c) { c.airy_v = flags.airy_v; });
    track(app.add_option("--airy-a", flags.airy_a, "Airy packet acceleration a")->capture_default_str(),
          [&](RunConfig& c) { c.airy_a = flags.airy_a; });
    track(app.add_option("--oracle-length", flags.oracle_length, "Spectral oracle box length")
              ->capture_default_str(),
          [&](RunConfig& c) { c.oracle_length = flags.oracle_length; });
    track(app.add_option("--oracle-nx", flags.oracle_nx, "Spectral oracle nodes (power of two)")
              ->capture_default_str(),
          [&](RunConfig& c) { c.oracle_nx = flags.oracle_nx; });
    track(app.add_option("--tol", flags.tol, "Tolerance for observables deltas")->capture_default_str(),
          [&](RunConfig& c) { c.tol = flags.tol; });
    track(app.add_option("--out", flags.out, "Output path, - for stdout")->capture_default_str(),
          [&](RunConfig& c) { c.out = flags.out; });
    track(app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))
              ->capture_default_str(),
          [&](RunConfig& c) { c.format = parse_format(format); });
    track(app.add_flag("--corrupt-phase", flags.corrupt_phase)->group(""),
          [&](RunConfig& c) { c.corrupt_phase = flags.corrupt_phase; });
    app.add_option("--config", config_path, "JSON RunConfig; explicit flags override it");
    app.add_flag("--dump-config", dump_config, "Print the effective configuration as JSON and exit");

    for (const char* name : {"density", "peaks", "caustic", "paths", "phasespace", "observables", "verify"}) {
        app.add_subcommand(name);
    }
    app.get_subcommand("density")->description("Probability density over the (t, x) grid");
    app.get_subcommand("peaks")->description("Density maxima per grid time");
    app.get_subcommand("caustic")->description("Envelope of the classical path family");
    app.get_subcommand("paths")->description("Classical straight-line paths");
    app.get_subcommand("phasespace")->description("Phase-space loci of the path family");
    app.get_subcommand("observables")->description("Expectation-value table (JSON)");
    app.get_subcommand("verify")->description("Verification suite (JSON)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return code(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::config_error);
    }

    RunConfig config;
    try {
        if (!config_path.empty()) {
            config = config_from_json_text(read_file(config_path));
            for (const auto& [opt, apply] : overrides) {
                if (opt->count() > 0) apply(config);
            }
        } else {
            config = flags;
            config.format = parse_format(format);
        }
        config.command = app.get_subcommands().front()->get_name();
        config.validate();
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::io_error);
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return code(ExitCode::config_error);
    }

    if (dump_config) {
        try {
            write_artifact(config.out, to_json_text(config) + "\n");
        } catch (const IoError& e) {
            err << "error: " << e.what() << "\n";
            return code(ExitCode::io_error);
        }
        return code(ExitCode::ok);
    }

    try {
        const CommandResult result = run_command(config);
        write_artifact(config.out, result.content);
        if (result.status != ExitCode::ok) err << config.command << ": one or more checks failed\n";
        return code(result.status);
    } catch (const ConvergenceError& e) {
        err << "convergence failure: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
        return code(ExitCode::convergence_failure);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitCode::io_error);
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << "\n";
        return code(ExitCode::config_error);
    }
}

}  // namespace hermitewave::cli
