#include "cli/config.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <json.hpp>

#include "hermitewave/errors.hpp"

namespace hermitewave::cli {

namespace {

const std::vector<std::string> kCommands = {"density", "peaks",       "caustic", "paths",
                                            "phasespace", "observables", "verify"};

}  // namespace

void RunConfig::validate() const {
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
        throw DomainError("unknown command '" + command + "'");
    params.validate();
    grid.validate();
    if (thetas < 3) throw DomainError("--thetas must be at least 3");
    for (double t : times)
        if (!std::isfinite(t)) throw DomainError("times must be finite");
    for (int n : table_ns)
        if (n < 0) throw DomainError("table rows need n >= 0");
    if (table_ns.empty()) throw DomainError("observables needs at least one n");
    if (!(airy_v > 0.0)) throw DomainError("--airy-v must be positive");
    if (!(airy_a > 0.0)) throw DomainError("--airy-a must be positive");
    if (!(oracle_length > 0.0)) throw DomainError("--oracle-length must be positive");
    if (oracle_nx < 2 || !std::has_single_bit(oracle_nx))
        throw DomainError("--oracle-nx must be a power of two");
    if (!(tol > 0.0)) throw DomainError("--tol must be positive");
    if (out.empty()) throw DomainError("--out must not be empty");
}

std::vector<double> RunConfig::effective_times() const {
    if (!times.empty()) return times;
    if (command == "phasespace") return {0.0, 0.5, 1.0, 1.5};
    if (command == "verify") return {-5.0, -2.0, 0.0, 1.0, 2.0, 5.0};
    return {0.0, 1.0, 2.0};
}

std::string format_name(Format format) { return format == Format::csv ? "csv" : "json"; }

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw DomainError("unknown format '" + name + "' (expected csv or json)");
}

std::string to_json_text(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["command"] = c.command;
    j["n"] = c.params.n;
    j["tc"] = c.params.t_c;
    j["hbar"] = c.params.hbar;
    j["mass"] = c.params.m;
    j["xmin"] = c.grid.x_min;
    j["xmax"] = c.grid.x_max;
    j["nx"] = c.grid.nx;
    j["tmin"] = c.grid.t_min;
    j["tmax"] = c.grid.t_max;
    j["nt"] = c.grid.nt;
    j["thetas"] = c.thetas;
    j["times"] = c.times;
    j["rows"] = c.table_ns;
    j["airy_v"] = c.airy_v;
    j["airy_a"] = c.airy_a;
    j["oracle_length"] = c.oracle_length;
    j["oracle_nx"] = c.oracle_nx;
    j["tol"] = c.tol;
    j["out"] = c.out;
    j["format"] = format_name(c.format);
    j["corrupt_phase"] = c.corrupt_phase;
    return j.dump(2);
}

RunConfig config_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("config must be a JSON object");

    RunConfig c;
    try {
        c.command = j.value("command", c.command);
        c.params.n = j.value("n", c.params.n);
        c.params.t_c = j.value("tc", c.params.t_c);
        c.params.hbar = j.value("hbar", c.params.hbar);
        c.params.m = j.value("mass", c.params.m);
        c.grid.x_min = j.value("xmin", c.grid.x_min);
        c.grid.x_max = j.value("xmax", c.grid.x_max);
        c.grid.nx = j.value("nx", c.grid.nx);
        c.grid.t_min = j.value("tmin", c.grid.t_min);
        c.grid.t_max = j.value("tmax", c.grid.t_max);
        c.grid.nt = j.value("nt", c.grid.nt);
        c.thetas = j.value("thetas", c.thetas);
        c.times = j.value("times", c.times);
        c.table_ns = j.value("rows", c.table_ns);
        c.airy_v = j.value("airy_v", c.airy_v);
        c.airy_a = j.value("airy_a", c.airy_a);
        c.oracle_length = j.value("oracle_length", c.oracle_length);
        c.oracle_nx = j.value("oracle_nx", c.oracle_nx);
        c.tol = j.value("tol", c.tol);
        c.out = j.value("out", c.out);
        c.format = parse_format(j.value("format", format_name(c.format)));
        c.corrupt_phase = j.value("corrupt_phase", c.corrupt_phase);
    } catch (const nlohmann::json::type_error& e) {
        throw DomainError(std::string("config field has the wrong type: ") + e.what());
    }
    return c;
}

}  // namespace hermitewave::cli
