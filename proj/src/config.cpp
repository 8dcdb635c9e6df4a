#include "hemo/config.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hemo {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    if (t.empty())
        throw ConfigError(key + ": empty value");
    char* end = nullptr;
    const double x = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw ConfigError(key + ": cannot parse number '" + t + "'");
    if (!std::isfinite(x))
        throw ConfigError(key + ": value must be finite");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    char* end = nullptr;
    const long x = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw ConfigError(key + ": cannot parse integer '" + t + "'");
    if (x < -1000000000L || x > 1000000000L)
        throw ConfigError(key + ": integer out of range");
    return static_cast<int>(x);
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        if (trim(item).empty())
            throw ConfigError(key + ": empty list entry");
        out.push_back(parse_double(key, item));
    }
    if (out.empty())
        throw ConfigError(key + ": empty list");
    return out;
}

std::string join_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += format_double(v[i]);
    }
    return out;
}

const char* geometry_kind_name(GeometryKind k) {
    switch (k) {
        case GeometryKind::uniform: return "uniform";
        case GeometryKind::dead_man: return "dead_man";
        case GeometryKind::stented: return "stented";
        case GeometryKind::tabulated: return "tabulated";
    }
    return "?";
}

GeometryKind parse_geometry_kind(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    if (t == "uniform") return GeometryKind::uniform;
    if (t == "dead_man") return GeometryKind::dead_man;
    if (t == "stented") return GeometryKind::stented;
    if (t == "tabulated") return GeometryKind::tabulated;
    throw ConfigError(key + ": unknown geometry kind '" + t + "'");
}

const char* init_kind_name(InitKind k) {
    return k == InitKind::equilibrium ? "equilibrium" : "radius_pulse";
}

InitKind parse_init_kind(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    if (t == "equilibrium") return InitKind::equilibrium;
    if (t == "radius_pulse") return InitKind::radius_pulse;
    throw ConfigError(key + ": unknown init kind '" + t + "'");
}

const char* boundary_kind_name(BoundaryKind k) {
    switch (k) {
        case BoundaryKind::transmissive: return "transmissive";
        case BoundaryKind::wall: return "wall";
        case BoundaryKind::imposed_discharge: return "imposed_discharge";
    }
    return "?";
}

BoundaryKind parse_boundary_kind(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    if (t == "transmissive") return BoundaryKind::transmissive;
    if (t == "wall") return BoundaryKind::wall;
    if (t == "imposed_discharge") return BoundaryKind::imposed_discharge;
    throw ConfigError(key + ": unknown boundary kind '" + t + "'");
}

const char* waveform_kind_name(WaveformKind k) {
    return k == WaveformKind::sine ? "sine" : "constant";
}

WaveformKind parse_waveform_kind(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    if (t == "sine") return WaveformKind::sine;
    if (t == "constant") return WaveformKind::constant;
    throw ConfigError(key + ": unknown waveform '" + t + "'");
}

const char* flux_kind_name(FluxKind k) {
    return k == FluxKind::hll ? "hll" : "rusanov";
}

FluxKind parse_flux_kind(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    if (t == "hll") return FluxKind::hll;
    if (t == "rusanov") return FluxKind::rusanov;
    throw ConfigError(key + ": unknown flux kind '" + t + "'");
}

constexpr std::array known_keys = {
    "grid.cells", "grid.length",
    "phys.rho", "phys.cf", "phys.p0",
    "geometry.kind", "geometry.r0", "geometry.k", "geometry.dk", "geometry.k0",
    "geometry.x1", "geometry.x2", "geometry.x3", "geometry.x4",
    "geometry.k_right", "geometry.x1_frac", "geometry.x2_frac",
    "geometry.k_values", "geometry.a0_values",
    "init.kind", "init.cst", "init.epsilon", "init.x0_frac", "init.x1_frac",
    "bc.left.kind", "bc.left.waveform", "bc.left.q_amp", "bc.left.omega", "bc.left.q",
    "bc.right.kind", "bc.right.waveform", "bc.right.q_amp", "bc.right.omega", "bc.right.q",
    "run.n_cfl", "run.t_end", "run.snapshots", "run.flux",
};

void set_key(SimulationConfig& c, const std::string& key, const std::string& v) {
    if (key == "grid.cells") c.grid.cells = parse_int(key, v);
    else if (key == "grid.length") c.grid.length = parse_double(key, v);
    else if (key == "phys.rho") c.phys.rho = parse_double(key, v);
    else if (key == "phys.cf") c.phys.cf = parse_double(key, v);
    else if (key == "phys.p0") c.phys.p0 = parse_double(key, v);
    else if (key == "geometry.kind") c.geometry.kind = parse_geometry_kind(key, v);
    else if (key == "geometry.r0") c.geometry.r0 = parse_double(key, v);
    else if (key == "geometry.k") c.geometry.k = parse_double(key, v);
    else if (key == "geometry.dk") c.geometry.dk = parse_double(key, v);
    else if (key == "geometry.k0") c.geometry.k0 = parse_double(key, v);
    else if (key == "geometry.x1") c.geometry.x1 = parse_double(key, v);
    else if (key == "geometry.x2") c.geometry.x2 = parse_double(key, v);
    else if (key == "geometry.x3") c.geometry.x3 = parse_double(key, v);
    else if (key == "geometry.x4") c.geometry.x4 = parse_double(key, v);
    else if (key == "geometry.k_right") c.geometry.k_right = parse_double(key, v);
    else if (key == "geometry.x1_frac") c.geometry.x1_frac = parse_double(key, v);
    else if (key == "geometry.x2_frac") c.geometry.x2_frac = parse_double(key, v);
    else if (key == "geometry.k_values") c.geometry.k_values = parse_list(key, v);
    else if (key == "geometry.a0_values") c.geometry.a0_values = parse_list(key, v);
    else if (key == "init.kind") c.init.kind = parse_init_kind(key, v);
    else if (key == "init.cst") c.init.cst = parse_double(key, v);
    else if (key == "init.epsilon") c.init.epsilon = parse_double(key, v);
    else if (key == "init.x0_frac") c.init.x0_frac = parse_double(key, v);
    else if (key == "init.x1_frac") c.init.x1_frac = parse_double(key, v);
    else if (key == "bc.left.kind") c.bc_left.kind = parse_boundary_kind(key, v);
    else if (key == "bc.left.waveform") c.bc_left.waveform.kind = parse_waveform_kind(key, v);
    else if (key == "bc.left.q_amp") c.bc_left.waveform.q_amp = parse_double(key, v);
    else if (key == "bc.left.omega") c.bc_left.waveform.omega = parse_double(key, v);
    else if (key == "bc.left.q") c.bc_left.waveform.value = parse_double(key, v);
    else if (key == "bc.right.kind") c.bc_right.kind = parse_boundary_kind(key, v);
    else if (key == "bc.right.waveform") c.bc_right.waveform.kind = parse_waveform_kind(key, v);
    else if (key == "bc.right.q_amp") c.bc_right.waveform.q_amp = parse_double(key, v);
    else if (key == "bc.right.omega") c.bc_right.waveform.omega = parse_double(key, v);
    else if (key == "bc.right.q") c.bc_right.waveform.value = parse_double(key, v);
    else if (key == "run.n_cfl") c.n_cfl = parse_double(key, v);
    else if (key == "run.t_end") c.t_end = parse_double(key, v);
    else if (key == "run.snapshots") c.snapshot_times = parse_list(key, v);
    else if (key == "run.flux") c.flux = parse_flux_kind(key, v);
    else throw ConfigError("unknown key '" + key + "'");
}

std::string resolve_key(const std::string& name) {
    for (const char* k : known_keys)
        if (name == k)
            return name;
    if (name.find('.') != std::string::npos)
        throw ConfigError("unknown key '" + name + "'");

    // Short aliases for the common command-line overrides.
    if (name == "cf") return "phys.cf";
    if (name == "cells") return "grid.cells";
    if (name == "t_end") return "run.t_end";
    if (name == "n_cfl") return "run.n_cfl";
    if (name == "q_amp") return "bc.left.q_amp";
    if (name == "omega") return "bc.left.omega";
    if (name == "epsilon") return "init.epsilon";
    if (name == "flux") return "run.flux";
    if (name == "snapshots") return "run.snapshots";

    std::string match;
    for (const char* k : known_keys) {
        const std::string full(k);
        const auto dot = full.rfind('.');
        if (full.substr(dot + 1) == name) {
            if (!match.empty())
                throw ConfigError("ambiguous key '" + name + "': matches " + match + " and " + full);
            match = full;
        }
    }
    if (match.empty())
        throw ConfigError("unknown key '" + name + "'");
    return match;
}

void check(bool ok, const std::string& msg) {
    if (!ok)
        throw ConfigError(msg);
}

} // namespace

SimulationConfig parse_config_text(const std::string& text) {
    SimulationConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        bool known = false;
        for (const char* k : known_keys)
            known = known || key == k;
        if (!known)
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        set_key(cfg, key, value);
    }
    return cfg;
}

SimulationConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_override(SimulationConfig& cfg, const std::string& key, const std::string& value) {
    set_key(cfg, resolve_key(trim(key)), value);
}

void apply_overrides(SimulationConfig& cfg, const std::vector<std::string>& sets) {
    for (const std::string& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("override '" + s + "': expected key=value");
        apply_override(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
}

void validate(const SimulationConfig& c) {
    check(c.grid.cells >= 2, "grid.cells: need at least 2 cells");
    check(c.grid.length > 0.0, "grid.length: must be positive");
    check(c.phys.rho > 0.0, "phys.rho: must be positive");
    check(c.phys.cf >= 0.0, "phys.cf: must be non-negative");

    const GeometrySpec& g = c.geometry;
    switch (g.kind) {
        case GeometryKind::uniform:
            check(g.r0 > 0.0, "geometry.r0: must be positive");
            check(g.k > 0.0, "geometry.k: must be positive");
            break;
        case GeometryKind::dead_man:
            check(g.r0 > 0.0, "geometry.r0: must be positive");
            check(g.k0 > 0.0, "geometry.k0: must be positive");
            check(g.k0 + g.dk > 0.0, "geometry.dk: k0 + dk must stay positive");
            check(0.0 <= g.x1 && g.x1 < g.x2 && g.x2 <= g.x3 && g.x3 < g.x4 &&
                      g.x4 <= c.grid.length,
                  "geometry.x1..x4: need 0 <= x1 < x2 <= x3 < x4 <= length");
            break;
        case GeometryKind::stented:
            check(g.r0 > 0.0, "geometry.r0: must be positive");
            check(g.k_right > 0.0, "geometry.k_right: must be positive");
            check(g.k_right + g.dk > 0.0, "geometry.dk: k_right + dk must stay positive");
            check(0.0 <= g.x1_frac && g.x1_frac < g.x2_frac && g.x2_frac <= 1.0,
                  "geometry.x1_frac/x2_frac: need 0 <= x1_frac < x2_frac <= 1");
            break;
        case GeometryKind::tabulated:
            check(g.k_values.size() == static_cast<std::size_t>(c.grid.cells),
                  "geometry.k_values: need one entry per cell");
            check(g.a0_values.size() == static_cast<std::size_t>(c.grid.cells),
                  "geometry.a0_values: need one entry per cell");
            for (double k : g.k_values)
                check(k > 0.0, "geometry.k_values: entries must be positive");
            for (double a0 : g.a0_values)
                check(a0 > 0.0, "geometry.a0_values: entries must be positive");
            break;
    }

    const InitSpec& ini = c.init;
    if (ini.kind == InitKind::radius_pulse) {
        check(std::abs(ini.epsilon) < 1.0, "init.epsilon: |epsilon| must be below 1");
        check(0.0 <= ini.x0_frac && ini.x0_frac < ini.x1_frac && ini.x1_frac <= 1.0,
              "init.x0_frac/x1_frac: need 0 <= x0_frac < x1_frac <= 1");
    }

    for (const auto* drv : {&c.bc_left, &c.bc_right}) {
        const std::string side = (drv == &c.bc_left) ? "bc.left" : "bc.right";
        if (drv->kind == BoundaryKind::imposed_discharge &&
            drv->waveform.kind == WaveformKind::sine)
            check(drv->waveform.omega > 0.0, side + ".omega: must be positive");
    }

    check(c.n_cfl > 0.0 && c.n_cfl <= 1.0, "run.n_cfl: must lie in (0, 1]");
    check(c.t_end >= 0.0, "run.t_end: must be non-negative");
    for (double t : c.snapshot_times)
        check(t >= 0.0 && t <= c.t_end, "run.snapshots: times must lie in [0, t_end]");
}

std::string serialize_config(const SimulationConfig& c) {
    std::ostringstream out;
    out << "grid.cells = " << c.grid.cells << "\n";
    out << "grid.length = " << format_double(c.grid.length) << "\n";
    out << "phys.rho = " << format_double(c.phys.rho) << "\n";
    out << "phys.cf = " << format_double(c.phys.cf) << "\n";
    out << "phys.p0 = " << format_double(c.phys.p0) << "\n";

    const GeometrySpec& g = c.geometry;
    out << "geometry.kind = " << geometry_kind_name(g.kind) << "\n";
    switch (g.kind) {
        case GeometryKind::uniform:
            out << "geometry.r0 = " << format_double(g.r0) << "\n";
            out << "geometry.k = " << format_double(g.k) << "\n";
            break;
        case GeometryKind::dead_man:
            out << "geometry.r0 = " << format_double(g.r0) << "\n";
            out << "geometry.k0 = " << format_double(g.k0) << "\n";
            out << "geometry.dk = " << format_double(g.dk) << "\n";
            out << "geometry.x1 = " << format_double(g.x1) << "\n";
            out << "geometry.x2 = " << format_double(g.x2) << "\n";
            out << "geometry.x3 = " << format_double(g.x3) << "\n";
            out << "geometry.x4 = " << format_double(g.x4) << "\n";
            break;
        case GeometryKind::stented:
            out << "geometry.r0 = " << format_double(g.r0) << "\n";
            out << "geometry.k_right = " << format_double(g.k_right) << "\n";
            out << "geometry.dk = " << format_double(g.dk) << "\n";
            out << "geometry.x1_frac = " << format_double(g.x1_frac) << "\n";
            out << "geometry.x2_frac = " << format_double(g.x2_frac) << "\n";
            break;
        case GeometryKind::tabulated:
            out << "geometry.k_values = " << join_list(g.k_values) << "\n";
            out << "geometry.a0_values = " << join_list(g.a0_values) << "\n";
            break;
    }

    out << "init.kind = " << init_kind_name(c.init.kind) << "\n";
    if (c.init.kind == InitKind::equilibrium) {
        out << "init.cst = " << format_double(c.init.cst) << "\n";
    } else {
        out << "init.epsilon = " << format_double(c.init.epsilon) << "\n";
        out << "init.x0_frac = " << format_double(c.init.x0_frac) << "\n";
        out << "init.x1_frac = " << format_double(c.init.x1_frac) << "\n";
    }

    const auto emit_bc = [&out](const char* side, const BoundaryDriver& d) {
        out << "bc." << side << ".kind = " << boundary_kind_name(d.kind) << "\n";
        if (d.kind != BoundaryKind::imposed_discharge)
            return;
        out << "bc." << side << ".waveform = " << waveform_kind_name(d.waveform.kind) << "\n";
        if (d.waveform.kind == WaveformKind::sine) {
            out << "bc." << side << ".q_amp = " << format_double(d.waveform.q_amp) << "\n";
            out << "bc." << side << ".omega = " << format_double(d.waveform.omega) << "\n";
        } else {
            out << "bc." << side << ".q = " << format_double(d.waveform.value) << "\n";
        }
    };
    emit_bc("left", c.bc_left);
    emit_bc("right", c.bc_right);

    out << "run.n_cfl = " << format_double(c.n_cfl) << "\n";
    out << "run.t_end = " << format_double(c.t_end) << "\n";
    if (!c.snapshot_times.empty())
        out << "run.snapshots = " << join_list(c.snapshot_times) << "\n";
    out << "run.flux = " << flux_kind_name(c.flux) << "\n";
    return out.str();
}

} // namespace hemo
