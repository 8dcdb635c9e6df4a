#pragma once

#include "hemo/boundary.hpp"
#include "hemo/well_balanced.hpp"

#include <string>
#include <vector>

namespace hemo {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    int cells = 0;
    double length = 0.0;
};

enum class GeometryKind { uniform, dead_man, stented, tabulated };

// Wall-property profile.  The named kinds are evaluated analytically at cell
// centers; tabulated carries explicit per-cell samples.
struct GeometrySpec {
    GeometryKind kind = GeometryKind::uniform;
    double r0 = 4e-3;      // rest radius [m], all analytic kinds
    double k = 1e8;        // uniform stiffness [Pa/m]
    double dk = 6e7;       // bump/step height, dead_man and stented
    double k0 = 1e8;       // dead_man base stiffness
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;  // dead_man ramp abscissae [m]
    double k_right = 1e8;  // stented downstream stiffness
    double x1_frac = 0.0, x2_frac = 0.0;  // stented ramp, fractions of length
    std::vector<double> k_values;   // tabulated
    std::vector<double> a0_values;  // tabulated
};

enum class InitKind { equilibrium, radius_pulse };

struct InitSpec {
    InitKind kind = InitKind::equilibrium;
    double cst = 0.0;      // equilibrium: level of k sqrt(a) - cal_a0
    double epsilon = 0.0;  // radius_pulse: relative radius amplitude
    double x0_frac = 0.0;  // radius_pulse support, fractions of length
    double x1_frac = 0.0;
};

struct SimulationConfig {
    GridSpec grid;
    PhysicalParams phys;
    GeometrySpec geometry;
    InitSpec init;
    BoundaryDriver bc_left;
    BoundaryDriver bc_right;
    double n_cfl = 1.0;
    double t_end = 0.0;
    std::vector<double> snapshot_times;
    FluxKind flux = FluxKind::hll;
};

// Flat "key = value" text, one entry per line, '#' comments.  Unknown keys
// are rejected.
SimulationConfig parse_config_text(const std::string& text);
SimulationConfig parse_config_file(const std::string& path);

// key may be the full dotted name, a documented alias (cf, cells, t_end,
// n_cfl, q_amp, omega, epsilon, flux, snapshots), or any unambiguous last
// segment of a dotted name.
void apply_override(SimulationConfig& cfg, const std::string& key, const std::string& value);

// entries of the form "key=value"
void apply_overrides(SimulationConfig& cfg, const std::vector<std::string>& sets);

// Field-level checks; throws ConfigError naming the offending key.
void validate(const SimulationConfig& cfg);

// Canonical text form; parse(serialize(cfg)) reproduces cfg exactly.
std::string serialize_config(const SimulationConfig& cfg);

} // namespace hemo
