#include "hemo/scenarios.hpp"

#include "hemo/analytic.hpp"

namespace hemo {

SimulationConfig dead_man_config() {
    SimulationConfig c;
    c.grid = {50, 0.14};
    c.phys = {1060.0, 0.0, 0.0};
    c.geometry.kind = GeometryKind::dead_man;
    c.geometry.r0 = 4e-3;
    c.geometry.k0 = 1e8;
    c.geometry.dk = 6e7;
    c.geometry.x1 = 1e-2;
    c.geometry.x2 = 3.05e-2;
    c.geometry.x3 = 4.95e-2;
    c.geometry.x4 = 7e-2;
    c.init.kind = InitKind::equilibrium;
    c.init.cst = 0.0;
    c.bc_left.kind = BoundaryKind::transmissive;
    c.bc_right.kind = BoundaryKind::transmissive;
    c.n_cfl = 1.0;
    c.t_end = 5.0;
    c.snapshot_times = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
    return c;
}

SimulationConfig stented_reflection_config() {
    SimulationConfig c;
    c.grid = {1500, 0.16};
    c.phys = {1060.0, 0.0, 0.0};
    c.geometry.kind = GeometryKind::stented;
    c.geometry.r0 = 4e-3;
    c.geometry.k_right = 1e8;
    c.geometry.dk = 6e7;
    c.geometry.x1_frac = 19.0 / 40.0;
    c.geometry.x2_frac = 0.5;
    c.init.kind = InitKind::radius_pulse;
    c.init.epsilon = 1e-2;
    c.init.x0_frac = 0.65;
    c.init.x1_frac = 0.85;
    c.bc_left.kind = BoundaryKind::transmissive;
    c.bc_right.kind = BoundaryKind::transmissive;
    c.n_cfl = 1.0;
    c.t_end = 8e-3;
    // Default sample times serve the amplitude measurement: one shot with the
    // split pulse still right of the interface, one with reflection and
    // transmission fully separated and still inside the domain.
    c.snapshot_times = {1.5e-3, 5.2e-3};
    return c;
}

SimulationConfig damped_wave_config(double cf) {
    SimulationConfig c;
    c.grid = {750, 3.0};
    c.phys = {1060.0, cf, 0.0};
    c.geometry.kind = GeometryKind::uniform;
    c.geometry.r0 = 4e-3;
    c.geometry.k = 1e8;
    c.init.kind = InitKind::equilibrium;
    c.init.cst = 0.0;
    c.bc_left.kind = BoundaryKind::imposed_discharge;
    c.bc_left.waveform.kind = WaveformKind::sine;
    c.bc_left.waveform.q_amp = 3.45e-7;
    c.bc_left.waveform.omega = 2.0 * pi / 0.5;
    c.bc_right.kind = BoundaryKind::transmissive;
    c.n_cfl = 1.0;
    c.t_end = 5.0;
    c.snapshot_times = {1.0, 2.0, 3.0, 4.0};
    // Dense tail so the late-time oscillation envelope can be extracted.
    for (int i = 0; i <= 20; ++i)
        c.snapshot_times.push_back(4.5 + 0.025 * i);
    return c;
}

SimulationConfig scenario_config(const std::string& name) {
    if (name == "dead_man")
        return dead_man_config();
    if (name == "stented_reflection")
        return stented_reflection_config();
    if (name == "damped_wave")
        return damped_wave_config(0.0);
    throw ConfigError("unknown scenario '" + name +
                      "' (available: dead_man, stented_reflection, damped_wave)");
}

double dead_man_stiffness(const GeometrySpec& g, double x) {
    if (x <= g.x1 || x >= g.x4)
        return g.k0;
    if (x < g.x2)
        return g.k0 + (g.dk / 2.0) * (std::sin((x - g.x1) / (g.x2 - g.x1) * pi - pi / 2.0) + 1.0);
    if (x <= g.x3)
        return g.k0 + g.dk;
    return g.k0 + (g.dk / 2.0) * (std::cos((x - g.x3) / (g.x4 - g.x3) * pi) + 1.0);
}

double stented_stiffness(const GeometrySpec& g, double length, double x) {
    const double x1 = g.x1_frac * length;
    const double x2 = g.x2_frac * length;
    if (x <= x1)
        return g.k_right + g.dk;
    if (x <= x2)
        return g.k_right + (g.dk / 2.0) * (1.0 + std::cos((x - x1) / (x2 - x1) * pi));
    return g.k_right;
}

VesselGeometry materialize_geometry(const SimulationConfig& cfg, const Grid1D& grid) {
    const GeometrySpec& g = cfg.geometry;
    if (g.kind == GeometryKind::tabulated) {
        if (g.k_values.size() != static_cast<std::size_t>(grid.j_cells) ||
            g.a0_values.size() != static_cast<std::size_t>(grid.j_cells))
            throw ConfigError("tabulated geometry does not match the grid size");
        return VesselGeometry(g.k_values, g.a0_values);
    }

    const double a0 = pi * g.r0 * g.r0;
    std::vector<double> k(grid.j_cells), rest(grid.j_cells, a0);
    for (int i = 0; i < grid.j_cells; ++i) {
        const double x = grid.center(i);
        switch (g.kind) {
            case GeometryKind::uniform: k[i] = g.k; break;
            case GeometryKind::dead_man: k[i] = dead_man_stiffness(g, x); break;
            case GeometryKind::stented: k[i] = stented_stiffness(g, grid.length, x); break;
            case GeometryKind::tabulated: break;  // handled above
        }
    }
    return VesselGeometry(std::move(k), std::move(rest));
}

SimulationState materialize_initial_state(const SimulationConfig& cfg, const Grid1D& grid,
                                          const VesselGeometry& geom) {
    if (cfg.init.kind == InitKind::equilibrium)
        return dead_man_state(geom, cfg.init.cst);

    // radius_pulse: a half-sine radius bump on [x0, x1], fluid at rest.
    const double x0 = cfg.init.x0_frac * grid.length;
    const double x1 = cfg.init.x1_frac * grid.length;
    SimulationState s;
    s.cells.resize(geom.size());
    for (std::size_t i = 0; i < geom.size(); ++i) {
        const double x = grid.center(static_cast<int>(i));
        if (x < x0 || x > x1) {
            s.cells[i] = {geom.a0[i], 0.0};
            continue;
        }
        const double r0 = std::sqrt(geom.a0[i] / pi);
        const double r = r0 * (1.0 + cfg.init.epsilon * std::sin((x - x0) / (x1 - x0) * pi));
        s.cells[i] = {pi * r * r, 0.0};
    }
    return s;
}

BoundaryConditions materialize_boundaries(const SimulationConfig& cfg) {
    return {cfg.bc_left, cfg.bc_right};
}

} // namespace hemo
