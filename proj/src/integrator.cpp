#include "hemo/integrator.hpp"

#include "hemo/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace hemo {

namespace {

// Ghost-padded copies; ghost geometry duplicates the edge cells so boundary
// interfaces carry no wall-property jump.
VesselGeometry pad_geometry(const VesselGeometry& geom) {
    VesselGeometry ext;
    const std::size_t n = geom.size();
    ext.k.reserve(n + 2);
    ext.a0.reserve(n + 2);
    ext.cal_a0.reserve(n + 2);
    ext.k.push_back(geom.k.front());
    ext.a0.push_back(geom.a0.front());
    ext.cal_a0.push_back(geom.cal_a0.front());
    ext.k.insert(ext.k.end(), geom.k.begin(), geom.k.end());
    ext.a0.insert(ext.a0.end(), geom.a0.begin(), geom.a0.end());
    ext.cal_a0.insert(ext.cal_a0.end(), geom.cal_a0.begin(), geom.cal_a0.end());
    ext.k.push_back(geom.k.back());
    ext.a0.push_back(geom.a0.back());
    ext.cal_a0.push_back(geom.cal_a0.back());
    return ext;
}

} // namespace

SimulationState predict(const SimulationState& s, const VesselGeometry& geom,
                        const PhysicalParams& phys, const BoundaryConditions& bc,
                        double dx, double dt, FluxKind kind, long* clamp_events) {
    const std::size_t n = s.cells.size();
    if (n != geom.size())
        throw std::invalid_argument("predict: state/geometry size mismatch");
    if (n < 2)
        throw std::invalid_argument("predict: need at least 2 cells");

    const GhostStates ghosts = ghost_states(s, bc, s.time);
    std::vector<ConservedState> ext;
    ext.reserve(n + 2);
    ext.push_back(ghosts.left);
    ext.insert(ext.end(), s.cells.begin(), s.cells.end());
    ext.push_back(ghosts.right);

    const VesselGeometry ext_geom = pad_geometry(geom);
    const std::vector<InterfaceFlux> fluxes = interface_fluxes(ext, ext_geom, phys.rho, kind);

    SimulationState out;
    out.time = s.time + dt;
    out.cells.resize(n);
    const double r = dt / dx;
    for (std::size_t i = 0; i < n; ++i) {
        const FluxVector& fr = fluxes[i + 1].left;  // right interface, this cell on its left
        const FluxVector& fl = fluxes[i].right;     // left interface, this cell on its right
        out.cells[i].a = s.cells[i].a - r * (fr.mass - fl.mass);
        out.cells[i].q = s.cells[i].q - r * (fr.momentum - fl.momentum);
    }
    if (clamp_events)
        for (const InterfaceFlux& f : fluxes)
            *clamp_events += f.clamped;
    return out;
}

SimulationState friction_correct(const SimulationState& s, double cf, double dt) {
    if (cf < 0.0)
        throw std::invalid_argument("friction_correct: cf must be non-negative");
    if (cf == 0.0 || dt == 0.0)
        return s;
    SimulationState out;
    out.time = s.time;
    out.cells.resize(s.cells.size());
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        const ConservedState& u = s.cells[i];
        if (u.a == 0.0) {
            out.cells[i] = u;
            continue;
        }
        const double v = velocity(u) / (1.0 + cf * dt / u.a);
        out.cells[i] = {u.a, u.a * v};
    }
    return out;
}

SimulationState step(const SimulationState& s, const VesselGeometry& geom,
                     const PhysicalParams& phys, const BoundaryConditions& bc,
                     double dx, double dt, FluxKind kind, StepReport& report) {
    report = StepReport{};
    report.dt_used = dt;
    report.max_wave_speed = max_signal_speed(s, geom, phys.rho);
    SimulationState out = predict(s, geom, phys, bc, dx, dt, kind, &report.clamp_events);
    out = friction_correct(out, phys.cf, dt);
    report.mass_total = mass_total(out.cells, dx);
    return out;
}

double mass_total(const std::vector<ConservedState>& cells, double dx) {
    double sum = 0.0, carry = 0.0;
    for (const ConservedState& u : cells) {
        const double y = u.a - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum * dx;
}

void throw_if_invalid(const SimulationState& s) {
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        const ConservedState& u = s.cells[i];
        if (!std::isfinite(u.a) || !std::isfinite(u.q) || u.a < 0.0)
            throw NumericalError("invalid state at t = " + std::to_string(s.time) +
                                 ", cell " + std::to_string(i) + ": a = " +
                                 std::to_string(u.a) + ", q = " + std::to_string(u.q));
    }
}

RunResult run(const SimulationConfig& cfg) {
    validate(cfg);
    const Grid1D grid(cfg.grid.cells, cfg.grid.length);
    const VesselGeometry geom = materialize_geometry(cfg, grid);
    const BoundaryConditions bc = materialize_boundaries(cfg);
    SimulationState state = materialize_initial_state(cfg, grid, geom);

    std::vector<double> schedule = cfg.snapshot_times;
    schedule.push_back(0.0);
    schedule.push_back(cfg.t_end);
    std::sort(schedule.begin(), schedule.end());
    schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());

    RunResult res;
    res.series.grid = grid;
    res.series.geometry = geom;
    res.series.params = cfg.phys;

    const auto t_start = std::chrono::steady_clock::now();
    throw_if_invalid(state);
    res.series.snapshots.push_back({state.time, state.cells});

    for (std::size_t next = 1; next < schedule.size(); ++next) {
        const double target = schedule[next];
        while (state.time < target) {
            double dt = cfl_timestep(state, geom, cfg.phys.rho, grid.dx, cfg.n_cfl);
            bool capped = false;
            if (state.time + dt >= target) {
                dt = target - state.time;
                capped = true;
            }
            if (!(dt > 0.0))
                throw NumericalError("run: timestep collapsed at t = " + std::to_string(state.time));
            StepReport rep;
            state = step(state, geom, cfg.phys, bc, grid.dx, dt, cfg.flux, rep);
            if (capped)
                state.time = target;
            res.clamp_events += rep.clamp_events;
            ++res.steps;
            throw_if_invalid(state);
        }
        res.series.snapshots.push_back({state.time, state.cells});
    }

    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return res;
}

} // namespace hemo
