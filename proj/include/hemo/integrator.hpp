#pragma once

#include "hemo/boundary.hpp"
#include "hemo/config.hpp"
#include "hemo/well_balanced.hpp"

namespace hemo {

// NaN, infinity or negative area reached during time stepping.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepReport {
    double dt_used = 0.0;
    double max_wave_speed = 0.0;
    double mass_total = 0.0;
    long clamp_events = 0;
};

struct Snapshot {
    double time = 0.0;
    std::vector<ConservedState> cells;
};

struct SnapshotSeries {
    Grid1D grid;
    VesselGeometry geometry;
    PhysicalParams params;
    std::vector<Snapshot> snapshots;
};

struct RunResult {
    SnapshotSeries series;
    long steps = 0;
    long clamp_events = 0;
    double wall_seconds = 0.0;
};

// Conservative update with the corrected interface fluxes; no friction.
// clamp_events, when given, accumulates the reconstruction clamp count.
SimulationState predict(const SimulationState& s, const VesselGeometry& geom,
                        const PhysicalParams& phys, const BoundaryConditions& bc,
                        double dx, double dt, FluxKind kind = FluxKind::hll,
                        long* clamp_events = nullptr);

// Semi-implicit friction: u <- u / (1 + cf dt / a), applied cellwise with the
// area held fixed.  Dry cells pass through.
SimulationState friction_correct(const SimulationState& s, double cf, double dt);

// One full step: predict, then friction, in that order.
SimulationState step(const SimulationState& s, const VesselGeometry& geom,
                     const PhysicalParams& phys, const BoundaryConditions& bc,
                     double dx, double dt, FluxKind kind, StepReport& report);

// Integrates cfg from t = 0 to t_end with CFL-limited steps, truncating a
// step whenever it would overshoot a snapshot time so snapshots land exactly.
// The emitted schedule is {0} + cfg.snapshot_times + {t_end}, deduplicated.
RunResult run(const SimulationConfig& cfg);

// Kahan-summed total volume of the cell array times dx.
double mass_total(const std::vector<ConservedState>& cells, double dx);

// Throws NumericalError when any cell has a non-finite field or a < 0.
void throw_if_invalid(const SimulationState& s);

} // namespace hemo
