#pragma once

#include "hemo/config.hpp"

#include <string>

namespace hemo {

// Verification presets.  Each builder is pure: it returns the same config on
// every call, and callers tweak it through apply_override.

SimulationConfig dead_man_config();
SimulationConfig stented_reflection_config();
SimulationConfig damped_wave_config(double cf);

// name is one of dead_man | stented_reflection | damped_wave (the latter
// defaults to the frictionless variant).
SimulationConfig scenario_config(const std::string& name);

// Stiffness profiles of the analytic geometry kinds, evaluated pointwise.
double dead_man_stiffness(const GeometrySpec& g, double x);
double stented_stiffness(const GeometrySpec& g, double length, double x);

// Sample the configured geometry / initial condition at cell centers.
VesselGeometry materialize_geometry(const SimulationConfig& cfg, const Grid1D& grid);
SimulationState materialize_initial_state(const SimulationConfig& cfg, const Grid1D& grid,
                                          const VesselGeometry& geom);
BoundaryConditions materialize_boundaries(const SimulationConfig& cfg);

} // namespace hemo
