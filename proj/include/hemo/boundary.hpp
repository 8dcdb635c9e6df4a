#pragma once

#include "hemo/types.hpp"

namespace hemo {

enum class BoundaryKind { transmissive, wall, imposed_discharge };

enum class WaveformKind { sine, constant };

struct Waveform {
    WaveformKind kind = WaveformKind::constant;
    double q_amp = 0.0;  // sine amplitude [m^3/s]
    double omega = 0.0;  // sine angular frequency [rad/s]
    double value = 0.0;  // constant level [m^3/s]
};

double waveform_value(const Waveform& w, double t);

struct BoundaryDriver {
    BoundaryKind kind = BoundaryKind::transmissive;
    Waveform waveform;
};

struct BoundaryConditions {
    BoundaryDriver left;
    BoundaryDriver right;
};

struct GhostStates {
    ConservedState left;
    ConservedState right;
};

// Ghost cells that close the stencil: transmissive copies the inner edge
// cell, wall copies the area and negates the discharge, imposed_discharge
// copies the area and sets q to the waveform at time t.  Ghost geometry is
// always a copy of the adjacent cell's, so boundary interfaces never see a
// wall-property jump.
GhostStates ghost_states(const SimulationState& s, const BoundaryConditions& bc, double t);

} // namespace hemo
