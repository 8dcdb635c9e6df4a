#pragma once

#include "hemo/flux.hpp"

#include <vector>

namespace hemo {

struct CellGeometry {
    double k = 0.0;
    double cal_a0 = 0.0;
};

struct InterfaceReconstruction {
    ConservedState left;
    ConservedState right;
    double k_star = 0.0;
    double delta_cal_a0 = 0.0;
    int clamped = 0;  // sides whose area went negative before the clamp (0..2)
};

enum class FluxKind { hll, rusanov };

// Flux pair of one interface after the wall-forcing correction; the mass
// component is shared verbatim by both adjacent cells, only the momentum
// component differs between the two sides.
struct InterfaceFlux {
    FluxVector left;   // used by the cell on the left of the interface
    FluxVector right;  // used by the cell on the right of the interface
    int clamped = 0;
};

// Interface states in the sqrt(a) variable.  Velocity, not discharge, is
// carried over from the parent cells.  A rest state with k sqrt(a) - cal_a0
// constant across the interface reconstructs to bitwise-equal areas on both
// sides, which is what keeps such states stationary.
InterfaceReconstruction reconstruct_interface(const ConservedState& ul, CellGeometry gl,
                                              const ConservedState& ur, CellGeometry gr);

// One flux pair per interface of a ghost-padded cell array: cells has
// size J + 2 (ghosts at both ends), the result has size J + 1.
std::vector<InterfaceFlux> interface_fluxes(const std::vector<ConservedState>& cells,
                                            const VesselGeometry& geom, double rho,
                                            FluxKind kind = FluxKind::hll);

} // namespace hemo
