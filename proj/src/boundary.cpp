#include "hemo/boundary.hpp"

namespace hemo {

double waveform_value(const Waveform& w, double t) {
    switch (w.kind) {
        case WaveformKind::sine: return w.q_amp * std::sin(w.omega * t);
        case WaveformKind::constant: return w.value;
    }
    throw std::logic_error("waveform_value: unhandled kind");
}

namespace {

ConservedState ghost_of(const ConservedState& edge, const BoundaryDriver& drv, double t) {
    switch (drv.kind) {
        case BoundaryKind::transmissive:
            return edge;
        case BoundaryKind::wall:
            return {edge.a, -edge.q};
        case BoundaryKind::imposed_discharge: {
            const double qb = waveform_value(drv.waveform, t);
            if (edge.a == 0.0 && qb != 0.0)
                throw InconsistentStateError("ghost_states: discharge imposed on a dry edge cell");
            return {edge.a, qb};
        }
    }
    throw std::logic_error("ghost_of: unhandled kind");
}

} // namespace

GhostStates ghost_states(const SimulationState& s, const BoundaryConditions& bc, double t) {
    if (s.cells.empty())
        throw std::invalid_argument("ghost_states: empty state");
    return {ghost_of(s.cells.front(), bc.left, t),
            ghost_of(s.cells.back(), bc.right, t)};
}

} // namespace hemo
