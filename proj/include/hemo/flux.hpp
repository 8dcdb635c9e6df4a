#pragma once

#include "hemo/types.hpp"

namespace hemo {

struct FluxVector {
    double mass = 0.0;
    double momentum = 0.0;
};

struct WaveSpeedPair {
    double lambda_minus = 0.0;
    double lambda_plus = 0.0;
};

struct AllDryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// c = sqrt(k sqrt(a) / (2 rho sqrt(pi)))
double sound_speed(double a, double k, double rho);

// k a^{3/2} / (3 rho sqrt(pi)); the elastic part of the momentum flux.
double pressure_impulse(double a, double k, double rho);

// F(U) = (q, q^2/a + pressure_impulse(a)); dry states map to (0, 0).
FluxVector physical_flux(const ConservedState& u, double k, double rho);

// (u - c, u + c); callers treat dry cells as zero-speed themselves.
WaveSpeedPair eigenvalues(const ConservedState& u, double k, double rho);

FluxVector hll_flux(const ConservedState& ul, const ConservedState& ur,
                    double k_star, double rho);

// Single-speed counterpart of hll_flux, kept as an independent cross-check.
FluxVector rusanov_flux(const ConservedState& ul, const ConservedState& ur,
                        double k_star, double rho);

// max_i (|u_i| + c_i); dry cells contribute zero.
double max_signal_speed(const SimulationState& s, const VesselGeometry& geom, double rho);

// dt = n_cfl * dx / max_signal_speed; throws AllDryError when nothing moves.
double cfl_timestep(const SimulationState& s, const VesselGeometry& geom,
                    double rho, double dx, double n_cfl);

} // namespace hemo
