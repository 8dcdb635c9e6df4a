#include "hemo/flux.hpp"

#include <algorithm>
#include <string>

namespace hemo {

double sound_speed(double a, double k, double rho) {
    if (a < 0.0)
        throw DegenerateAreaError("sound_speed: negative area");
    return std::sqrt(k * std::sqrt(a) / (2.0 * rho * sqrt_pi));
}

double pressure_impulse(double a, double k, double rho) {
    if (a < 0.0)
        throw DegenerateAreaError("pressure_impulse: negative area");
    return k * a * std::sqrt(a) / (3.0 * rho * sqrt_pi);
}

FluxVector physical_flux(const ConservedState& u, double k, double rho) {
    if (u.a < 0.0)
        throw DegenerateAreaError("physical_flux: negative area");
    if (u.a == 0.0) {
        if (u.q != 0.0)
            throw InconsistentStateError("physical_flux: dry cell with nonzero discharge");
        return {0.0, 0.0};
    }
    return {u.q, u.q * u.q / u.a + pressure_impulse(u.a, k, rho)};
}

WaveSpeedPair eigenvalues(const ConservedState& u, double k, double rho) {
    if (u.a <= 0.0)
        throw DegenerateAreaError("eigenvalues: need a > 0");
    const double v = u.q / u.a;
    const double c = sound_speed(u.a, k, rho);
    return {v - c, v + c};
}

namespace {

WaveSpeedPair state_speeds(const ConservedState& u, double k, double rho) {
    if (u.a == 0.0)
        return {0.0, 0.0};
    return eigenvalues(u, k, rho);
}

} // namespace

FluxVector hll_flux(const ConservedState& ul, const ConservedState& ur,
                    double k_star, double rho) {
    const WaveSpeedPair sl = state_speeds(ul, k_star, rho);
    const WaveSpeedPair sr = state_speeds(ur, k_star, rho);
    const double c1 = std::min(sl.lambda_minus, sr.lambda_minus);
    const double c2 = std::max(sl.lambda_plus, sr.lambda_plus);

    if (0.0 <= c1)
        return physical_flux(ul, k_star, rho);
    if (c2 <= 0.0)
        return physical_flux(ur, k_star, rho);

    const FluxVector fl = physical_flux(ul, k_star, rho);
    const FluxVector fr = physical_flux(ur, k_star, rho);
    const double inv = 1.0 / (c2 - c1);
    return {(c2 * fl.mass - c1 * fr.mass) * inv + c1 * c2 * inv * (ur.a - ul.a),
            (c2 * fl.momentum - c1 * fr.momentum) * inv + c1 * c2 * inv * (ur.q - ul.q)};
}

FluxVector rusanov_flux(const ConservedState& ul, const ConservedState& ur,
                        double k_star, double rho) {
    const WaveSpeedPair sl = state_speeds(ul, k_star, rho);
    const WaveSpeedPair sr = state_speeds(ur, k_star, rho);
    const double s = std::max(std::max(std::abs(sl.lambda_minus), std::abs(sl.lambda_plus)),
                              std::max(std::abs(sr.lambda_minus), std::abs(sr.lambda_plus)));
    const FluxVector fl = physical_flux(ul, k_star, rho);
    const FluxVector fr = physical_flux(ur, k_star, rho);
    return {0.5 * (fl.mass + fr.mass) - 0.5 * s * (ur.a - ul.a),
            0.5 * (fl.momentum + fr.momentum) - 0.5 * s * (ur.q - ul.q)};
}

double max_signal_speed(const SimulationState& s, const VesselGeometry& geom, double rho) {
    if (s.cells.size() != geom.size())
        throw std::invalid_argument("max_signal_speed: state/geometry size mismatch");
    double smax = 0.0;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        const ConservedState& u = s.cells[i];
        if (u.a == 0.0)
            continue;
        const double speed = std::abs(velocity(u)) + sound_speed(u.a, geom.k[i], rho);
        smax = std::max(smax, speed);
    }
    return smax;
}

double cfl_timestep(const SimulationState& s, const VesselGeometry& geom,
                    double rho, double dx, double n_cfl) {
    if (!(n_cfl > 0.0) || n_cfl > 1.0)
        throw std::invalid_argument("cfl_timestep: n_cfl must lie in (0, 1]");
    const double smax = max_signal_speed(s, geom, rho);
    if (smax == 0.0)
        throw AllDryError("cfl_timestep: every cell is dry, no signal speed");
    return n_cfl * dx / smax;
}

} // namespace hemo
