#pragma once

#include "hemo/integrator.hpp"

namespace hemo {

struct NonPhysicalError : std::domain_error {
    using std::domain_error::domain_error;
};

// Traveling-wave description of the friction-damped inflow problem:
// Q(t, x) = q_amp sin(omega t - k_r x) exp(k_i x) behind the front.
struct DampedWaveParams {
    double omega = 0.0;
    double k_r = 0.0;  // spatial frequency [rad/m], > 0
    double k_i = 0.0;  // spatial decay rate [1/m], <= 0
    double q_amp = 0.0;
    double c0 = 0.0;
};

// Amplitude ratios of a wave hitting a stiffness interface from the right
// medium; they apply to pressure-perturbation amplitudes k (R - R0).
struct InterfaceCoefficients {
    double reflection = 0.0;
    double transmission = 0.0;  // always 1 + reflection
};

// Pressure-perturbation amplitudes max |k (R - R0)| = max |p - p0| [Pa].
struct PulseAmplitudes {
    double incident = 0.0;
    double reflected = 0.0;
    double transmitted = 0.0;
};

struct MeasureWindow {
    double t_before = 0.0;  // snapshot time before the pulse meets the interface
    double t_after = 0.0;   // snapshot time after reflection and transmission separate
};

// Rest state with k sqrt(a) - cal_a0 = cst in every cell and zero discharge;
// cst = 0 reproduces the rest areas exactly.
SimulationState dead_man_state(const VesselGeometry& geom, double cst);

// reflection = (c_left - c_right) / (c_left + c_right) for a wave arriving
// from the right medium; transmission is defined through the matching
// identity 1 + reflection, which therefore holds bitwise.
InterfaceCoefficients interface_coefficients(double c_left, double c_right);

// Solves K^2 c0^2 = omega^2 - i omega cf / a0 on the branch k_r > 0, k_i <= 0.
DampedWaveParams damped_wave_params(double omega, double c0, double cf,
                                    double a0, double q_amp);

// 0 ahead of the causal front k_r x > omega t, the damped sine behind it.
double damped_wave_discharge(const DampedWaveParams& p, double x, double t);

// Reads the snapshots nearest window.t_before / window.t_after and reports
// peak |p - p0| right of interface_x (incident, then reflected) and left of
// it (transmitted).  Refuses windows where the pulse still straddles the
// interface at measurement time.
PulseAmplitudes measure_pulse_amplitudes(const SnapshotSeries& series,
                                         double interface_x, const MeasureWindow& window);

// Per-cell max |Q| over snapshots with time in [t_lo, t_hi].
std::vector<double> max_abs_q_envelope(const SnapshotSeries& series, double t_lo, double t_hi);

// Least-squares slope of ln(y) against x; y must be positive.
double fit_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace hemo
