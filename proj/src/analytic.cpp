#include "hemo/analytic.hpp"

#include <algorithm>
#include <complex>
#include <string>

namespace hemo {

SimulationState dead_man_state(const VesselGeometry& geom, double cst) {
    SimulationState s;
    s.cells.resize(geom.size());
    for (std::size_t i = 0; i < geom.size(); ++i) {
        if (cst == 0.0) {
            s.cells[i] = {geom.a0[i], 0.0};
            continue;
        }
        const double root = (geom.cal_a0[i] + cst) / geom.k[i];
        if (!(root > 0.0))
            throw NonPhysicalError("dead_man_state: cst drives cell " + std::to_string(i) +
                                   " to a non-positive area");
        s.cells[i] = {root * root, 0.0};
    }
    return s;
}

InterfaceCoefficients interface_coefficients(double c_left, double c_right) {
    if (!(c_left > 0.0) || !(c_right > 0.0))
        throw std::domain_error("interface_coefficients: wave speeds must be positive");
    const double r = (c_left - c_right) / (c_left + c_right);
    return {r, 1.0 + r};
}

DampedWaveParams damped_wave_params(double omega, double c0, double cf,
                                    double a0, double q_amp) {
    if (!(omega > 0.0) || !(c0 > 0.0) || !(a0 > 0.0) || cf < 0.0)
        throw std::domain_error("damped_wave_params: need omega, c0, a0 > 0 and cf >= 0");
    DampedWaveParams p;
    p.omega = omega;
    p.q_amp = q_amp;
    p.c0 = c0;
    if (cf == 0.0) {
        p.k_r = omega / c0;
        p.k_i = 0.0;
        return p;
    }
    // K^2 c0^2 = omega^2 - i omega cf / a0; the principal square root lands
    // in the fourth quadrant, which is exactly the decaying branch.
    const std::complex<double> rhs(omega * omega, -omega * cf / a0);
    const std::complex<double> K = std::sqrt(rhs) / c0;
    p.k_r = K.real();
    p.k_i = K.imag();
    return p;
}

double damped_wave_discharge(const DampedWaveParams& p, double x, double t) {
    if (p.k_r * x > p.omega * t)
        return 0.0;
    return p.q_amp * std::sin(p.omega * t - p.k_r * x) * std::exp(p.k_i * x);
}

namespace {

const Snapshot& nearest_snapshot(const SnapshotSeries& series, double t) {
    if (series.snapshots.empty())
        throw std::invalid_argument("measure_pulse_amplitudes: empty series");
    const Snapshot* best = &series.snapshots.front();
    for (const Snapshot& s : series.snapshots)
        if (std::abs(s.time - t) < std::abs(best->time - t))
            best = &s;
    return *best;
}

// |p - p0| per cell; equals k |R - R0| under the elastic wall law.
std::vector<double> pressure_disturbance(const SnapshotSeries& series, const Snapshot& snap) {
    std::vector<double> out(snap.cells.size());
    for (std::size_t i = 0; i < snap.cells.size(); ++i)
        out[i] = std::abs(pressure(snap.cells[i], series.geometry.k[i],
                                   series.geometry.a0[i], 0.0));
    return out;
}

} // namespace

PulseAmplitudes measure_pulse_amplitudes(const SnapshotSeries& series,
                                         double interface_x, const MeasureWindow& window) {
    const Snapshot& before = nearest_snapshot(series, window.t_before);
    const Snapshot& after = nearest_snapshot(series, window.t_after);
    const std::vector<double> dist_before = pressure_disturbance(series, before);
    const std::vector<double> dist_after = pressure_disturbance(series, after);

    PulseAmplitudes amp;
    for (std::size_t i = 0; i < dist_before.size(); ++i) {
        const double x = series.grid.center(static_cast<int>(i));
        if (x > interface_x)
            amp.incident = std::max(amp.incident, dist_before[i]);
    }
    for (std::size_t i = 0; i < dist_after.size(); ++i) {
        const double x = series.grid.center(static_cast<int>(i));
        if (x > interface_x)
            amp.reflected = std::max(amp.reflected, dist_after[i]);
        else
            amp.transmitted = std::max(amp.transmitted, dist_after[i]);
    }
    if (amp.incident <= 0.0)
        throw std::domain_error("measure_pulse_amplitudes: no incident disturbance");

    // A pulse still sitting on the interface at either time invalidates the
    // left/right split, so refuse windows where the near-interface band is
    // not quiet relative to the incident peak.
    const double band = 0.02 * series.grid.length;
    double near_before = 0.0, near_after = 0.0;
    for (std::size_t i = 0; i < dist_after.size(); ++i) {
        const double x = series.grid.center(static_cast<int>(i));
        if (std::abs(x - interface_x) <= band) {
            near_before = std::max(near_before, dist_before[i]);
            near_after = std::max(near_after, dist_after[i]);
        }
    }
    if (near_before > 0.25 * amp.incident || near_after > 0.25 * amp.incident)
        throw std::domain_error("measure_pulse_amplitudes: pulse straddles the interface "
                                "at a measurement time; adjust the window");
    return amp;
}

std::vector<double> max_abs_q_envelope(const SnapshotSeries& series, double t_lo, double t_hi) {
    if (series.snapshots.empty())
        throw std::invalid_argument("max_abs_q_envelope: empty series");
    std::vector<double> env(series.snapshots.front().cells.size(), 0.0);
    bool hit = false;
    for (const Snapshot& s : series.snapshots) {
        if (s.time < t_lo || s.time > t_hi)
            continue;
        hit = true;
        for (std::size_t i = 0; i < env.size(); ++i)
            env[i] = std::max(env[i], std::abs(s.cells[i].q));
    }
    if (!hit)
        throw std::invalid_argument("max_abs_q_envelope: no snapshots in the window");
    return env;
}

double fit_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_log_slope: need two or more matched samples");
    double mean_x = 0.0, mean_ly = 0.0;
    std::vector<double> ly(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0))
            throw std::domain_error("fit_log_slope: samples must be positive");
        ly[i] = std::log(y[i]);
        mean_x += x[i];
        mean_ly += ly[i];
    }
    mean_x /= static_cast<double>(x.size());
    mean_ly /= static_cast<double>(x.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mean_x) * (ly[i] - mean_ly);
        den += (x[i] - mean_x) * (x[i] - mean_x);
    }
    if (den == 0.0)
        throw std::domain_error("fit_log_slope: degenerate abscissae");
    return num / den;
}

} // namespace hemo
