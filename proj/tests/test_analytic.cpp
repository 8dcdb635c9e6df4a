#include "hemo/analytic.hpp"

#include "hemo/scenarios.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hemo;

namespace {
const double rho = 1060.0;
const double a_ref = pi * 4e-3 * 4e-3;
} // namespace

TEST_CASE("dead_man_state") {
    SUBCASE("cst = 0 reproduces the rest areas bitwise") {
        testing::StateSampler sampler(12);
        std::vector<double> k(20), a0(20);
        for (int i = 0; i < 20; ++i) {
            k[i] = sampler.stiffness();
            a0[i] = sampler.uniform(1e-5, 2e-4);
        }
        const VesselGeometry geom(k, a0);
        const SimulationState s = dead_man_state(geom, 0.0);
        for (int i = 0; i < 20; ++i) {
            CHECK(s.cells[i].a == a0[i]);
            CHECK(s.cells[i].q == 0.0);
        }
    }
    SUBCASE("cst equal to the forcing term doubles the root") {
        const VesselGeometry geom({1e8}, {a_ref});
        const SimulationState s = dead_man_state(geom, geom.cal_a0[0]);
        CHECK(s.cells[0].a == doctest::Approx(4 * a_ref).epsilon(1e-14));
    }
    SUBCASE("the defining residual k sqrt(a) - cal_a0 = cst holds") {
        testing::StateSampler sampler(13);
        for (const double cst : {-1e3, 1e4, 2.5e5}) {
            std::vector<double> k(10), a0(10);
            for (int i = 0; i < 10; ++i) {
                k[i] = sampler.stiffness();
                a0[i] = sampler.uniform(1e-5, 2e-4);
            }
            const VesselGeometry geom(k, a0);
            const SimulationState s = dead_man_state(geom, cst);
            for (int i = 0; i < 10; ++i) {
                const double res = k[i] * std::sqrt(s.cells[i].a) - geom.cal_a0[i];
                CHECK(res == doctest::Approx(cst).epsilon(1e-12));
            }
        }
    }
    SUBCASE("a level below the forcing term is non-physical") {
        const VesselGeometry geom({1e8}, {a_ref});
        CHECK_THROWS_AS(dead_man_state(geom, -2 * geom.cal_a0[0]), NonPhysicalError);
    }
}

TEST_CASE("interface coefficients") {
    // Stiff-to-soft transition of the reflection preset: c_left = 17.37,
    // c_right = 13.74 (frozen 40-digit evaluations).
    const double c_left = sound_speed(a_ref, 1.6e8, rho);
    const double c_right = sound_speed(a_ref, 1.0e8, rho);
    const InterfaceCoefficients c = interface_coefficients(c_left, c_right);
    CHECK(c.reflection == doctest::Approx(0.116963119775494224).epsilon(1e-14));
    CHECK(c.transmission == doctest::Approx(1.116963119775494224).epsilon(1e-14));
    CHECK(c.transmission == 1.0 + c.reflection);  // matching identity, bitwise

    const InterfaceCoefficients none = interface_coefficients(13.74, 13.74);
    CHECK(none.reflection == 0.0);
    CHECK(none.transmission == 1.0);

    const InterfaceCoefficients soft_to_stiff = interface_coefficients(c_right, c_left);
    CHECK(soft_to_stiff.reflection < 0.0);  // sign flips with the gradient

    CHECK_THROWS_AS(interface_coefficients(0.0, 13.74), std::domain_error);
    CHECK_THROWS_AS(interface_coefficients(13.74, -1.0), std::domain_error);
}

TEST_CASE("damped wave dispersion") {
    const double c0 = sound_speed(a_ref, 1e8, rho);
    const double omega = 2 * pi / 0.5;

    SUBCASE("frictionless limit is exact") {
        const DampedWaveParams p = damped_wave_params(omega, c0, 0.0, a_ref, 3.45e-7);
        CHECK(p.k_r == omega / c0);  // bitwise: special-cased
        CHECK(p.k_i == 0.0);
        CHECK(p.k_r == doctest::Approx(0.91484558981960317).epsilon(1e-14));
    }
    SUBCASE("frozen viscous roots") {
        const DampedWaveParams p = damped_wave_params(omega, c0, 0.005053, a_ref, 3.45e-7);
        CHECK(p.k_r == doctest::Approx(1.9473412689480155).epsilon(1e-12));
        CHECK(p.k_i == doctest::Approx(-1.7190682256779949).epsilon(1e-12));
    }
    SUBCASE("decaying branch is selected for any friction level") {
        for (const double cf : {1e-5, 1e-3, 0.005053, 0.1}) {
            const DampedWaveParams p = damped_wave_params(omega, c0, cf, a_ref, 1.0);
            CHECK(p.k_r > 0.0);
            CHECK(p.k_i < 0.0);
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(damped_wave_params(0.0, c0, 0.0, a_ref, 1.0), std::domain_error);
        CHECK_THROWS_AS(damped_wave_params(omega, 0.0, 0.0, a_ref, 1.0), std::domain_error);
        CHECK_THROWS_AS(damped_wave_params(omega, c0, -1.0, a_ref, 1.0), std::domain_error);
        CHECK_THROWS_AS(damped_wave_params(omega, c0, 0.0, 0.0, 1.0), std::domain_error);
    }
}

TEST_CASE("damped wave solves the damped wave equation (finite-difference oracle)") {
    // Independent check of the dispersion relation and branch choice: insert
    // Q(x, t) into Q_tt + (cf/a0) Q_t - c0^2 Q_xx = 0 with central
    // differences; the residual must shrink like h^2.
    const double c0 = sound_speed(a_ref, 1e8, rho);
    const double omega = 2 * pi / 0.5;

    for (const double cf : {0.0, 0.005053}) {
        const DampedWaveParams p = damped_wave_params(omega, c0, cf, a_ref, 3.45e-7);
        const double x = 0.8, t = 1.3;  // safely behind the causal front
        REQUIRE(p.k_r * (x + 0.01) < p.omega * (t - 0.01));

        const auto residual = [&](double h) {
            const double q = damped_wave_discharge(p, x, t);
            const double qtp = damped_wave_discharge(p, x, t + h);
            const double qtm = damped_wave_discharge(p, x, t - h);
            const double qxp = damped_wave_discharge(p, x + h, t);
            const double qxm = damped_wave_discharge(p, x - h, t);
            return (qtp - 2 * q + qtm) / (h * h) + (cf / a_ref) * (qtp - qtm) / (2 * h) -
                   c0 * c0 * (qxp - 2 * q + qxm) / (h * h);
        };

        const double scale = omega * omega * p.q_amp * std::exp(p.k_i * x);
        const double r1 = residual(1e-3);
        const double r2 = residual(5e-4);
        // Truncation is dominated by the damping term: (cf/a0) omega h^2/6
        // is about 2e-4 of scale in the viscous case.
        CHECK(std::abs(r1) <= 5e-4 * scale);
        CHECK(std::abs(r1) / std::abs(r2) == doctest::Approx(4.0).epsilon(0.3));
    }
}

TEST_CASE("damped wave discharge field") {
    const double c0 = sound_speed(a_ref, 1e8, rho);
    const double omega = 2 * pi / 0.5;
    const DampedWaveParams p = damped_wave_params(omega, c0, 0.005053, a_ref, 3.45e-7);

    SUBCASE("zero ahead of the causal front") {
        CHECK(damped_wave_discharge(p, 10.0, 1e-3) == 0.0);
        CHECK(damped_wave_discharge(p, 1.0, 0.0) == 0.0);
    }
    SUBCASE("matches the inflow at x = 0") {
        for (const double t : {0.1, 0.3, 1.7}) {
            CHECK(damped_wave_discharge(p, 0.0, t) ==
                  doctest::Approx(3.45e-7 * std::sin(omega * t)).epsilon(1e-14));
        }
    }
    SUBCASE("amplitude decays exponentially in x") {
        // Compare envelope values a quarter period apart in phase-matched points.
        const double t = 2.0;
        const double q1 = std::abs(damped_wave_discharge(p, 0.5, t));
        const double q2 = std::abs(damped_wave_discharge(p, 0.5 + 2 * pi / p.k_r, t));
        CHECK(q2 == doctest::Approx(q1 * std::exp(p.k_i * 2 * pi / p.k_r)).epsilon(1e-10));
    }
}

TEST_CASE("pulse amplitude measurement on a synthetic field") {
    // 100 cells, interface mid-domain, half-sine radius bumps of known height.
    const int j = 100;
    SnapshotSeries series;
    series.grid = Grid1D(j, 0.16);
    series.geometry =
        VesselGeometry(std::vector<double>(j, 1e8), std::vector<double>(j, a_ref));
    series.params = PhysicalParams{};
    const double interface_x = 0.08;
    const double r0 = 4e-3;

    const auto bump_snapshot = [&](double t, double x_lo, double x_hi, double dr,
                                   double x_lo2, double x_hi2, double dr2) {
        Snapshot snap;
        snap.time = t;
        for (int i = 0; i < j; ++i) {
            const double x = series.grid.center(i);
            double r = r0;
            if (x >= x_lo && x <= x_hi)
                r += dr * std::sin((x - x_lo) / (x_hi - x_lo) * pi);
            if (x >= x_lo2 && x <= x_hi2)
                r += dr2 * std::sin((x - x_lo2) / (x_hi2 - x_lo2) * pi);
            snap.cells.push_back({pi * r * r, 0.0});
        }
        return snap;
    };

    SUBCASE("amplitude ratios are recovered") {
        series.snapshots.push_back(
            bump_snapshot(1e-3, 0.10, 0.14, 1e-5, 0, -1, 0));  // incident, right side
        series.snapshots.push_back(
            bump_snapshot(5e-3, 0.10, 0.14, 0.117e-5, 0.02, 0.06, 1.117e-5));
        const PulseAmplitudes amp =
            measure_pulse_amplitudes(series, interface_x, {1e-3, 5e-3});
        // Cell centers sample the crest to ~0.2%; the ratios below cancel that.
        CHECK(amp.incident == doctest::Approx(1e8 * 1e-5).epsilon(5e-3));
        CHECK(amp.reflected / amp.incident == doctest::Approx(0.117).epsilon(1e-3));
        CHECK(amp.transmitted / amp.incident == doctest::Approx(1.117).epsilon(1e-3));
    }
    SUBCASE("a pulse sitting on the interface is refused") {
        series.snapshots.push_back(bump_snapshot(1e-3, 0.10, 0.14, 1e-5, 0, -1, 0));
        series.snapshots.push_back(bump_snapshot(5e-3, 0.06, 0.10, 1e-5, 0, -1, 0));
        CHECK_THROWS_AS(measure_pulse_amplitudes(series, interface_x, {1e-3, 5e-3}),
                        std::domain_error);
    }
    SUBCASE("no incident disturbance is refused") {
        series.snapshots.push_back(bump_snapshot(1e-3, 0, -1, 0, 0, -1, 0));
        series.snapshots.push_back(bump_snapshot(5e-3, 0, -1, 0, 0, -1, 0));
        CHECK_THROWS_AS(measure_pulse_amplitudes(series, interface_x, {1e-3, 5e-3}),
                        std::domain_error);
    }
}

TEST_CASE("measured reflection vanishes without a stiffness jump") {
    // Same pulse and windows as the reflection preset, but a flat wall: the
    // measurement must see (almost) nothing on the incident side afterwards.
    SimulationConfig cfg = stented_reflection_config();
    cfg.grid.cells = 750;  // halved for speed; same physics
    cfg.geometry.dk = 0.0;
    const RunResult result = run(cfg);
    const PulseAmplitudes amp = measure_pulse_amplitudes(
        result.series, cfg.geometry.x2_frac * cfg.grid.length, {1.5e-3, 5.2e-3});
    CHECK(amp.reflected < 0.05 * amp.incident);
    CHECK(amp.transmitted > 0.5 * amp.incident);  // the left-going half
}

TEST_CASE("fine-grid reflection run converges to the interface coefficients") {
    SimulationConfig cfg = stented_reflection_config();
    cfg.grid.cells = 6000;
    const RunResult result = run(cfg);
    const PulseAmplitudes amp = measure_pulse_amplitudes(
        result.series, cfg.geometry.x2_frac * cfg.grid.length, {1.5e-3, 5.2e-3});

    const double c_left = sound_speed(a_ref, 1.6e8, rho);
    const double c_right = sound_speed(a_ref, 1.0e8, rho);
    const InterfaceCoefficients c = interface_coefficients(c_left, c_right);
    CHECK(amp.reflected / amp.incident == doctest::Approx(c.reflection).epsilon(0.03));
    CHECK(amp.transmitted / amp.incident == doctest::Approx(c.transmission).epsilon(0.03));
}

TEST_CASE("envelope extraction and log-slope fit") {
    SUBCASE("envelope is the pointwise max over the window") {
        SnapshotSeries series;
        series.grid = Grid1D(4, 1.0);
        series.geometry = VesselGeometry(std::vector<double>(4, 1e8),
                                         std::vector<double>(4, a_ref));
        Snapshot s1{1.0, {{a_ref, 1.0}, {a_ref, -2.0}, {a_ref, 0.5}, {a_ref, 0.0}}};
        Snapshot s2{2.0, {{a_ref, -1.5}, {a_ref, 1.0}, {a_ref, 0.25}, {a_ref, 3.0}}};
        Snapshot s3{9.0, {{a_ref, 99.0}, {a_ref, 99.0}, {a_ref, 99.0}, {a_ref, 99.0}}};
        series.snapshots = {s1, s2, s3};

        const std::vector<double> env = max_abs_q_envelope(series, 0.5, 2.5);
        CHECK(env == std::vector<double>{1.5, 2.0, 0.5, 3.0});
        CHECK_THROWS_AS(max_abs_q_envelope(series, 3.0, 4.0), std::invalid_argument);
    }
    SUBCASE("log slope of an exact exponential") {
        std::vector<double> x, y;
        for (int i = 0; i < 30; ++i) {
            x.push_back(0.05 * i);
            y.push_back(3.0 * std::exp(-1.7 * x.back()));
        }
        CHECK(fit_log_slope(x, y) == doctest::Approx(-1.7).epsilon(1e-12));

        y[4] = 0.0;
        CHECK_THROWS_AS(fit_log_slope(x, y), std::domain_error);
        CHECK_THROWS_AS(fit_log_slope({1.0}, {1.0}), std::invalid_argument);
    }
}
