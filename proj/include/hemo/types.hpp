#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hemo {

inline constexpr double pi = std::numbers::pi;

// Single definition site for sqrt(pi); every module must see the same bits.
inline const double sqrt_pi = std::sqrt(std::numbers::pi);

// Conserved pair of one cell: wetted cross-section area a [m^2] and
// discharge q [m^3/s].
struct ConservedState {
    double a = 0.0;
    double q = 0.0;
};

struct PhysicalParams {
    double rho = 1060.0;  // blood density [kg/m^3]
    double cf = 0.0;      // wall friction coefficient [m^2/s]
    double p0 = 0.0;      // reference external pressure [Pa]
};

// Uniform 1D grid; cell centers sit at (i + 1/2) * dx.
struct Grid1D {
    int j_cells = 0;
    double length = 0.0;
    double dx = 0.0;

    Grid1D() = default;
    Grid1D(int cells, double len);

    double center(int i) const { return (i + 0.5) * dx; }
};

// Per-cell wall model: stiffness k [Pa/m], rest area a0 [m^2], and the
// derived forcing term cal_a0 = k * sqrt(a0).  cal_a0 is computed in exactly
// one place (this constructor) so all modules agree on it bit for bit.
struct VesselGeometry {
    std::vector<double> k;
    std::vector<double> a0;
    std::vector<double> cal_a0;

    VesselGeometry() = default;
    VesselGeometry(std::vector<double> k_in, std::vector<double> a0_in);

    std::size_t size() const { return k.size(); }
};

struct SimulationState {
    double time = 0.0;
    std::vector<ConservedState> cells;
};

struct DegenerateAreaError : std::domain_error {
    using std::domain_error::domain_error;
};

// a == 0 with q != 0 is not a representable physical state.
struct InconsistentStateError : std::domain_error {
    using std::domain_error::domain_error;
};

// q/a; throws on a <= 0 — callers decide what a dry cell's velocity means.
double velocity(const ConservedState& u);

double radius(const ConservedState& u);

// p = p0 + k (sqrt(a/pi) - sqrt(a0/pi))
double pressure(const ConservedState& u, double k, double a0, double p0);

} // namespace hemo
