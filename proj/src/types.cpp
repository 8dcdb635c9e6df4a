#include "hemo/types.hpp"

#include <string>

namespace hemo {

Grid1D::Grid1D(int cells, double len) : j_cells(cells), length(len) {
    if (cells < 2)
        throw std::invalid_argument("Grid1D: need at least 2 cells, got " + std::to_string(cells));
    if (!(len > 0.0))
        throw std::invalid_argument("Grid1D: length must be positive");
    dx = len / cells;
}

VesselGeometry::VesselGeometry(std::vector<double> k_in, std::vector<double> a0_in)
    : k(std::move(k_in)), a0(std::move(a0_in)) {
    if (k.size() != a0.size())
        throw std::invalid_argument("VesselGeometry: k and a0 size mismatch");
    cal_a0.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!(k[i] > 0.0))
            throw std::invalid_argument("VesselGeometry: stiffness must be positive");
        if (!(a0[i] > 0.0))
            throw std::invalid_argument("VesselGeometry: rest area must be positive");
        cal_a0[i] = k[i] * std::sqrt(a0[i]);
    }
}

double velocity(const ConservedState& u) {
    if (u.a <= 0.0)
        throw DegenerateAreaError("velocity: need a > 0");
    return u.q / u.a;
}

double radius(const ConservedState& u) {
    if (u.a < 0.0)
        throw DegenerateAreaError("radius: negative area");
    return std::sqrt(u.a / pi);
}

double pressure(const ConservedState& u, double k, double a0, double p0) {
    if (u.a < 0.0)
        throw DegenerateAreaError("pressure: negative area");
    return p0 + k * (std::sqrt(u.a / pi) - std::sqrt(a0 / pi));
}

} // namespace hemo
