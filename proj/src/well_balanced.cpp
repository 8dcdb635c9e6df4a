#include "hemo/well_balanced.hpp"

#include <algorithm>

namespace hemo {

InterfaceReconstruction reconstruct_interface(const ConservedState& ul, CellGeometry gl,
                                              const ConservedState& ur, CellGeometry gr) {
    const double k_star = std::max(gl.k, gr.k);
    const double delta = gr.cal_a0 - gl.cal_a0;

    if (delta == 0.0 && gl.k == gr.k)
        return {ul, ur, k_star, 0.0, 0};

    // Equivalent grouping of k sqrt(a) +/- the one-sided part of delta:
    // the shared min(cal_a0) term makes both sides evaluate identically
    // when k sqrt(a) - cal_a0 matches across the interface.
    const double base = std::min(gl.cal_a0, gr.cal_a0);
    double rl = (gl.k * std::sqrt(ul.a) - gl.cal_a0) + base;
    double rr = (gr.k * std::sqrt(ur.a) - gr.cal_a0) + base;

    int clamped = 0;
    if (rl < 0.0) { rl = 0.0; ++clamped; }
    if (rr < 0.0) { rr = 0.0; ++clamped; }

    const double sal = rl / k_star;
    const double sar = rr / k_star;
    const double al = sal * sal;
    const double ar = sar * sar;

    const double vl = ul.a > 0.0 ? velocity(ul) : 0.0;
    const double vr = ur.a > 0.0 ? velocity(ur) : 0.0;

    InterfaceReconstruction rec;
    rec.left = {al, al * vl};
    rec.right = {ar, ar * vr};
    rec.k_star = k_star;
    rec.delta_cal_a0 = delta;
    rec.clamped = clamped;
    return rec;
}

std::vector<InterfaceFlux> interface_fluxes(const std::vector<ConservedState>& cells,
                                            const VesselGeometry& geom, double rho,
                                            FluxKind kind) {
    if (cells.size() != geom.size())
        throw std::invalid_argument("interface_fluxes: state/geometry size mismatch");
    if (cells.size() < 2)
        throw std::invalid_argument("interface_fluxes: need at least two cells");

    std::vector<InterfaceFlux> out(cells.size() - 1);
    for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
        const std::size_t jl = j, jr = j + 1;
        const InterfaceReconstruction rec =
            reconstruct_interface(cells[jl], {geom.k[jl], geom.cal_a0[jl]},
                                  cells[jr], {geom.k[jr], geom.cal_a0[jr]});

        const FluxVector f = (kind == FluxKind::hll)
                                 ? hll_flux(rec.left, rec.right, rec.k_star, rho)
                                 : rusanov_flux(rec.left, rec.right, rec.k_star, rho);

        const double pi_left = pressure_impulse(rec.left.a, rec.k_star, rho);
        const double pi_right = pressure_impulse(rec.right.a, rec.k_star, rho);
        const double pi_cell_l = pressure_impulse(cells[jl].a, geom.k[jl], rho);
        const double pi_cell_r = pressure_impulse(cells[jr].a, geom.k[jr], rho);

        out[j].left = {f.mass, f.momentum + (pi_cell_l - pi_left)};
        out[j].right = {f.mass, f.momentum + (pi_cell_r - pi_right)};
        out[j].clamped = rec.clamped;
    }
    return out;
}

} // namespace hemo
