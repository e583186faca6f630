#include <cmath>
#include <limits>
#include <stdexcept>

#include "breit/radial.hpp"

namespace breit {

RadialGrid assemble_components(const DimensionlessContext& ctx, int n,
                               const std::vector<double>& rho_grid, int order) {
    if (ctx.mode != MassMode::equal)
        throw std::invalid_argument(
            "assemble_components: equal-mass context required");
    if (order != 0 && order != 1)
        throw std::domain_error("assemble_components: order must be 0 or 1");
    double prev = 0.0;
    for (double r : rho_grid) {
        if (!(r > 0.0))
            throw std::domain_error(
                "assemble_components: grid points must be strictly positive "
                "(rho = 0 is rejected)");
        if (r <= prev)
            throw std::domain_error(
                "assemble_components: grid must be strictly increasing");
        prev = r;
    }
    const Polynomial F_poly = leading_wavefunction(ctx, n);
    const Polynomial Fp_poly = F_poly.derivative();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    RadialGrid grid;
    grid.order = order;
    grid.rho = rho_grid;
    const std::size_t count = rho_grid.size();
    grid.h.resize(count);
    grid.f_correction.resize(count, 0.0);
    grid.F_plus_K.resize(count);
    grid.F.resize(count);
    grid.K.resize(count);
    grid.G.resize(count);

    for (std::size_t i = 0; i < count; ++i) {
        const double rho = rho_grid[i];
        double h = F_poly(rho);
        double hp = Fp_poly(rho);
        if (order == 1) {
            try {
                const double f = correction_quadrature(ctx, n, rho);
                const double fp = correction_quadrature_d1(ctx, n, rho);
                grid.f_correction[i] = f;
                h += f;
                hp += fp;
            } catch (const NodeExcisionError&) {
                // Past a node of the leading solution the from-origin
                // correction is undefined; fall back to the order-0 value
                // there and record the index.
                grid.f_correction[i] = nan;
                grid.excised.push_back(static_cast<int>(i));
            }
        }
        const double envelope = std::exp(-rho / 2.0) * std::pow(rho, ctx.s);
        const double FK = envelope * h;
        const double FKp = envelope * (hp + (ctx.s / rho - 0.5) * h);
        grid.h[i] = h;
        grid.F_plus_K[i] = FK;
        grid.F[i] = FK * (1.0 + ctx.lambda * rho) /
                    (2.0 * (1.0 + ctx.y * rho));
        grid.K[i] = grid.F[i] * (1.0 - ctx.nu * rho) /
                    (1.0 + ctx.lambda * rho);
        grid.G[i] = -(1.0 / ctx.alpha) * FKp / (ctx.y + 1.0 / rho);
    }
    return grid;
}

}  // namespace breit
