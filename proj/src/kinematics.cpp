#include <cmath>
#include <stdexcept>

#include "breit/types.hpp"

namespace breit {

PhysicalSystem PhysicalSystem::make(double mass1, double mass2, double alpha) {
    if (!(mass1 > 0.0) || !(mass2 > 0.0))
        throw std::domain_error("PhysicalSystem: masses must be positive");
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error(
            "PhysicalSystem: coupling must satisfy 0 < alpha < 2");
    return PhysicalSystem{mass1, mass2, alpha};
}

bool PhysicalSystem::masses_equal() const {
    return std::abs(mass1 - mass2) / (mass1 + mass2) < kEqualMassTol;
}

double total_energy(const PhysicalSystem& system, double q) {
    if (!(q > 0.0) || !(q < system.min_mass()))
        throw std::domain_error("total_energy: q must lie in (0, min(m, M))");
    return std::sqrt(system.mass1 * system.mass1 - q * q) +
           std::sqrt(system.mass2 * system.mass2 - q * q);
}

double binding_energy(const PhysicalSystem& system, double q) {
    if (!(q > 0.0) || !(q < system.min_mass()))
        throw std::domain_error("binding_energy: q must lie in (0, min(m, M))");
    const double m = system.mass1, M = system.mass2;
    return q * q / (m + std::sqrt(m * m - q * q)) +
           q * q / (M + std::sqrt(M * M - q * q));
}

double frobenius_exponent(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw std::domain_error("frobenius_exponent: need 0 < alpha < 2");
    // -1 + sqrt(1 - a) written as -a / (1 + sqrt(1 - a)) to avoid cancellation.
    const double a = alpha * alpha / 4.0;
    return -a / (1.0 + std::sqrt(1.0 - a));
}

DimensionlessContext build_context(const PhysicalSystem& system, double q,
                                   MassMode mode) {
    if (mode == MassMode::equal && !system.masses_equal())
        throw std::invalid_argument(
            "build_context: equal mass mode requested for unequal masses");
    DimensionlessContext ctx{};
    ctx.q = q;
    ctx.energy = total_energy(system, q);
    ctx.alpha = system.alpha;
    ctx.mode = mode;
    const double scale = 2.0 * system.alpha * q;
    ctx.y = ctx.energy / scale;
    ctx.lambda = (system.mass1 + system.mass2 + ctx.energy) / scale;
    ctx.nu = (system.mass1 + system.mass2 - ctx.energy) / scale;
    ctx.m_bar = system.mass1 / scale;
    ctx.M_bar = system.mass2 / scale;
    ctx.s = frobenius_exponent(system.alpha);
    ctx.gamma = 2.0 + 2.0 * ctx.s;
    ctx.delta = 0.5 + ctx.s * ctx.y;
    const double base = system.alpha * system.alpha * ctx.y / 2.0;
    if (mode == MassMode::equal) {
        ctx.N_param = base - 1.0 - ctx.s;
    } else {
        // (m_bar^2 - M_bar^2)/y^2 = (m^2 - M^2)/E^2, evaluated in the
        // cancellation-free mass form.
        const double r = (system.mass1 - system.mass2) *
                         (system.mass1 + system.mass2) /
                         (ctx.energy * ctx.energy);
        ctx.N_param = base * (1.0 - r * r) - 1.0 - ctx.s;
    }
    return ctx;
}

}  // namespace breit
