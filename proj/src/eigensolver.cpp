#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "breit/eigensolver.hpp"
#include "breit/roots.hpp"

namespace breit {

EnergyLevel equal_mass_level(const PhysicalSystem& system, int n) {
    if (!system.masses_equal())
        throw std::invalid_argument("equal_mass_level: masses are not equal");
    if (n < 1) throw std::domain_error("equal_mass_level: n must be >= 1");
    const double m = system.mass1;
    const double alpha = system.alpha;
    const double n_bar = n + frobenius_exponent(alpha);
    EnergyLevel level;
    level.n = n;
    level.n_bar = n_bar;
    level.q = alpha * m / std::sqrt(4.0 * n_bar * n_bar + alpha * alpha);
    level.energy = total_energy(system, level.q);
    level.binding = binding_energy(system, level.q);
    return level;
}

double quantization_residual(const DimensionlessContext& ctx, int n) {
    if (n < 1) throw std::domain_error("quantization_residual: n must be >= 1");
    return ctx.N_param - (n - 1);
}

EnergyLevel solve_level(const PhysicalSystem& system, int n, double tol,
                        SolveDiagnostics* diagnostics) {
    if (n < 1) throw std::domain_error("solve_level: n must be >= 1");
    tol = std::max(tol, 1e-14);
    const MassMode mode =
        system.masses_equal() ? MassMode::equal : MassMode::unequal;
    auto residual = [&](double q) {
        return quantization_residual(build_context(system, q, mode), n);
    };

    const double q_max = system.min_mass();
    const auto scan =
        log_bracket_scan(residual, 1e-8 * q_max, (1.0 - 1e-8) * q_max, 64);
    if (diagnostics) diagnostics->scan_evaluations = scan.evaluations;
    if (scan.brackets.empty())
        throw std::runtime_error(
            "solve_level: no sign change of the quantization residual in "
            "(0, min(m, M)); 64-point log scan found nothing");

    // Select the bracket nearest the nonrelativistic seed q0 = mu alpha / n_bar.
    const double n_bar = n + frobenius_exponent(system.alpha);
    const double q0 = system.reduced_mass() * system.alpha / n_bar;
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t i = 0; i < scan.brackets.size(); ++i) {
        const auto& [lo, hi] = scan.brackets[i];
        const double dist =
            (q0 < lo) ? lo - q0 : (q0 > hi) ? q0 - hi : 0.0;
        if (best_dist < 0.0 || dist < best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    if (diagnostics) {
        diagnostics->multiple_brackets = scan.brackets.size() > 1;
        for (std::size_t i = 0; i < scan.brackets.size(); ++i)
            if (i != best)
                diagnostics->other_roots.push_back(
                    0.5 * (scan.brackets[i].first + scan.brackets[i].second));
    }

    const auto refined = brent_find_root(residual, scan.brackets[best].first,
                                         scan.brackets[best].second, tol, 200);
    if (diagnostics) diagnostics->refine_iterations = refined.iterations;
    if (!refined.converged)
        throw std::runtime_error(
            "solve_level: Brent refinement did not reach tolerance in 200 "
            "iterations");

    EnergyLevel level;
    level.n = n;
    level.n_bar = n_bar;
    level.q = refined.root;
    level.energy = total_energy(system, level.q);
    level.binding = binding_energy(system, level.q);
    return level;
}

BindingSeries binding_series(const PhysicalSystem& system, int n, int order) {
    if (order < 1 || order > 3)
        throw std::domain_error("binding_series: order must be in [1, 3]");
    if (n < 1) throw std::domain_error("binding_series: n must be >= 1");
    const double m = system.mass1, M = system.mass2;
    const double e1 = 2.0 * m * M / (M + m);
    const double t = m * M / ((M + m) * (M + m));
    const double e2 = -3.0 * e1 * (1.0 - 3.0 * t);
    const double e3 = 10.0 * e1 * (1.0 - 7.0 * t + 13.0 * t * t);

    BindingSeries series;
    series.order = order;
    const double n_bar = n + frobenius_exponent(system.alpha);
    const double half = system.alpha / (2.0 * n_bar);
    series.expansion_parameter = half * half;
    const double all[3] = {e1, e2, e3};
    double sum = 0.0, xk = 1.0;
    for (int k = 0; k < order; ++k) {
        series.coefficients.push_back(all[k]);
        xk *= series.expansion_parameter;
        sum += all[k] * xk;
        series.partial_sums.push_back(sum);
    }
    return series;
}

EnergyLevel dirac_ground_state(double mass, double alpha) {
    if (!(mass > 0.0)) throw std::domain_error("dirac_ground_state: mass <= 0");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("dirac_ground_state: need 0 < alpha < 1");
    EnergyLevel level;
    level.n = 1;
    level.q = alpha * mass;
    level.energy = mass * std::sqrt(1.0 - alpha * alpha);
    level.binding = mass - level.energy;
    level.n_bar = std::sqrt(1.0 - alpha * alpha);  // 1 + s_dirac
    return level;
}

DiracComparison breit_dirac_comparison(double mass, double alpha) {
    DiracComparison cmp;
    cmp.s_breit = frobenius_exponent(alpha);
    {
        const double a2 = alpha * alpha;
        cmp.s_dirac = -a2 / (1.0 + std::sqrt(1.0 - a2));
    }
    const auto dirac = dirac_ground_state(mass, alpha);
    cmp.N_dirac = alpha * dirac.energy / dirac.q - 1.0 - cmp.s_dirac;

    const auto system = PhysicalSystem::make(mass, mass, alpha);
    const auto breit = equal_mass_level(system, 1);
    const auto ctx = build_context(system, breit.q, MassMode::equal);
    cmp.N_breit = ctx.N_param;  // alpha^2 y/2 - 1 - s at the n=1 root
    cmp.delta_breit = ctx.delta;
    return cmp;
}

}  // namespace breit
