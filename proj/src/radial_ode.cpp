#include <cmath>
#include <stdexcept>

#include "breit/radial.hpp"

namespace breit {

namespace {

// Shared piece of the unequal-mass equation:
//   T(rho) = [ (mb-Mb)^2 rho/(1+y rho) + (1+y rho)/rho ] / W,
//   W = (1+y rho)^2 - (mb-Mb)^2 rho^2.
double unequal_T(const DimensionlessContext& ctx, double rho) {
    const double u = 1.0 + ctx.y * rho;
    const double dm = ctx.m_bar - ctx.M_bar;
    const double W = u * u - dm * dm * rho * rho;
    return (dm * dm * rho / u + u / rho) / W;
}

}  // namespace

OdeCoefficients singlet_ode_coefficients(const DimensionlessContext& ctx, int l,
                                         MassMode mode) {
    if (l < 0) throw std::domain_error("singlet_ode_coefficients: l < 0");
    if (mode == MassMode::unequal && l > 0)
        throw std::invalid_argument(
            "singlet_ode_coefficients: unequal-mass coefficients are available "
            "for l = 0 only");
    const DimensionlessContext c = ctx;
    if (mode == MassMode::equal) {
        const double ll1 = static_cast<double>(l) * (l + 1);
        return OdeCoefficients{
            [c](double rho) {
                return -1.0 + 2.0 / rho + 1.0 / (rho * (1.0 + c.y * rho));
            },
            [c, ll1](double rho) {
                const double a2 = c.alpha * c.alpha;
                return (a2 * c.y / 2.0 - 1.0) / rho +
                       (a2 / 4.0 - ll1) / (rho * rho) -
                       0.5 / (rho * (1.0 + c.y * rho));
            }};
    }
    return OdeCoefficients{
        [c](double rho) {
            const double u = 1.0 + c.y * rho;
            const double dm = c.m_bar - c.M_bar;
            const double W = u * u - dm * dm * rho * rho;
            return -1.0 + 2.0 / rho - 1.0 / (rho * u) + 2.0 * u / (rho * W);
        },
        [c](double rho) {
            const double u = 1.0 + c.y * rho;
            const double dm = c.m_bar - c.M_bar;
            const double sm = c.m_bar + c.M_bar;
            const double W = u * u - dm * dm * rho * rho;
            const double a2 = c.alpha * c.alpha;
            return -1.0 / rho + 0.5 / (rho * u) - u / (rho * W) + 0.25 +
                   (a2 / 4.0) * (1.0 - sm * sm * rho * rho / (u * u)) *
                       (u * u / (rho * rho) - dm * dm);
        }};
}

OdeCoefficients h_equation_coefficients(const DimensionlessContext& ctx,
                                        MassMode mode) {
    const DimensionlessContext c = ctx;
    if (mode == MassMode::equal) {
        return OdeCoefficients{
            [c](double rho) {
                return -1.0 + c.gamma / rho + 1.0 / (rho * (1.0 + c.y * rho));
            },
            [c](double rho) {
                return c.N_param / rho -
                       c.delta / (rho * (1.0 + c.y * rho));
            }};
    }
    return OdeCoefficients{
        [c](double rho) { return -1.0 + c.gamma / rho + unequal_T(c, rho); },
        [c](double rho) {
            const auto g = unequal_term_groups(c, rho);
            return c.N_param / rho + g.A + g.B + g.C + g.E;
        }};
}

OdeCoefficients schroedinger_coefficients(int n) {
    if (n < 1) throw std::domain_error("schroedinger_coefficients: n < 1");
    return OdeCoefficients{
        [](double rho) { return -1.0 + 2.0 / rho; },
        [n](double rho) { return (n - 1.0) / rho; }};
}

UnequalTermGroups unequal_term_groups(const DimensionlessContext& ctx,
                                      double rho) {
    UnequalTermGroups g{};
    const double T = unequal_T(ctx, rho);
    const double u = 1.0 + ctx.y * rho;
    const double a2 = ctx.alpha * ctx.alpha;
    const double d2 = (ctx.m_bar - ctx.M_bar) * (ctx.m_bar + ctx.M_bar);
    g.A = T * ctx.s / rho - ctx.s / (rho * rho);
    g.B = -0.5 * T;
    // C = 1/4 + (alpha^2/4)(y^2 - 2(mb^2 + Mb^2)); the cancellation-free
    // equivalent -(alpha^2/4)((mb^2 - Mb^2)/y)^2 is exact and vanishes
    // identically at equal masses.
    g.C = -(a2 / 4.0) * (d2 / ctx.y) * (d2 / ctx.y);
    g.D = (a2 / 4.0) * d2 * d2 * rho * rho / (u * u);
    const double r = d2 / (ctx.y * ctx.y);
    g.F = -(a2 * ctx.y / 2.0) * r * r / rho;
    g.E = g.D - g.F;
    return g;
}

ResidualStats residual_against(const OdeCoefficients& coeffs,
                               const SmoothFunction& h_eval,
                               const std::vector<double>& rho_points) {
    if (rho_points.empty())
        throw std::invalid_argument("residual_against: empty sample set");
    ResidualStats stats;
    double sum_sq = 0.0, sum_sq_norm = 0.0;
    for (double rho : rho_points) {
        const double step = 1e-4 * rho;
        if (rho <= 0.0 || step == 0.0 || rho - 2.0 * step <= 0.0)
            throw std::domain_error(
                "residual_against: differentiation step underflow near rho=0");
        const double v = h_eval.value(rho);
        double d1, d2;
        if (h_eval.d1) {
            d1 = h_eval.d1(rho);
        } else {
            d1 = (h_eval.value(rho - 2.0 * step) -
                  8.0 * h_eval.value(rho - step) +
                  8.0 * h_eval.value(rho + step) -
                  h_eval.value(rho + 2.0 * step)) /
                 (12.0 * step);
        }
        if (h_eval.d2) {
            d2 = h_eval.d2(rho);
        } else {
            d2 = (-h_eval.value(rho - 2.0 * step) +
                  16.0 * h_eval.value(rho - step) - 30.0 * v +
                  16.0 * h_eval.value(rho + step) -
                  h_eval.value(rho + 2.0 * step)) /
                 (12.0 * step * step);
        }
        const double res = d2 + coeffs.p(rho) * d1 + coeffs.q(rho) * v;
        const double norm = std::abs(res) / std::max(std::abs(v), 1e-300);
        stats.max_abs = std::max(stats.max_abs, std::abs(res));
        stats.max_normalized = std::max(stats.max_normalized, norm);
        sum_sq += res * res;
        sum_sq_norm += norm * norm;
    }
    stats.rms = std::sqrt(sum_sq / rho_points.size());
    stats.rms_normalized = std::sqrt(sum_sq_norm / rho_points.size());
    return stats;
}

ResidualStats ode_residual(const DimensionlessContext& ctx, int /*n*/,
                           const SmoothFunction& h_eval,
                           const std::vector<double>& rho_points,
                           MassMode mode) {
    return residual_against(h_equation_coefficients(ctx, mode), h_eval,
                            rho_points);
}

}  // namespace breit
