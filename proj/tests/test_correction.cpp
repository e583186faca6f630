#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "breit/eigensolver.hpp"
#include "breit/radial.hpp"
#include "breit/types.hpp"

using namespace breit;

namespace {

DimensionlessContext level_context(double alpha, int n) {
    const auto system = PhysicalSystem::make(1.0, 1.0, alpha);
    const auto level = equal_mass_level(system, n);
    return build_context(system, level.q, MassMode::equal);
}

}  // namespace

TEST_SUITE_BEGIN("correction");

TEST_CASE("closed form limits and series identity") {
    const auto ctx = level_context(0.1, 1);
    const double y = ctx.y;
    // f(0+) = 0.
    CHECK(std::abs(correction_closed_form_ground(ctx, 1e-12)) < 1e-12);
    // At rho = 0.5/y the closed form equals its own Taylor series
    // f_{k+1} = (-y)^k / (2 (k+1)(k+2)(k+3)).
    const double rho = 0.5 / y;
    double sum = 0.0, term_base = 1.0;
    for (int k = 0; k < 60; ++k) {
        sum += term_base * rho *
               (0.5 / ((k + 1.0) * (k + 2.0) * (k + 3.0)));
        term_base *= -y * rho;
    }
    CHECK(correction_closed_form_ground(ctx, rho) ==
          doctest::Approx(sum).epsilon(1e-10));
    // Finite on the unphysical side of the pole-free interval.
    CHECK(std::isfinite(correction_closed_form_ground(ctx, -0.5 / y)));
    // Outside |y rho| < 1 the expression is rejected.
    CHECK_THROWS_AS(correction_closed_form_ground(ctx, 2.0 / y),
                    std::domain_error);
}

TEST_CASE("truncated quadrature reproduces the closed form") {
    const auto ctx = level_context(0.05, 1);
    for (double frac : {0.1, 0.3, 0.6, 0.85}) {
        const double rho = frac / ctx.y;
        const double closed = correction_closed_form_ground(ctx, rho);
        const double quad =
            correction_quadrature(ctx, 1, rho, DeltaConvention::truncated);
        CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
    }
}

TEST_CASE("exact ground-state correction against bignum values") {
    const auto ctx = level_context(0.1, 1);
    CHECK(correction_quadrature(ctx, 1, 0.5) ==
          doctest::Approx(0.0042687143955392198).epsilon(1e-9));
    CHECK(correction_quadrature(ctx, 1, 2.0) ==
          doctest::Approx(0.0073460010147380868).epsilon(1e-9));
    CHECK(correction_quadrature(ctx, 1, 5.0) ==
          doctest::Approx(0.018117701129131189).epsilon(1e-9));
}

TEST_CASE("correction is regular at zero") {
    const auto ctx = level_context(0.1, 1);
    double prev = correction_quadrature(ctx, 1, 1e-2);
    for (double rho : {1e-3, 1e-4, 1e-5}) {
        const double f = correction_quadrature(ctx, 1, rho);
        CHECK(std::abs(f) < std::abs(prev));
        prev = f;
    }
    CHECK(std::abs(prev) < 1e-5);
}

TEST_CASE("correction smallness relative to the leading solution") {
    for (double alpha : {1.0 / 137.036, 0.1}) {
        for (int n : {1, 2, 3}) {
            const auto ctx = level_context(alpha, n);
            const auto h0 = leading_wavefunction(ctx, n);
            double sup = 0.0;
            for (double frac : {0.15, 0.4, 0.65, 0.9}) {
                const double rho = frac / ctx.y;
                sup = std::max(sup, std::abs(correction_quadrature(ctx, n, rho) /
                                             h0(rho)));
            }
            CHECK(sup < 10.0 * alpha * alpha);
        }
    }
}

TEST_CASE("expansion-operator residual on a test grid") {
    // f satisfies f'' + p0 f' + q0 f = R with the order-0 coefficients and
    // the forcing R = -(F' - delta F)/(rho (1 + y rho)); for n = 1 the
    // kernel keeps the O(alpha^4) coupling term, so the match is only exact
    // to that order -- far below 1e-8 at the physical alpha.
    const double alpha = 1.0 / 137.036;
    for (int n : {1, 2}) {
        const auto ctx = level_context(alpha, n);
        const auto F = leading_wavefunction(ctx, n);
        const auto Fp = F.derivative();
        for (double rho : {0.5, 1.0, 1.5}) {
            const double f1 = correction_quadrature_d1(ctx, n, rho);
            const double f2 = correction_quadrature_d2(ctx, n, rho);
            const double f0 = correction_quadrature(ctx, n, rho);
            const double p0 = -1.0 + ctx.gamma / rho;
            const double q0 = (n - 1.0) / rho;
            const double R = -(Fp(rho) - ctx.delta * F(rho)) /
                             (rho * (1.0 + ctx.y * rho));
            CHECK(std::abs(f2 + p0 * f1 + q0 * f0 - R) < 1e-8);
        }
    }
}

TEST_CASE("node excision for excited states") {
    const auto ctx = level_context(0.1, 2);
    // The n = 2 leading polynomial vanishes at rho = gamma ~ 2.
    CHECK_THROWS_AS(correction_quadrature(ctx, 2, 2.5), NodeExcisionError);
    try {
        correction_quadrature(ctx, 2, 5.0);
        FAIL("expected excision");
    } catch (const NodeExcisionError& e) {
        CHECK(e.node == doctest::Approx(ctx.gamma).epsilon(1e-10));
    }
    // Before the node the quadrature is available.
    CHECK(std::isfinite(correction_quadrature(ctx, 2, 1.0)));
}

TEST_CASE("argument validation") {
    const auto ctx = level_context(0.1, 1);
    CHECK_THROWS_AS(correction_quadrature(ctx, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(correction_quadrature(ctx, 1, -1.0), std::domain_error);
    // Stale context: n = 2 requested at the n = 1 root.
    CHECK_THROWS_AS(correction_quadrature(ctx, 2, 1.0), std::logic_error);
    // Truncated convention is the scaling limit of the ground-state kernel
    // and is not defined for excited states.
    const auto ctx2 = level_context(0.1, 2);
    CHECK_THROWS_AS(
        correction_quadrature(ctx2, 2, 1.0, DeltaConvention::truncated),
        std::invalid_argument);
}

TEST_SUITE_END();
