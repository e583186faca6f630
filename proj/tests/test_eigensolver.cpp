#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "breit/eigensolver.hpp"
#include "breit/types.hpp"

using namespace breit;

TEST_SUITE_BEGIN("eigensolver");

TEST_CASE("equal-mass closed form against bignum value") {
    const auto system = PhysicalSystem::make(1.0, 1.0, 1.0 / 137.035999);
    const auto level = equal_mass_level(system, 2);
    CHECK(level.energy ==
          doctest::Approx(1.999996671776492071493).epsilon(1e-15));
    CHECK(level.n_bar == doctest::Approx(2.0 + frobenius_exponent(system.alpha))
                             .epsilon(1e-15));
    CHECK(level.binding + level.energy == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("quantization residual against bignum value") {
    const auto system = PhysicalSystem::make(1.0, 2.0, 0.1);
    const auto ctx = build_context(system, 0.03, MassMode::unequal);
    CHECK(ctx.energy == doctest::Approx(2.999324886046737826554).epsilon(1e-15));
    CHECK(ctx.y == doctest::Approx(499.887481007789637759).epsilon(1e-15));
    CHECK(quantization_residual(ctx, 1) ==
          doctest::Approx(1.222722793400419466249).epsilon(1e-12));
}

TEST_CASE("unequal-mass ground state against bignum value") {
    const auto system = PhysicalSystem::make(1.0, 2.0, 0.05);
    SolveDiagnostics diag;
    const auto level = solve_level(system, 1, 1e-14, &diag);
    CHECK(level.q == doctest::Approx(0.03332985972438314662885).epsilon(1e-13));
    CHECK(level.binding ==
          doctest::Approx(0.0008333332891086613314219).epsilon(1e-12));
    CHECK(diag.scan_evaluations > 0);
    CHECK(diag.refine_iterations > 0);
}

TEST_CASE("root finder reduces to the closed form at equal masses") {
    for (double alpha : {0.001, 0.0073, 0.1, 0.3}) {
        const auto system = PhysicalSystem::make(1.0, 1.0, alpha);
        for (int n = 1; n <= 3; ++n) {
            const auto closed = equal_mass_level(system, n);
            const auto solved = solve_level(system, n, 1e-14);
            CHECK(solved.energy ==
                  doctest::Approx(closed.energy).epsilon(1e-12));
        }
    }
}

TEST_CASE("spectrum ordering") {
    const auto system = PhysicalSystem::make(1.0, 3.0, 0.2);
    double prev_E = 0.0, prev_q = 1e9;
    for (int n = 1; n <= 10; ++n) {
        const auto level = solve_level(system, n);
        CHECK(level.energy > prev_E);
        CHECK(level.q < prev_q);
        CHECK(level.binding > 0.0);
        prev_E = level.energy;
        prev_q = level.q;
    }
}

TEST_CASE("reduced-mass limit of the binding energy") {
    // Leading term mu alpha^2 / 2 n_bar^2 for a heavy partner.
    const double alpha = 1e-3;
    const auto system = PhysicalSystem::make(1.0, 1000.0, alpha);
    const double mu = system.reduced_mass();
    for (int n = 1; n <= 3; ++n) {
        const auto level = solve_level(system, n, 1e-14);
        const double leading =
            mu * alpha * alpha / (2.0 * level.n_bar * level.n_bar);
        CHECK(std::abs(level.binding / leading - 1.0) < 5e-6);
    }
}

TEST_CASE("equal-mass series coefficients match the closed-form expansion") {
    // B = 2m (1 - (1+x)^{-1/2}) = m x - (3m/4) x^2 + (5m/8) x^3 - ...
    const double m = 1.7;
    const auto system = PhysicalSystem::make(m, m, 0.1);
    const auto series = binding_series(system, 1, 3);
    REQUIRE(series.coefficients.size() == 3);
    CHECK(series.coefficients[0] == doctest::Approx(m).epsilon(1e-14));
    CHECK(series.coefficients[1] == doctest::Approx(-0.75 * m).epsilon(1e-14));
    CHECK(series.coefficients[2] == doctest::Approx(0.625 * m).epsilon(1e-14));
}

TEST_CASE("series truncation error scales as the next power") {
    // Order-3 truncation error should fall near the x^4 scale.
    for (double M : {2.0, 10.0}) {
        const auto system = PhysicalSystem::make(1.0, M, 0.05);
        const auto level = solve_level(system, 1, 1e-14);
        const auto series = binding_series(system, 1, 3);
        const double x = series.expansion_parameter;
        const double err = std::abs(level.binding - series.partial_sums.back());
        CHECK(err < 100.0 * x * x * x * x * series.coefficients[0]);
    }
}

TEST_CASE("series input validation") {
    const auto system = PhysicalSystem::make(1.0, 2.0, 0.05);
    CHECK_THROWS_AS(binding_series(system, 1, 0), std::domain_error);
    CHECK_THROWS_AS(binding_series(system, 1, 4), std::domain_error);
}

TEST_CASE("dirac ground state") {
    const double alpha = 1.0 / 137.036;
    const auto level = dirac_ground_state(1.0, alpha);
    CHECK(level.q == alpha);  // exactly
    CHECK(level.energy ==
          doctest::Approx(std::sqrt(1.0 - alpha * alpha)).epsilon(1e-15));
    // Both quantization conditions hold at the same q.
    const double s = -1.0 + std::sqrt(1.0 - alpha * alpha);
    const double y = (level.energy + 1.0) / (2.0 * alpha * level.q);
    CHECK(std::abs(alpha * level.energy / level.q - 1.0 - s) < 1e-12);
    CHECK(std::abs(0.5 + s * y) < 1e-12);
    CHECK_THROWS_AS(dirac_ground_state(1.0, 1.0), std::domain_error);
}

TEST_CASE("breit-dirac comparison") {
    const double alpha = 1.0 / 137.036;
    const auto cmp = breit_dirac_comparison(1.0, alpha);
    CHECK(cmp.s_dirac / cmp.s_breit == doctest::Approx(4.0).epsilon(1e-4));
    CHECK(std::abs(cmp.N_dirac) < 1e-12);
    CHECK(std::abs(cmp.N_breit) < 1e-10);
    // The Breit case cannot satisfy both conditions at once: the delta
    // condition misses by ~ 1/4 at the n = 1 root.
    CHECK(cmp.delta_breit == doctest::Approx(0.250000832057942).epsilon(1e-10));
}

TEST_SUITE_END();
