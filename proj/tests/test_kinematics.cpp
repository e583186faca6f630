#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "breit/types.hpp"

using namespace breit;

TEST_SUITE_BEGIN("kinematics");

TEST_CASE("factory validates inputs") {
    CHECK_NOTHROW(PhysicalSystem::make(1.0, 2.0, 0.1));
    CHECK_THROWS_AS(PhysicalSystem::make(0.0, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(PhysicalSystem::make(1.0, -1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(PhysicalSystem::make(1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(PhysicalSystem::make(1.0, 1.0, 2.0), std::domain_error);
}

TEST_CASE("total energy against bignum value") {
    const auto system = PhysicalSystem::make(1.0, 2.0, 0.1);
    // Reference computed with 25-digit arithmetic.
    CHECK(total_energy(system, 0.005) ==
          doctest::Approx(2.999981249912108367905).epsilon(1e-15));
}

TEST_CASE("binding energy is cancellation free") {
    const auto system = PhysicalSystem::make(1.0, 3.0, 0.01);
    for (double q : {1e-9, 1e-6, 1e-3, 0.1}) {
        const double B = binding_energy(system, q);
        // Exact complement of E even when B is 18 orders below m + M.
        CHECK(B + total_energy(system, q) ==
              doctest::Approx(4.0).epsilon(1e-15));
        // Non-relativistic limit B ~ q^2/2 (1/m + 1/M).
        if (q <= 1e-3)
            CHECK(B == doctest::Approx(q * q / 2.0 * (1.0 + 1.0 / 3.0))
                           .epsilon(1e-5));
    }
}

TEST_CASE("frobenius exponent") {
    const double alpha = 1e-4;
    CHECK(frobenius_exponent(alpha) ==
          doctest::Approx(-alpha * alpha / 8.0).epsilon(1e-8));
    // No catastrophic cancellation at tiny alpha.
    CHECK(frobenius_exponent(1e-12) == doctest::Approx(-1.25e-25).epsilon(1e-10));
    // The discarded indicial root -2 - s is always <= -1: not square
    // integrable against the rho^2 measure, hence rejected.
    for (double a : {1e-3, 0.1, 0.5, 1.0, 1.9})
        CHECK(-2.0 - frobenius_exponent(a) <= -1.0);
}

TEST_CASE("context fields against bignum values") {
    const auto system = PhysicalSystem::make(1.0, 1.0, 0.2);
    const auto ctx = build_context(system, 0.05, MassMode::equal);
    CHECK(ctx.energy == doctest::Approx(1.997498435543817891578).epsilon(1e-15));
    CHECK(ctx.y == doctest::Approx(99.8749217771908945789).epsilon(1e-15));
    CHECK(ctx.lambda == doctest::Approx(199.8749217771908945789).epsilon(1e-15));
    CHECK(ctx.nu == doctest::Approx(0.1250782228091054210981).epsilon(1e-14));
    CHECK(ctx.m_bar == doctest::Approx(50.0).epsilon(1e-15));
    CHECK(ctx.M_bar == doctest::Approx(50.0).epsilon(1e-15));
    CHECK(ctx.s == doctest::Approx(-0.00501256289338004526552).epsilon(1e-13));
    CHECK(ctx.gamma == doctest::Approx(1.989974874213239909469).epsilon(1e-15));
    CHECK(ctx.delta ==
          doctest::Approx(-0.0006293268795816831092982).epsilon(1e-11));
    CHECK(ctx.N_param == doctest::Approx(1.002510998437197936844).epsilon(1e-13));
}

TEST_CASE("context identities and round trips") {
    const auto system = PhysicalSystem::make(1.0, 7.0, 0.15);
    const auto ctx = build_context(system, 0.2, MassMode::unequal);
    CHECK(ctx.q == doctest::Approx(ctx.energy / (2.0 * ctx.alpha * ctx.y))
                       .epsilon(1e-14));
    CHECK(ctx.lambda - ctx.nu == doctest::Approx(2.0 * ctx.y).epsilon(1e-14));
    CHECK(ctx.m_bar + ctx.M_bar ==
          doctest::Approx(ctx.y + ctx.nu).epsilon(1e-12));
    CHECK(ctx.delta == doctest::Approx(0.5 + ctx.s * ctx.y).epsilon(1e-12));
}

TEST_CASE("mass exchange symmetry") {
    const auto a = PhysicalSystem::make(1.0, 5.0, 0.1);
    const auto b = PhysicalSystem::make(5.0, 1.0, 0.1);
    CHECK(total_energy(a, 0.3) == total_energy(b, 0.3));
    CHECK(binding_energy(a, 0.3) == binding_energy(b, 0.3));
    CHECK(a.reduced_mass() == b.reduced_mass());
    CHECK(a.min_mass() == b.min_mass());
}

TEST_CASE("equal mode requires equal masses") {
    const auto system = PhysicalSystem::make(1.0, 2.0, 0.1);
    CHECK_THROWS_AS(build_context(system, 0.01, MassMode::equal),
                    std::invalid_argument);
    CHECK_FALSE(system.masses_equal());
    CHECK(PhysicalSystem::make(1.0, 1.0, 0.1).masses_equal());
}

TEST_SUITE_END();
