#include <cmath>

#include <doctest.h>

#include "breit/quadrature.hpp"
#include "breit/roots.hpp"

using namespace breit;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("smooth integrals") {
    auto r = integrate([](double x) { return std::exp(-x); }, 0.0, 30.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0 - std::exp(-30.0)).epsilon(1e-13));

    r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("integrable endpoint singularity") {
    // int_0^1 x^{-1/2} dx = 2 requires adaptive refinement near 0.
    auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-300, 1.0,
                       1e-10, 1e-10);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("break points aid a kinked integrand") {
    auto f = [](double x) { return std::abs(x - 0.3); };
    auto r = integrate(f, 0.0, 1.0, 1e-13, 1e-13, {0.3});
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.09 / 2.0 + 0.49 / 2.0).epsilon(1e-13));
}

TEST_CASE("brent root finding") {
    auto res = brent_find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0,
                               1e-14);
    CHECK(res.converged);
    CHECK(res.root == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("log bracket scan finds all sign changes") {
    // cos(log x) changes sign at x = e^{pi/2 + k pi}.
    auto scan = log_bracket_scan([](double x) { return std::cos(std::log(x)); },
                                 1.0, 1e4, 128);
    REQUIRE(scan.brackets.size() == 3);
    for (const auto& b : scan.brackets) {
        auto res = brent_find_root(
            [](double x) { return std::cos(std::log(x)); }, b.first, b.second,
            1e-13);
        CHECK(res.converged);
        const double k = std::log(res.root) / M_PI - 0.5;
        CHECK(k == doctest::Approx(std::round(k)).epsilon(1e-10));
    }
}

TEST_SUITE_END();
