#include <cmath>
#include <stdexcept>

#include "breit/radial.hpp"

namespace breit {

SeriesExpansion origin_series(const DimensionlessContext& ctx, int num_terms) {
    if (ctx.mode != MassMode::equal)
        throw std::invalid_argument("origin_series: equal-mass context required");
    if (num_terms < 2)
        throw std::domain_error("origin_series: num_terms must be >= 2");
    SeriesExpansion series;
    series.expansion_point = 0.0;
    series.validity_radius = 1.0 / ctx.y;
    series.normalization = 1.0;
    auto& h = series.coefficients;
    h.resize(num_terms, 0.0);
    h[0] = 1.0;
    const double y = ctx.y, g = ctx.gamma, N = ctx.N_param, d = ctx.delta;
    // (n+1)(n+gamma+1) h_{n+1} + [y n(n+gamma-1) - n + N - delta] h_n
    //   - y (n-1-N) h_{n-1} = 0
    for (int n = 0; n + 1 < num_terms; ++n) {
        const double mid = y * n * (n + g - 1.0) - n + N - d;
        const double low = (n >= 1) ? -y * (n - 1.0 - N) * h[n - 1] : 0.0;
        h[n + 1] = -(mid * h[n] + low) / ((n + 1.0) * (n + g + 1.0));
    }
    return series;
}

Polynomial leading_wavefunction(const DimensionlessContext& ctx, int n) {
    if (n < 1) throw std::domain_error("leading_wavefunction: n must be >= 1");
    if (std::abs(ctx.N_param - (n - 1)) > 1e-6)
        throw std::logic_error(
            "leading_wavefunction: context is not at the n-th eigenvalue "
            "(stale context)");
    return kummer_polynomial(n - 1, ctx.gamma);
}

SeriesExpansion negative_pole_series(const DimensionlessContext& ctx,
                                     int num_terms) {
    if (num_terms < 3)
        throw std::domain_error("negative_pole_series: num_terms must be >= 3");
    SeriesExpansion series;
    series.expansion_point = -1.0 / ctx.y;
    series.validity_radius = 1.0 / ctx.y;
    series.normalization = 1.0;  // g_2
    auto& g = series.coefficients;
    g.resize(num_terms, 0.0);
    g[2] = 1.0;
    const double y = ctx.y, gam = ctx.gamma, N = ctx.N_param, d = ctx.delta;
    // -(n+1)(n-1) g_{n+1} + [y n(n-1) + n (1 + gamma y) - delta] g_n
    //   - y (n-1-N) g_{n-1} = 0,  n >= 2
    for (int n = 2; n + 1 < num_terms; ++n) {
        const double mid = y * n * (n - 1.0) + n * (1.0 + gam * y) - d;
        g[n + 1] = (mid * g[n] - y * (n - 1.0 - N) * g[n - 1]) /
                   ((n + 1.0) * (n - 1.0));
    }
    return series;
}

SeriesExpansion asymptotic_series(const DimensionlessContext& ctx, int n,
                                  int num_terms, DeltaConvention convention) {
    if (n < 1) throw std::domain_error("asymptotic_series: n must be >= 1");
    if (num_terms < 1)
        throw std::domain_error("asymptotic_series: num_terms must be >= 1");
    if (std::abs(ctx.N_param - (n - 1)) > 1e-6)
        throw std::logic_error(
            "asymptotic_series: context is not at the n-th eigenvalue");
    SeriesExpansion series;
    series.expansion_point = kAsymptoticPoint;
    series.validity_radius = kAsymptoticPoint;
    series.normalization = 1.0;  // c_0
    auto& c = series.coefficients;
    c.resize(num_terms, 0.0);
    c[0] = 1.0;
    const double y = ctx.y, g = ctx.gamma, beta = ctx.N_param;
    const double d = convention == DeltaConvention::exact ? ctx.delta : 0.5;
    // y (n+1) c_{n+1} + [(n-beta)(n+1-gamma-beta) y + n - delta] c_n
    //   + (beta-n+1)(beta-n+gamma+1) c_{n-1} = 0
    for (int k = 0; k + 1 < num_terms; ++k) {
        const double mid = (k - beta) * (k + 1.0 - g - beta) * y + k - d;
        const double low =
            (k >= 1) ? (beta - k + 1.0) * (beta - k + g + 1.0) * c[k - 1] : 0.0;
        c[k + 1] = -(mid * c[k] + low) / (y * (k + 1.0));
    }
    return series;
}

}  // namespace breit
