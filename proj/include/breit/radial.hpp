#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "breit/kummer.hpp"
#include "breit/types.hpp"

namespace breit {

// Which value of delta the 1/y-truncated displays use: `exact` keeps
// delta = 1/2 + s y and gamma = 2 + 2s; `truncated` uses the alpha^2 -> 0
// limits delta = 1/4 (correction kernel) / delta = 1/2 (asymptotic
// recurrence) and gamma = 2.
enum class DeltaConvention { exact, truncated };

struct OdeCoefficients {
    std::function<double(double)> p;  // coefficient of the first derivative
    std::function<double(double)> q;  // coefficient of the function
};

// Coefficients of the h-tilde equation (before the rho^s factor removal).
// Equal mode supports any l >= 0; unequal mode supports l = 0 only.
OdeCoefficients singlet_ode_coefficients(const DimensionlessContext& ctx, int l,
                                         MassMode mode);

// Coefficients of the h equation (after h-tilde = rho^s h), l = 0.
OdeCoefficients h_equation_coefficients(const DimensionlessContext& ctx,
                                        MassMode mode);

// alpha^2-truncated (Schroedinger) coefficients with the quantization value
// substituted exactly: p = -1 + 2/rho, q = (n-1)/rho.
OdeCoefficients schroedinger_coefficients(int n);

// Term groups of the unequal-mass h equation; E is defined structurally as
// D - F so that the regrouped coefficient q = N/rho + A + B + C + E is exact.
struct UnequalTermGroups {
    double A, B, C, D, E, F;
};
UnequalTermGroups unequal_term_groups(const DimensionlessContext& ctx,
                                      double rho);

struct SeriesExpansion {
    double expansion_point = 0.0;  // 0, -1/y, or +infinity sentinel
    std::vector<double> coefficients;
    double validity_radius = 0.0;
    double normalization = 1.0;  // value of the leading coefficient
};

// Taylor series of h about rho = 0 (equal mass), h_0 = 1.
SeriesExpansion origin_series(const DimensionlessContext& ctx, int num_terms);

// Leading solution F(-(n-1), gamma, rho) as an explicit polynomial.  Throws
// std::logic_error if the context is not at the eigenvalue
// (|N_param - (n-1)| > 1e-6).
Polynomial leading_wavefunction(const DimensionlessContext& ctx, int n);

// Ground-state closed-form correction, valid for |y rho| < 1:
//   f(rho) = -(1/2y) [ (1+u)^2/(2u^2) log(1/(1+u)) + 3/4 + 1/(2u) ],  u = y rho.
double correction_closed_form_ground(const DimensionlessContext& ctx,
                                     double rho);

// Thrown when a requested quadrature point lies at or beyond a node of the
// homogeneous solution F (n >= 2), where the from-origin particular solution
// is not defined.
struct NodeExcisionError : std::runtime_error {
    double node;
    explicit NodeExcisionError(double node_);
};

// First-order correction f^(1)(rho) from the 1/y expansion, by quadrature,
// with f(0) = 0.  For n = 1 the derivative and second derivative are also
// available analytically (single quadratures).
double correction_quadrature(const DimensionlessContext& ctx, int n, double rho,
                             DeltaConvention convention = DeltaConvention::exact);
double correction_quadrature_d1(const DimensionlessContext& ctx, int n,
                                double rho,
                                DeltaConvention convention = DeltaConvention::exact);
double correction_quadrature_d2(const DimensionlessContext& ctx, int n,
                                double rho,
                                DeltaConvention convention = DeltaConvention::exact);

// Series about the regular singular point rho = -1/y in x = rho + 1/y,
// starting at g_2 = 1 (g_0 = g_1 = 0).
SeriesExpansion negative_pole_series(const DimensionlessContext& ctx,
                                     int num_terms);

// Asymptotic series h ~ rho^beta (c_0 + c_1/rho + ...), beta = N_param,
// c_0 = 1.  expansion_point is +infinity.
SeriesExpansion asymptotic_series(const DimensionlessContext& ctx, int n,
                                  int num_terms,
                                  DeltaConvention convention = DeltaConvention::exact);

struct RadialGrid {
    std::vector<double> rho;
    std::vector<double> h;             // h0 + f_correction (order 1) or h0
    std::vector<double> f_correction;  // zeros at order 0; NaN where excised
    std::vector<double> F_plus_K;
    std::vector<double> F;
    std::vector<double> K;
    std::vector<double> G;
    std::vector<int> excised;  // indices where the correction was excised
    int order = 0;
};

// Assemble F+K = e^{-rho/2} rho^s h and the component split (equal mass):
//   F = (F+K)(1 + lambda rho) / (2 (1 + y rho)),  K = F (1 - nu rho)/(1 + lambda rho),
//   G = -(1/alpha) d(F+K)/drho / (y + 1/rho).
RadialGrid assemble_components(const DimensionlessContext& ctx, int n,
                               const std::vector<double>& rho_grid, int order);

// Twice-differentiable sample: d1/d2 may be empty, in which case 5-point
// central finite differences with step 1e-4 rho are used.
struct SmoothFunction {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
};

struct ResidualStats {
    double max_abs = 0.0;
    double rms = 0.0;
    double max_normalized = 0.0;  // normalized by the local |h| scale
    double rms_normalized = 0.0;
};

ResidualStats residual_against(const OdeCoefficients& coeffs,
                               const SmoothFunction& h_eval,
                               const std::vector<double>& rho_points);

// Residual of h_eval in the full h equation (the equal-mass form, or the
// regrouped unequal-mass form, depending on mode).
ResidualStats ode_residual(const DimensionlessContext& ctx, int n,
                           const SmoothFunction& h_eval,
                           const std::vector<double>& rho_points,
                           MassMode mode);

inline constexpr double kAsymptoticPoint =
    std::numeric_limits<double>::infinity();

}  // namespace breit
