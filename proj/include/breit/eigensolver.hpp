#pragma once

#include <vector>

#include "breit/types.hpp"

namespace breit {

struct EnergyLevel {
    int n = 0;          // principal quantum number
    double q = 0.0;     // momentum parameter at the eigenvalue
    double energy = 0.0;
    double binding = 0.0;  // m + M - E
    double n_bar = 0.0;    // n + s
};

struct SolveDiagnostics {
    int scan_evaluations = 0;
    int refine_iterations = 0;
    bool multiple_brackets = false;
    std::vector<double> other_roots;  // midpoints of non-selected brackets
};

struct BindingSeries {
    std::vector<double> coefficients;   // e_1 .. e_order
    double expansion_parameter = 0.0;   // (alpha / 2 n_bar)^2
    std::vector<double> partial_sums;   // partial_sums[k-1] = sum_{j<=k} e_j x^j
    int order = 0;
};

struct DiracComparison {
    double s_dirac = 0.0;   // -1 + sqrt(1 - alpha^2)
    double s_breit = 0.0;   // -1 + sqrt(1 - alpha^2/4)
    double N_dirac = 0.0;   // alpha E/q - 1 - s_dirac at the Dirac ground state
    double N_breit = 0.0;   // alpha^2 y/2 - 1 - s_breit at the Breit n=1 root
    double delta_breit = 0.0;  // 1/2 + s y at the Breit n=1 root (~1/4)
};

// Closed-form equal-mass level: E_n = 2 m sqrt(1 - alpha^2/((2(n+s))^2 + alpha^2)).
EnergyLevel equal_mass_level(const PhysicalSystem& system, int n);

// N_param - (n - 1); zero at an eigenvalue, monotone in q.
double quantization_residual(const DimensionlessContext& ctx, int n);

// Bracketed root finding of the quantization condition; tol is the relative
// tolerance on q (default 1e-12, minimum 1e-14 honoured).
EnergyLevel solve_level(const PhysicalSystem& system, int n,
                        double tol = 1e-12,
                        SolveDiagnostics* diagnostics = nullptr);

// Binding-energy power series B = sum e_k (alpha/2 n_bar)^{2k}, order in [1,3].
BindingSeries binding_series(const PhysicalSystem& system, int n, int order);

// Dirac-Coulomb ground state: q = alpha m exactly, E = m sqrt(1 - alpha^2).
EnergyLevel dirac_ground_state(double mass, double alpha);

DiracComparison breit_dirac_comparison(double mass, double alpha);

}  // namespace breit
