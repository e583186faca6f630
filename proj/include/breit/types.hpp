#pragma once

#include <stdexcept>

namespace breit {

enum class MassMode { equal, unequal };

// Relative mass difference below which the equal-mass formulas are admissible.
inline constexpr double kEqualMassTol = 1e-12;

// Two oppositely charged spin-1/2 particles: (-e, mass1) and (+e, mass2),
// Coulomb coupling alpha.  Natural units; all formulas are homogeneous in mass.
struct PhysicalSystem {
    double mass1;
    double mass2;
    double alpha;

    // Validating factory: masses positive, 0 < alpha < 2 (the Frobenius
    // exponent s = -1 + sqrt(1 - alpha^2/4) must stay real).
    static PhysicalSystem make(double mass1, double mass2, double alpha);

    double min_mass() const { return mass1 < mass2 ? mass1 : mass2; }
    double reduced_mass() const { return mass1 * mass2 / (mass1 + mass2); }
    bool masses_equal() const;
};

// All dimensionless quantities derived from (system, q).  rho = 2 q r.
struct DimensionlessContext {
    double q;        // momentum parameter, 0 < q < min(m, M)
    double energy;   // E = sqrt(m^2 - q^2) + sqrt(M^2 - q^2)
    double y;        // E / (2 alpha q)
    double lambda;   // (M + m + E) / (2 alpha q)
    double nu;       // (M + m - E) / (2 alpha q)
    double m_bar;    // m / (2 alpha q)
    double M_bar;    // M / (2 alpha q)
    double s;        // -1 + sqrt(1 - alpha^2/4)
    double gamma;    // 2 + 2 s
    double delta;    // 1/2 + s y
    double N_param;  // quantization parameter; equals n - 1 at an eigenvalue
    double alpha;
    MassMode mode;
};

// E(q) = sqrt(m^2 - q^2) + sqrt(M^2 - q^2); strictly decreasing in q.
double total_energy(const PhysicalSystem& system, double q);

// Binding energy m + M - E(q), evaluated without cancellation:
// q^2/(m + sqrt(m^2-q^2)) + q^2/(M + sqrt(M^2-q^2)).
double binding_energy(const PhysicalSystem& system, double q);

// s = -1 + sqrt(1 - alpha^2/4); the second indicial root -1 - sqrt(...)
// is rejected (non-square-integrable).
double frobenius_exponent(double alpha);

DimensionlessContext build_context(const PhysicalSystem& system, double q,
                                   MassMode mode);

}  // namespace breit
