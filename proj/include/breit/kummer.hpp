#pragma once

#include <vector>

namespace breit {

// Confluent hypergeometric function 1F1(a; c; rho) by forward term
// recurrence t_{k+1} = t_k (a+k) rho / ((c+k)(k+1)).  Terminates exactly when
// a is a non-positive integer (within 1e-9); otherwise sums until the term is
// below 1e-17 relative.  Throws std::domain_error when c is a non-positive
// integer and std::runtime_error when a non-terminating series is requested
// beyond the safety bound |rho| <= 50.
double kummer_m(double a, double c, double rho);

// Dense polynomial with real coefficients c[0] + c[1] x + ...
struct Polynomial {
    std::vector<double> coeff;

    double operator()(double x) const;
    Polynomial derivative() const;
    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    // Real roots inside (lo, hi), found by sign-change scan + Brent.
    std::vector<double> roots_in(double lo, double hi) const;
};

// Terminating Kummer series F(-degree, c, rho) as an explicit polynomial.
Polynomial kummer_polynomial(int degree, double c);

}  // namespace breit
