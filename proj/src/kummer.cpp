#include <cmath>
#include <stdexcept>

#include "breit/kummer.hpp"
#include "breit/roots.hpp"

namespace breit {

namespace {

constexpr double kSeriesSafetyBound = 50.0;
constexpr int kMaxTerms = 2000;

bool is_nonpositive_integer(double x, double tol) {
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) < tol;
}

}  // namespace

double kummer_m(double a, double c, double rho) {
    if (is_nonpositive_integer(c, 1e-12))
        throw std::domain_error("kummer_m: c must not be a non-positive integer");
    const bool terminating = is_nonpositive_integer(a, 1e-9);
    const int degree = terminating ? static_cast<int>(-std::round(a)) : -1;
    if (!terminating && std::abs(rho) > kSeriesSafetyBound)
        throw std::runtime_error(
            "kummer_m: |rho| beyond series safety bound for a non-terminating "
            "series");

    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        if (terminating && k == degree) return sum;
        term *= (a + k) * rho / ((c + k) * (k + 1));
        sum += term;
        if (!terminating && std::abs(term) < 1e-17 * std::abs(sum) && k > 1)
            return sum;
    }
    if (terminating) return sum;
    throw std::runtime_error("kummer_m: series did not converge");
}

double Polynomial::operator()(double x) const {
    double v = 0.0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) v = v * x + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    for (std::size_t k = 1; k < coeff.size(); ++k)
        d.coeff.push_back(static_cast<double>(k) * coeff[k]);
    if (d.coeff.empty()) d.coeff.push_back(0.0);
    return d;
}

std::vector<double> Polynomial::roots_in(double lo, double hi) const {
    std::vector<double> found;
    const int samples = 64 * (degree() + 1);
    double prev_x = lo, prev_v = (*this)(lo);
    for (int i = 1; i <= samples; ++i) {
        const double x = lo + (hi - lo) * i / samples;
        const double v = (*this)(x);
        if (prev_v == 0.0) {
            found.push_back(prev_x);
        } else if (v * prev_v < 0.0) {
            auto r = brent_find_root([this](double t) { return (*this)(t); },
                                     prev_x, x, 1e-15);
            found.push_back(r.root);
        }
        prev_x = x;
        prev_v = v;
    }
    return found;
}

Polynomial kummer_polynomial(int degree, double c) {
    if (degree < 0) throw std::domain_error("kummer_polynomial: degree < 0");
    if (is_nonpositive_integer(c, 1e-12))
        throw std::domain_error(
            "kummer_polynomial: c must not be a non-positive integer");
    Polynomial p;
    p.coeff.resize(degree + 1);
    double t = 1.0;
    const double a = -static_cast<double>(degree);
    for (int k = 0; k <= degree; ++k) {
        p.coeff[k] = t;
        t *= (a + k) / ((c + k) * (k + 1));
    }
    return p;
}

}  // namespace breit
