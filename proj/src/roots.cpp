#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "breit/roots.hpp"

namespace breit {

BrentResult brent_find_root(const std::function<double(double)>& f, double a,
                            double b, double xtol_rel, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0, true};
    if (fb == 0.0) return {b, 0, true};
    if (fa * fb > 0.0)
        throw std::invalid_argument("brent_find_root: interval does not bracket");

    double c = a, fc = fa;
    double d = b - a, e = d;
    BrentResult result;
    for (int iter = 1; iter <= max_iter; ++iter) {
        result.iterations = iter;
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 =
            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
            0.5 * xtol_rel * std::max(std::abs(b), 1e-300);
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) {
            result.root = b;
            result.converged = true;
            return result;
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p, qq;
            if (a == c) {
                p = 2.0 * xm * s;
                qq = 1.0 - s;
            } else {
                const double q2 = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * q2 * (q2 - r) - (b - a) * (r - 1.0));
                qq = (q2 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) qq = -qq;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * qq - std::abs(tol1 * qq),
                                   std::abs(e * qq))) {
                e = d;
                d = p / qq;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    result.root = b;
    result.converged = false;
    return result;
}

BracketScan log_bracket_scan(const std::function<double(double)>& f, double lo,
                             double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw std::invalid_argument("log_bracket_scan: bad scan range");
    BracketScan scan;
    const double llo = std::log(lo), lhi = std::log(hi);
    double prev_x = lo, prev_v = f(lo);
    ++scan.evaluations;
    for (int i = 1; i < points; ++i) {
        const double x = std::exp(llo + (lhi - llo) * i / (points - 1));
        const double v = f(x);
        ++scan.evaluations;
        if (prev_v == 0.0 || v * prev_v < 0.0)
            scan.brackets.emplace_back(prev_x, x);
        prev_x = x;
        prev_v = v;
    }
    return scan;
}

}  // namespace breit
