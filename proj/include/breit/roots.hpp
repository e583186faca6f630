#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace breit {

struct BrentResult {
    double root = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Brent's method on a bracketing interval [a, b] (f(a) f(b) <= 0).
// xtol_rel is the relative tolerance on the root location.
BrentResult brent_find_root(const std::function<double(double)>& f, double a,
                            double b, double xtol_rel, int max_iter = 200);

struct BracketScan {
    // Sign-change intervals (lo, hi) in scan order.
    std::vector<std::pair<double, double>> brackets;
    int evaluations = 0;
};

// Evaluate f on a logarithmic grid of `points` samples over [lo, hi] and
// collect all sign-change brackets.
BracketScan log_bracket_scan(const std::function<double(double)>& f, double lo,
                             double hi, int points);

}  // namespace breit
