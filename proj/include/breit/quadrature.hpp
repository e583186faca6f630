#pragma once

#include <functional>
#include <vector>

namespace breit {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
// break_points inside (a, b) force initial panel boundaries (used for scale
// changes such as sigma = 1/y and for zeros of the homogeneous solution).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-12,
                           double rel_tol = 1e-12,
                           const std::vector<double>& break_points = {});

}  // namespace breit
