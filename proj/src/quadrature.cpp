#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "breit/quadrature.hpp"

namespace breit {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    }
    PanelResult r;
    r.value = result_kronrod * half;
    r.error = std::abs((result_kronrod - result_gauss) * half);
    return r;
}

struct Panel {
    double a, b, value, error;
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           const std::vector<double>& break_points) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::vector<double> edges{a};
    for (double x : break_points)
        if ((a < x && x < b) || (b < x && x < a)) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    if (a > b) std::reverse(edges.begin(), edges.end());

    std::vector<Panel> panels;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const auto r = gk15(f, edges[i], edges[i + 1]);
        panels.push_back({edges[i], edges[i + 1], r.value, r.error});
    }

    constexpr int kMaxPanels = 4000;
    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].error;
            if (panels[i].error > panels[worst].error) worst = i;
        }
        const double target = std::max(abs_tol, rel_tol * std::abs(total));
        if (err <= target || static_cast<int>(panels.size()) >= kMaxPanels ||
            panels[worst].error == 0.0) {
            out.value = total;
            out.error_estimate = err;
            out.panels = static_cast<int>(panels.size());
            out.converged = err <= target;
            return out;
        }
        Panel split = panels[worst];
        const double mid = 0.5 * (split.a + split.b);
        if (mid == split.a || mid == split.b) {
            // interval exhausted at machine precision
            panels[worst].error = 0.0;
            continue;
        }
        const auto left = gk15(f, split.a, mid);
        const auto right = gk15(f, mid, split.b);
        panels[worst] = {split.a, mid, left.value, left.error};
        panels.push_back({mid, split.b, right.value, right.error});
    }
}

}  // namespace breit
