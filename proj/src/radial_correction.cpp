#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "breit/quadrature.hpp"
#include "breit/radial.hpp"

namespace breit {

NodeExcisionError::NodeExcisionError(double node_)
    : std::runtime_error(
          "correction_quadrature: requested point lies at or beyond a node of "
          "the leading solution (node at rho = " +
          std::to_string(node_) + ")"),
      node(node_) {}

namespace {

double quad_checked(const std::function<double(double)>& f, double a, double b,
                    const std::vector<double>& breaks, double abs_tol) {
    const auto r = integrate(f, a, b, abs_tol, 1e-12, breaks);
    if (!r.converged)
        throw std::runtime_error(
            "correction_quadrature: quadrature did not converge (achieved "
            "error estimate " +
            std::to_string(r.error_estimate) + ")");
    return r.value;
}

// ---- n = 1, exact-delta kernel --------------------------------------------
// The correction solves f'' + f' (-1 + gamma/rho + 1/(rho(1+y rho))) =
// delta/(rho(1+y rho)) (the full first-derivative coefficient is kept, which
// reproduces the exact Taylor coefficient f_1 = delta/(gamma+1) at the
// origin).  Integrating factor e^{-t} t^{gamma+1}/(1+y t):
//   f'(t) = delta e^{t} (1+y t) t^{-gamma-1} W(t),
//   W(t)  = int_0^t e^{-s} s^gamma (1+y s)^{-2} ds,  f(0) = 0.

double inner_W(const DimensionlessContext& ctx, double t) {
    const double g = ctx.gamma, y = ctx.y;
    return quad_checked(
        [g, y](double s) {
            return std::exp(-s) * std::pow(s, g) /
                   ((1.0 + y * s) * (1.0 + y * s));
        },
        0.0, t, {1.0 / y}, 1e-16 * std::max(1.0, t));
}

double fprime_exact_n1(const DimensionlessContext& ctx, double t) {
    return ctx.delta * std::exp(t) * (1.0 + ctx.y * t) *
           std::pow(t, -ctx.gamma - 1.0) * inner_W(ctx, t);
}

// ---- n = 1, truncated (scaling-limit) kernel ------------------------------
// In u = y rho with gamma -> 2, delta -> 1/4:
//   phi'(u) = (1/4) (1+u) u^{-3} I(u),  I(u) = int_0^u v^2/(1+v)^2 dv,
//   f = phi(u)/y.

double inner_I(double u) {
    return quad_checked(
        [](double v) {
            return v * v / ((1.0 + v) * (1.0 + v));
        },
        0.0, u, {1.0}, 1e-16 * std::max(1.0, u));
}

double phi_prime(double u) {
    return 0.25 * (1.0 + u) * inner_I(u) / (u * u * u);
}

// ---- n >= 2, variation of parameters on the leading-order kernel ----------
// D0 f = D1 F with homogeneous solution F = F(-(n-1), gamma, rho):
//   f(rho) = F(rho) U(rho),  U' = e^{t} (t^gamma F^2)^{-1} J(t),
//   J(t)   = int_0^t e^{-s} s^gamma F(s) R(s) ds,
//   R(s)   = -(F'(s) - delta F(s)) / (s (1 + y s)).

struct VopKernel {
    Polynomial F;
    Polynomial Fp;
    double y, gamma, delta;
    double first_node;  // +inf when F has no positive zero

    double R(double s) const {
        return -(Fp(s) - delta * F(s)) / (s * (1.0 + y * s));
    }
    double J(double t) const {
        const double g = gamma;
        return quad_checked(
            [this, g](double s) {
                return std::exp(-s) * std::pow(s, g) * F(s) * R(s);
            },
            0.0, t, {1.0 / y}, 1e-16 * std::max(1.0, t));
    }
    double Uprime(double t) const {
        const double Ft = F(t);
        return std::exp(t) * J(t) / (std::pow(t, gamma) * Ft * Ft);
    }
    double U(double rho) const {
        return quad_checked([this](double t) { return Uprime(t); }, 0.0, rho,
                            {1.0 / y}, 1e-15 * std::max(1.0, rho));
    }
};

VopKernel make_vop_kernel(const DimensionlessContext& ctx, int n, double rho) {
    VopKernel k{kummer_polynomial(n - 1, ctx.gamma), Polynomial{}, ctx.y,
                ctx.gamma, ctx.delta,
                std::numeric_limits<double>::infinity()};
    k.Fp = k.F.derivative();
    const auto nodes = k.F.roots_in(0.0, std::max(4.0 * n, rho * 1.1) + 1.0);
    if (!nodes.empty()) k.first_node = nodes.front();
    if (rho > 0.95 * k.first_node) throw NodeExcisionError(k.first_node);
    return k;
}

void check_args(const DimensionlessContext& ctx, int n, double rho,
                DeltaConvention convention) {
    if (n < 1) throw std::domain_error("correction_quadrature: n must be >= 1");
    if (!(rho > 0.0))
        throw std::domain_error("correction_quadrature: rho must be positive");
    if (std::abs(ctx.N_param - (n - 1)) > 1e-6)
        throw std::logic_error(
            "correction_quadrature: context is not at the n-th eigenvalue");
    if (convention == DeltaConvention::truncated && n != 1)
        throw std::invalid_argument(
            "correction_quadrature: the truncated (scaling-limit) kernel is "
            "defined for the ground state only");
}

}  // namespace

double correction_closed_form_ground(const DimensionlessContext& ctx,
                                     double rho) {
    if (std::abs(ctx.N_param) > 1e-6)
        throw std::logic_error(
            "correction_closed_form_ground: ground-state context required");
    const double u = ctx.y * rho;
    if (std::abs(u) >= 1.0)
        throw std::domain_error(
            "correction_closed_form_ground: requires |y rho| < 1");
    if (rho == 0.0) return 0.0;
    if (std::abs(u) < 0.05) {
        // small-u series to avoid cancellation:
        // f = (1/y) sum_{k>=1} (-1)^{k-1} u^k / (2 k (k+1) (k+2))
        double sum = 0.0, uk = 1.0;
        for (int k = 1; k <= 30; ++k) {
            uk *= u;
            const double term =
                ((k % 2 == 1) ? 1.0 : -1.0) * uk /
                (2.0 * k * (k + 1.0) * (k + 2.0));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum / ctx.y;
    }
    const double up = 1.0 + u;
    return -(1.0 / (2.0 * ctx.y)) *
           (up * up / (2.0 * u * u) * std::log(1.0 / up) + 0.75 +
            1.0 / (2.0 * u));
}

double correction_quadrature(const DimensionlessContext& ctx, int n, double rho,
                             DeltaConvention convention) {
    check_args(ctx, n, rho, convention);
    if (n == 1) {
        if (convention == DeltaConvention::truncated) {
            const double u = ctx.y * rho;
            return quad_checked([](double t) { return phi_prime(t); }, 0.0, u,
                                {1.0}, 1e-15 * std::max(1.0, u)) /
                   ctx.y;
        }
        return quad_checked(
            [&ctx](double t) { return fprime_exact_n1(ctx, t); }, 0.0, rho,
            {1.0 / ctx.y}, 1e-15 * std::max(1.0, rho));
    }
    const auto k = make_vop_kernel(ctx, n, rho);
    return k.F(rho) * k.U(rho);
}

double correction_quadrature_d1(const DimensionlessContext& ctx, int n,
                                double rho, DeltaConvention convention) {
    check_args(ctx, n, rho, convention);
    if (n == 1) {
        if (convention == DeltaConvention::truncated)
            return phi_prime(ctx.y * rho);
        return fprime_exact_n1(ctx, rho);
    }
    const auto k = make_vop_kernel(ctx, n, rho);
    return k.Fp(rho) * k.U(rho) + k.F(rho) * k.Uprime(rho);
}

double correction_quadrature_d2(const DimensionlessContext& ctx, int n,
                                double rho, DeltaConvention convention) {
    check_args(ctx, n, rho, convention);
    if (n == 1) {
        if (convention == DeltaConvention::truncated) {
            const double u = ctx.y * rho;
            return ctx.y * (phi_prime(u) * (1.0 / (1.0 + u) - 3.0 / u) +
                            0.25 / (u * (1.0 + u)));
        }
        const double fp = fprime_exact_n1(ctx, rho);
        return fp * (1.0 + ctx.y / (1.0 + ctx.y * rho) -
                     (ctx.gamma + 1.0) / rho) +
               ctx.delta / (rho * (1.0 + ctx.y * rho));
    }
    const auto k = make_vop_kernel(ctx, n, rho);
    const Polynomial Fpp = k.Fp.derivative();
    const double U = k.U(rho), Up = k.Uprime(rho);
    const double Upp =
        Up * (1.0 - k.gamma / rho - 2.0 * k.Fp(rho) / k.F(rho)) +
        k.R(rho) / k.F(rho);
    return Fpp(rho) * U + 2.0 * k.Fp(rho) * Up + k.F(rho) * Upp;
}

}  // namespace breit
