#include "ckg/separation.hpp"

#include <cmath>

namespace ckg {

HyperbolicPoint to_hyperbolic(double r, double x5) {
    if (!(x5 >= 0.0) || !(r > x5)) {
        throw WedgeError("to_hyperbolic: need r > x5 >= 0 (light cone r = x5 is singular)");
    }
    HyperbolicPoint h;
    h.rho = std::sqrt((r - x5) * (r + x5));
    h.xi = std::atanh(x5 / r);
    return h;
}

std::pair<double, double> from_hyperbolic(const HyperbolicPoint& h) {
    return {h.rho * std::cosh(h.xi), h.rho * std::sinh(h.xi)};
}

double radial_ode_residual(const std::function<double(double)>& U, double rho,
                           double p, double h) {
    if (!(h > 0.0)) throw DomainError("radial_ode_residual: h must be > 0");
    if (!(rho >= 3.0 * h)) throw DomainError("radial_ode_residual: need rho >= 3h");
    const double d2 = (U(rho + h) - 2.0 * U(rho) + U(rho - h)) / (h * h);
    return rho * rho * d2 - p * (p + 1.0) * U(rho);
}

double radial_solution(double rho, const RadialSolutionParams& params) {
    if (!(rho > 0.0)) throw DomainError("radial_solution: rho must be > 0");
    return params.c1 * std::pow(rho, -params.p) +
           params.c2 * std::pow(rho, params.p + 1.0);
}

double gravitational_force(double x_sq, double x5_sq, double gM, double c2) {
    if (!(x_sq > x5_sq)) {
        throw DomainError("gravitational_force: singular at x^2 <= x5^2");
    }
    const double rho_sq = x_sq - x5_sq;
    return -gM / rho_sq + 2.0 * c2 * std::sqrt(rho_sq);
}

double xi_ode_residual(const std::function<double(double)>& V, double xi,
                       int ell, double p, const ModelParams& params, double h) {
    if (!(h > 0.0)) throw DomainError("xi_ode_residual: h must be > 0");
    if (!(xi >= 3.0 * h)) throw DomainError("xi_ode_residual: need xi >= 3h");
    const double vc = V(xi);
    const double d2 = (V(xi + h) - 2.0 * vc + V(xi - h)) / (h * h);
    const double d1 = (V(xi + h) - V(xi - h)) / (2.0 * h);
    const double sh = std::sinh(xi);
    const double ch = std::cosh(xi);
    const double g = 2.0 * std::tanh(xi) - 3.0 * ch / sh;
    const double q = static_cast<double>(ell) * (ell + 1.0) / (ch * ch) -
                     params.Lambda / (sh * sh) - p * (p + 1.0);
    return d2 + g * d1 + q * vc;
}

double v_from_f(const std::function<double(double)>& F, double xi) {
    if (!(xi > 0.0)) throw DomainError("v_from_f: xi must be > 0");
    return std::sqrt(std::sinh(xi)) * std::tanh(xi) * F(xi);
}

MuRoots mu_from_params(double N, double msq) {
    const double rhs = N * N + 5.0 * N + 15.0 / 4.0 + msq;
    const double disc = 1.0 + 4.0 * rhs;
    if (disc < 0.0) {
        throw ComplexRootError("mu_from_params: mu(mu-1) = N^2+5N+15/4+msq has complex roots");
    }
    const double root = std::sqrt(disc);
    return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

} // namespace ckg
