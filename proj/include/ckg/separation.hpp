#pragma once

#include <functional>
#include <utility>

#include "ckg/coords.hpp"

namespace ckg {

// (rho, xi) with r = rho cosh(xi), x5 = rho sinh(xi); valid in the wedge
// r > x5 >= 0.
struct HyperbolicPoint {
    double rho = 0.0;
    double xi = 0.0;
};

// U(rho) = c1 rho^{-p} + c2 rho^{p+1}; for p = 1, c1 plays the role of gM.
struct RadialSolutionParams {
    double p = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

struct MuRoots {
    double mu_plus = 0.0;
    double mu_minus = 0.0;
};

HyperbolicPoint to_hyperbolic(double r, double x5);
std::pair<double, double> from_hyperbolic(const HyperbolicPoint& h);  // (r, x5)

// FD value of rho^2 U'' - p(p+1) U.
double radial_ode_residual(const std::function<double(double)>& U, double rho,
                           double p, double h);

double radial_solution(double rho, const RadialSolutionParams& params);

// f = -gM/(x^2 - x5^2) + 2 c2 (x^2 - x5^2)^{1/2}; singular on the light
// cone x^2 = x5^2.
double gravitational_force(double x_sq, double x5_sq, double gM, double c2);

// FD value of  V'' + (2 tanh xi - 3 coth xi) V'
//              + [ell(ell+1)/cosh^2 - Lambda/sinh^2 - p(p+1)] V.
double xi_ode_residual(const std::function<double(double)>& V, double xi,
                       int ell, double p, const ModelParams& params, double h);

// Dependent-variable substitution V(xi) = sinh^{1/2}(xi) tanh(xi) F(xi).
double v_from_f(const std::function<double(double)>& F, double xi);

// Both roots of mu(mu-1) = N^2 + 5N + 15/4 + msq, mu_plus >= mu_minus.
MuRoots mu_from_params(double N, double msq);

} // namespace ckg
