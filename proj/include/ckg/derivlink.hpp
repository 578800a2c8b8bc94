#pragma once

#include <array>
#include <functional>

#include "ckg/coords.hpp"

namespace ckg {

// The A±/B± shorthand:  2A± = 1 ∓ x² ± x5²,  2B± = 1 ± x² ± x5².
struct LinkCoefficients {
    double a_plus = 0.0;
    double a_minus = 0.0;
    double b_plus = 0.0;
    double b_minus = 0.0;
};

// Value and first conformal derivatives of a scalar field at a point.
struct ConformalJet {
    double phi = 0.0;
    std::array<double, 4> d_i{};  // d/dx_i
    double d5 = 0.0;              // d/dx5
};

// The six projective derivatives of the homogeneous extension.
struct ProjectiveGradient {
    double d0 = 0.0;
    std::array<double, 4> d_i{};
    double d5 = 0.0;
};

// Jet on the xbar_5 = 0 section where d5 phi is absent.
struct ReducedJet {
    double phi = 0.0;
    std::array<double, 4> d_i{};
};

struct SpecialProjectiveGradient {
    std::array<double, 4> d_i{};
    double d0 = 0.0;
};

LinkCoefficients link_coefficients(const ConformalPoint& q);

// The derivative-link formulas (r = r0 = 1 chart):
//   dbar_0 =  N (A+/x5) phi + B- d5 phi - x5 x_i d_i phi
//   dbar_5 = -N (A-/x5) phi - B+ d5 phi - x5 x_i d_i phi
//   dbar_i =  N (x_i/x5) phi + x_i d5 phi + x5 d_i phi
// x_i d_i phi is the Euclidean four-term sum.
ProjectiveGradient project_gradient(const ConformalJet& jet,
                                    const ConformalPoint& q,
                                    const ModelParams& params);

// (xbar · dbar_FD) phi - N phi with central differences of step h.
// Vanishes (to FD accuracy) for fields homogeneous of degree N.
double euler_residual(const std::function<double(const ProjectivePoint&)>& field,
                      const ProjectivePoint& p, double degree, double h);

// xbar_5 = 0 limit with d5 phi = 0:
//   dbar_i = A d_i phi + (N/A) x_i phi,  dbar_0 = -A x_i d_i phi + (N/A) phi,
// A = sqrt(1 + x^2).
SpecialProjectiveGradient special_projective_gradient(
    const ReducedJet& jet, const std::array<double, 4>& x, double degree);

} // namespace ckg
