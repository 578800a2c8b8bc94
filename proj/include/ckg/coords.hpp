#pragma once

#include <array>
#include <cmath>

#include "ckg/errors.hpp"

namespace ckg {

// Model constants.  Lambda and mu are derived, never set directly:
//   Lambda = N(N+5) + msq,   mu = larger root of mu(mu-1) = Lambda + 15/4.
struct ModelParams {
    double r = 1.0;    // hypersphere radius
    double r0 = 1.0;   // second universal constant
    double N = 0.0;    // homogeneity degree
    double msq = 0.0;  // mass parameter m^2
    double Lambda = 0.0;
    double mu = 0.0;

    static ModelParams make(double N, double msq = 0.0, double r = 1.0,
                            double r0 = 1.0);
    // Convenience: pick N (msq = 0) so that N(N+5) equals the given Lambda.
    static ModelParams from_lambda(double Lambda, double r = 1.0,
                                   double r0 = 1.0);
};

// Six homogeneous coordinates on (a cone over) the quadric
// x^2 + x0^2 - x5^2 = r^2.
struct ProjectivePoint {
    double x0 = 0.0;
    std::array<double, 4> xi{};  // x1..x4
    double x5 = 0.0;

    double spatial_sq() const {
        return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3];
    }
    double chart_denominator() const { return x0 + x5; }
};

// Five physical coordinates (x1..x4, x5), x5 != 0 away from the chart
// singularity.
struct ConformalPoint {
    std::array<double, 4> xi{};  // x1..x4
    double x5 = 0.0;

    double x_sq() const {
        return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3];
    }
};

// Chart map x_i = r0 xbar_i/(xbar_0+xbar_5), x5 = r0 r/(xbar_0+xbar_5).
// The point is treated as homogeneous coordinates: r is read off the point
// itself (the map depends only on the ray through p), so the result is
// invariant under p -> lambda p for lambda > 0.
ConformalPoint to_conformal(const ProjectivePoint& p, const ModelParams& params);

// Algebraic inverse onto the canonical section lying exactly on the
// params.r quadric.  With r = r0 = 1 this is
//   xbar_0 = A+/x5,  xbar_5 = A-/x5,  xbar_i = x_i/x5,  2A± = 1 ∓ x² ± x5².
ProjectivePoint to_projective(const ConformalPoint& q, const ModelParams& params);

// xbar^2 + xbar_0^2 - xbar_5^2 - r^2; zero for on-quadric points.
double quadric_residual(const ProjectivePoint& p, const ModelParams& params);

} // namespace ckg
