#pragma once

#include "ckg/coords.hpp"
#include "ckg/grid.hpp"

namespace ckg {

// One separated mode e^{int} Y_{ell m} f(r, x5).
struct SeparatedModeSpec {
    double n = 1.0;       // temporal frequency, n > 0
    int ell = 0;
    int m = 0;            // |m| <= ell
    double lambda = 1.0;  // secondary separation constant
    double amplitude = 1.0;
};

// Apply  x5^2 (□ - d55) + 3 x5 d5 + Lambda  with □ = d11 + d22 + d33 - dtt
// on a grid over (x1, x2, x3, t, x5), second-order central differences on
// interior points.  The boundary layer of the result is NaN.
GridField apply_conformal_kg(const GridField& u, const ModelParams& params);

// Apply the separated operator on a grid over (r, x5):
//   drr + (2/r) dr - d55 + (3/x5) d5 + (Lambda/x5^2) + [n^2 - ell(ell+1)/r^2].
// This is the residual oracle for every separated solution.
GridField apply_separated_f(const GridField& f, double n, int ell,
                            const ModelParams& params);

// Separable solution of the separated equation:
//   f(r, x5) = amplitude * j_ell(lambda r) * x5^2 * J_nu(sigma x5),
// sigma = sqrt(lambda^2 - n^2), nu = sqrt(4 + Lambda) = mu - 1/2.
double bessel_product_solution(double r, double x5, const SeparatedModeSpec& spec,
                               const ModelParams& params);

// Same values as the pointwise call, filled via the separable structure
// (one 1D pass per axis) for large grids.
GridField bessel_product_field(const Axis& r_axis, const Axis& x5_axis,
                               const SeparatedModeSpec& spec,
                               const ModelParams& params);

} // namespace ckg
