#pragma once

#include <complex>

#include "ckg/errors.hpp"

namespace ckg {

// Index (ell, m) of a spherical harmonic, -ell <= m <= ell.
struct AngularIndex {
    int ell = 0;
    int m = 0;
    bool valid() const { return ell >= 0 && m >= -ell && m <= ell; }
};

// Budget and tolerances for series evaluation.
struct SeriesControl {
    long max_terms = 400;
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;
};

// Bessel function of the first kind J_nu(x), nu >= -1 and not a negative
// integer, x >= 0.  Power series for small x, backward recurrence with the
// Neumann-series normalization for large x.  Throws ConvergenceError with
// the partial sum if the term budget runs out.
double bessel_j(double nu, double x, const SeriesControl& ctl = {});

// Spherical Bessel function j_ell(x) = sqrt(pi/(2x)) J_{ell+1/2}(x) for
// x > 0; j_0(0) = 1 and j_ell(0) = 0 for ell >= 1.
double spherical_bessel_j(int ell, double x, const SeriesControl& ctl = {});

// Legendre polynomial P_ell(x).
double legendre_p(int ell, double x);

// Orthonormal spherical harmonic Y_{ell m}(theta, phi) with the
// Condon-Shortley phase:  Y_{ell,-m} = (-1)^m conj(Y_{ell m}).
std::complex<double> spherical_harmonic(const AngularIndex& idx, double theta,
                                        double phi);

// Gauss hypergeometric 2F1(a, b; c; z) by power series, real z, |z| < 1.
double gauss_2f1(double a, double b, double c, double z,
                 const SeriesControl& ctl = {});

} // namespace ckg
