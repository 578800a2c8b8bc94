#include "ckg/specfun.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace ckg {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_negative_integer(double v) {
    return v < 0.0 && v == std::floor(v);
}

// Ascending power series around x = 0, accumulated in long double.  Safe
// up to x ~ 12 where the alternating terms start cancelling badly.
double bessel_series(double nu, double x, const SeriesControl& ctl) {
    const long double xl = x;
    const long double q = xl * xl / 4.0L;
    long double term =
        std::exp(static_cast<long double>(nu) * std::log(xl / 2.0L) -
                 std::lgamma(static_cast<long double>(nu) + 1.0L));
    long double sum = term;
    for (long k = 1; k <= ctl.max_terms; ++k) {
        term *= -q / (static_cast<long double>(k) * (nu + k));
        sum += term;
        const long double bound =
            std::max(static_cast<long double>(ctl.abs_tol),
                     static_cast<long double>(ctl.rel_tol) * std::fabs(sum));
        if (std::fabs(term) < 0.5L * bound && k > x / 2.0) {
            return static_cast<double>(sum);
        }
    }
    throw ConvergenceError("bessel_j: series did not converge",
                           static_cast<double>(sum), ctl.max_terms);
}

// Miller's backward recurrence.  f_k tracks C * J_{nu+k}(x); the constant
// follows from the Neumann normalization
//   (x/2)^nu = sum_{j>=0} (nu+2j) Gamma(nu+j)/j! J_{nu+2j}(x).
double bessel_backward(double nu, double x, const SeriesControl& ctl) {
    const long start = static_cast<long>(std::ceil(
        std::max(1.3 * x + 30.0, nu + 25.0)));
    if (start + 2 > std::max(ctl.max_terms, 200L)) {
        throw ConvergenceError("bessel_j: recurrence order budget exceeded",
                               0.0, start);
    }
    const long double xl = x;
    long double fp = 0.0L;       // f_{k+1}
    long double fc = 1e-120L;    // f_k
    long double norm = 0.0L;
    long double f0 = 0.0L;
    for (long k = start; k >= 0; --k) {
        if (k % 2 == 0) {
            const long j = k / 2;
            long double c;
            if (j == 0) {
                c = std::exp(std::lgamma(static_cast<long double>(nu) + 1.0L));
            } else {
                c = (nu + 2.0L * j) *
                    std::exp(std::lgamma(nu + static_cast<long double>(j)) -
                             std::lgamma(static_cast<long double>(j) + 1.0L));
            }
            norm += c * fc;
        }
        if (k == 0) {
            f0 = fc;
            break;
        }
        const long double fm = (2.0L * (nu + k) / xl) * fc - fp;
        fp = fc;
        fc = fm;
        if (std::fabs(fc) > 1e250L) {
            fc *= 1e-250L;
            fp *= 1e-250L;
            norm *= 1e-250L;
        }
    }
    const long double scale = std::exp(
        static_cast<long double>(nu) * std::log(xl / 2.0L));
    return static_cast<double>(f0 * scale / norm);
}

// Normalized associated Legendre with Condon-Shortley phase, m >= 0:
// the theta part of Y_{ell m}.
double norm_assoc_legendre(int ell, int m, double ct, double st) {
    double pmm = 1.0 / std::sqrt(4.0 * kPi);
    for (int k = 1; k <= m; ++k) {
        pmm *= -st * std::sqrt((2.0 * k + 1.0) / (2.0 * k));
    }
    if (ell == m) return pmm;
    double pm1 = ct * std::sqrt(2.0 * m + 3.0) * pmm;
    if (ell == m + 1) return pm1;
    double p = 0.0;
    for (int l = m + 2; l <= ell; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) /
                                   (static_cast<double>(l) * l - m * m));
        const double b = std::sqrt(((l - 1.0) * (l - 1.0) - m * m) /
                                   (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        p = a * (ct * pm1 - b * pmm);
        pmm = pm1;
        pm1 = p;
    }
    return p;
}

} // namespace

double bessel_j(double nu, double x, const SeriesControl& ctl) {
    if (!std::isfinite(nu) || !std::isfinite(x)) {
        throw DomainError("bessel_j: non-finite argument");
    }
    if (x < 0.0) throw DomainError("bessel_j: x must be >= 0");
    if (nu < -1.0 || is_negative_integer(nu)) {
        throw DomainError("bessel_j: order must be >= -1 and not a negative integer");
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw DomainError("bessel_j: J_nu diverges at x = 0 for nu < 0");
    }
    if (x <= 12.0) return bessel_series(nu, x, ctl);
    return bessel_backward(nu, x, ctl);
}

double spherical_bessel_j(int ell, double x, const SeriesControl& ctl) {
    if (ell < 0) throw DomainError("spherical_bessel_j: ell must be >= 0");
    if (x < 0.0) throw DomainError("spherical_bessel_j: x must be >= 0");
    if (x == 0.0) return ell == 0 ? 1.0 : 0.0;
    return std::sqrt(kPi / (2.0 * x)) * bessel_j(ell + 0.5, x, ctl);
}

double legendre_p(int ell, double x) {
    if (ell < 0) throw DomainError("legendre_p: ell must be >= 0");
    if (ell == 0) return 1.0;
    double pm2 = 1.0;
    double pm1 = x;
    for (int l = 2; l <= ell; ++l) {
        const double p = ((2.0 * l - 1.0) * x * pm1 - (l - 1.0) * pm2) / l;
        pm2 = pm1;
        pm1 = p;
    }
    return pm1;
}

std::complex<double> spherical_harmonic(const AngularIndex& idx, double theta,
                                        double phi) {
    if (!idx.valid()) {
        throw DomainError("spherical_harmonic: need ell >= 0 and |m| <= ell");
    }
    if (!(theta >= -1e-12 && theta <= kPi + 1e-12)) {
        throw DomainError("spherical_harmonic: theta outside [0, pi]");
    }
    const int am = std::abs(idx.m);
    const double p = norm_assoc_legendre(idx.ell, am, std::cos(theta),
                                         std::sin(theta));
    const std::complex<double> y(p * std::cos(am * phi), p * std::sin(am * phi));
    if (idx.m >= 0) return y;
    return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

double gauss_2f1(double a, double b, double c, double z,
                 const SeriesControl& ctl) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
        !std::isfinite(z)) {
        throw DomainError("gauss_2f1: non-finite argument");
    }
    if (c <= 0.0 && c == std::floor(c)) {
        throw DomainError("gauss_2f1: c must not be a non-positive integer");
    }
    if (std::fabs(z) >= 1.0) {
        throw DomainError("gauss_2f1: require |z| < 1");
    }
    long double term = 1.0L;
    long double sum = 1.0L;
    for (long k = 0; k < ctl.max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0L)) * z;
        sum += term;
        if (term == 0.0L) return static_cast<double>(sum);  // polynomial case
        const long double bound =
            std::max(static_cast<long double>(ctl.abs_tol),
                     static_cast<long double>(ctl.rel_tol) * std::fabs(sum));
        if (std::fabs(term) < 0.5L * bound) return static_cast<double>(sum);
    }
    throw ConvergenceError("gauss_2f1: series did not converge (|z| near 1?)",
                           static_cast<double>(sum), ctl.max_terms);
}

} // namespace ckg
