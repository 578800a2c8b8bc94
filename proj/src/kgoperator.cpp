#include "ckg/kgoperator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include "ckg/specfun.hpp"

namespace ckg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t worker_count(std::size_t points) {
    if (points < 200000) return 1;
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("CONFORMAL_KG_THREADS")) {
        const long v = std::strtol(cap, nullptr, 10);
        if (v >= 1 && static_cast<std::size_t>(v) < n) n = static_cast<std::size_t>(v);
    }
    return n;
}

// Run fn(lin) over [0, total) on disjoint chunks.  Each point writes only
// its own output slot, so the result matches sequential evaluation.
template <typename Fn>
void parallel_over(std::size_t total, Fn&& fn) {
    const std::size_t nw = worker_count(total);
    if (nw <= 1) {
        for (std::size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + nw - 1) / nw;
    for (std::size_t w = 0; w < nw; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

void require_positive_axis(const Axis& a, const char* what) {
    if (!(a.min > 0.0) || a.min < 3.0 * a.step) {
        throw SingularAxisError(std::string(what) +
                                ": axis must start at a positive offset >= 3h");
    }
}

} // namespace

GridField apply_conformal_kg(const GridField& u, const ModelParams& params) {
    if (u.dim() != 5) {
        throw ShapeError("apply_conformal_kg: need a 5D grid over (x1,x2,x3,t,x5)");
    }
    for (const Axis& a : u.axes()) {
        if (a.count < 3) throw ShapeError("apply_conformal_kg: need >= 3 points per axis");
    }
    const Axis& x5_axis = u.axes()[4];
    require_positive_axis(x5_axis, "apply_conformal_kg: x5");

    GridField out(u.axes());
    std::vector<std::size_t> strides(5);
    {
        std::size_t s = 1;
        for (std::size_t k = 5; k-- > 0;) {
            strides[k] = s;
            s *= u.axes()[k].count;
        }
    }
    const double inv_h2[5] = {
        1.0 / (u.axes()[0].step * u.axes()[0].step),
        1.0 / (u.axes()[1].step * u.axes()[1].step),
        1.0 / (u.axes()[2].step * u.axes()[2].step),
        1.0 / (u.axes()[3].step * u.axes()[3].step),
        1.0 / (u.axes()[4].step * u.axes()[4].step)};
    const double inv_2h5 = 1.0 / (2.0 * x5_axis.step);
    const double Lambda = params.Lambda;

    parallel_over(u.size(), [&](std::size_t lin) {
        // unravel inline to keep the hot loop allocation-free
        std::size_t rem = lin;
        std::size_t idx[5];
        bool interior = true;
        for (std::size_t k = 0; k < 5; ++k) {
            idx[k] = rem / strides[k];
            rem %= strides[k];
            if (idx[k] == 0 || idx[k] + 1 >= u.axes()[k].count) interior = false;
        }
        if (!interior) {
            out[lin] = kNaN;
            return;
        }
        const double x5 = x5_axis.coord(idx[4]);
        const double uc = u[lin];
        // □ - d55 : + on x1,x2,x3, - on t and x5
        double wave = 0.0;
        for (int k = 0; k < 5; ++k) {
            const double d2 =
                (u[lin + strides[static_cast<std::size_t>(k)]] - 2.0 * uc +
                 u[lin - strides[static_cast<std::size_t>(k)]]) *
                inv_h2[k];
            wave += (k < 3) ? d2 : -d2;
        }
        const double d5 = (u[lin + strides[4]] - u[lin - strides[4]]) * inv_2h5;
        out[lin] = x5 * x5 * wave + 3.0 * x5 * d5 + Lambda * uc;
    });
    return out;
}

GridField apply_separated_f(const GridField& f, double n, int ell,
                            const ModelParams& params) {
    if (f.dim() != 2) {
        throw ShapeError("apply_separated_f: need a 2D grid over (r, x5)");
    }
    const Axis& ra = f.axes()[0];
    const Axis& xa = f.axes()[1];
    if (ra.count < 3 || xa.count < 3) {
        throw ShapeError("apply_separated_f: need >= 3 points per axis");
    }
    require_positive_axis(ra, "apply_separated_f: r");
    require_positive_axis(xa, "apply_separated_f: x5");

    GridField out(f.axes());
    const std::size_t nx = xa.count;
    const double inv_hr2 = 1.0 / (ra.step * ra.step);
    const double inv_hx2 = 1.0 / (xa.step * xa.step);
    const double inv_2hr = 1.0 / (2.0 * ra.step);
    const double inv_2hx = 1.0 / (2.0 * xa.step);
    const double Lambda = params.Lambda;
    const double ll1 = static_cast<double>(ell) * (ell + 1.0);
    const double nsq = n * n;

    parallel_over(f.size(), [&](std::size_t lin) {
        const std::size_t i = lin / nx;
        const std::size_t j = lin % nx;
        if (i == 0 || i + 1 >= ra.count || j == 0 || j + 1 >= nx) {
            out[lin] = kNaN;
            return;
        }
        const double r = ra.coord(i);
        const double x5 = xa.coord(j);
        const double fc = f[lin];
        const double d2r = (f[lin + nx] - 2.0 * fc + f[lin - nx]) * inv_hr2;
        const double d1r = (f[lin + nx] - f[lin - nx]) * inv_2hr;
        const double d2x = (f[lin + 1] - 2.0 * fc + f[lin - 1]) * inv_hx2;
        const double d1x = (f[lin + 1] - f[lin - 1]) * inv_2hx;
        out[lin] = d2r + (2.0 / r) * d1r - d2x + (3.0 / x5) * d1x +
                   (Lambda / (x5 * x5)) * fc + (nsq - ll1 / (r * r)) * fc;
    });
    return out;
}

namespace {

struct ProductFactors {
    double sigma;
    double nu;
};

ProductFactors product_factors(const SeparatedModeSpec& spec,
                               const ModelParams& params) {
    if (spec.ell < 0 || std::abs(spec.m) > spec.ell) {
        throw DomainError("bessel_product_solution: need ell >= 0, |m| <= ell");
    }
    if (!(spec.n > 0.0)) {
        throw DomainError("bessel_product_solution: need n > 0");
    }
    const double sigma_sq = spec.lambda * spec.lambda - spec.n * spec.n;
    if (!(sigma_sq > 0.0)) {
        throw DomainError("bessel_product_solution: need lambda^2 > n^2");
    }
    const double nu_sq = 4.0 + params.Lambda;
    if (nu_sq < 0.0) {
        throw ImaginaryOrderError("bessel_product_solution: 4 + Lambda < 0");
    }
    return {std::sqrt(sigma_sq), std::sqrt(nu_sq)};
}

double radial_factor(double r, const SeparatedModeSpec& spec) {
    return spherical_bessel_j(spec.ell, spec.lambda * r);
}

double transverse_factor(double x5, double sigma, double nu) {
    return x5 * x5 * bessel_j(nu, sigma * x5);
}

} // namespace

double bessel_product_solution(double r, double x5, const SeparatedModeSpec& spec,
                               const ModelParams& params) {
    if (!(r > 0.0) || !(x5 > 0.0)) {
        throw DomainError("bessel_product_solution: need r > 0 and x5 > 0");
    }
    const ProductFactors pf = product_factors(spec, params);
    return spec.amplitude * radial_factor(r, spec) *
           transverse_factor(x5, pf.sigma, pf.nu);
}

GridField bessel_product_field(const Axis& r_axis, const Axis& x5_axis,
                               const SeparatedModeSpec& spec,
                               const ModelParams& params) {
    if (!(r_axis.min > 0.0) || !(x5_axis.min > 0.0)) {
        throw SingularAxisError("bessel_product_field: axes must be positive");
    }
    const ProductFactors pf = product_factors(spec, params);
    std::vector<double> rad(r_axis.count), trans(x5_axis.count);
    for (std::size_t i = 0; i < r_axis.count; ++i) {
        rad[i] = radial_factor(r_axis.coord(i), spec);
    }
    for (std::size_t j = 0; j < x5_axis.count; ++j) {
        trans[j] = transverse_factor(x5_axis.coord(j), pf.sigma, pf.nu);
    }
    GridField field({r_axis, x5_axis});
    const std::size_t nx = x5_axis.count;
    parallel_over(field.size(), [&](std::size_t lin) {
        field[lin] = spec.amplitude * rad[lin / nx] * trans[lin % nx];
    });
    return field;
}

} // namespace ckg
