#include "ckg/coords.hpp"

#include <algorithm>
#include <cmath>

namespace ckg {

ModelParams ModelParams::make(double N, double msq, double r, double r0) {
    if (!(r > 0.0) || !(r0 > 0.0)) {
        throw DomainError("ModelParams: r and r0 must be positive");
    }
    if (!(msq >= 0.0)) {
        throw DomainError("ModelParams: msq must be >= 0");
    }
    ModelParams p;
    p.r = r;
    p.r0 = r0;
    p.N = N;
    p.msq = msq;
    p.Lambda = N * (N + 5.0) + msq;
    // mu(mu-1) = Lambda + 15/4  =>  mu = 1/2 ± sqrt(Lambda + 4)
    const double rad = p.Lambda + 4.0;
    if (rad < 0.0) {
        throw ComplexRootError("ModelParams: mu(mu-1) = Lambda + 15/4 has no real root");
    }
    p.mu = 0.5 + std::sqrt(rad);
    return p;
}

ModelParams ModelParams::from_lambda(double Lambda, double r, double r0) {
    const double disc = 25.0 + 4.0 * Lambda;
    if (disc < 0.0) {
        throw DomainError("ModelParams: no real N with N(N+5) = Lambda");
    }
    return make(0.5 * (-5.0 + std::sqrt(disc)), 0.0, r, r0);
}

ConformalPoint to_conformal(const ProjectivePoint& p, const ModelParams& params) {
    const double s = p.chart_denominator();
    const double scale = std::max({1.0, std::fabs(p.x0), std::fabs(p.x5),
                                   std::sqrt(p.spatial_sq())});
    if (std::fabs(s) < 1e-12 * scale) {
        throw ChartSingularityError("to_conformal: x0 + x5 = 0");
    }
    const double qf = p.spatial_sq() + p.x0 * p.x0 - p.x5 * p.x5;
    if (!(qf > 0.0)) {
        throw DomainError("to_conformal: point not on the real cone (x^2 + x0^2 - x5^2 <= 0)");
    }
    ConformalPoint q;
    for (int i = 0; i < 4; ++i) q.xi[i] = params.r0 * p.xi[i] / s;
    q.x5 = params.r0 * std::sqrt(qf) / s;
    return q;
}

ProjectivePoint to_projective(const ConformalPoint& q, const ModelParams& params) {
    const double scale = std::max(1.0, std::sqrt(q.x_sq()));
    if (std::fabs(q.x5) < 1e-12 * scale) {
        throw ChartSingularityError("to_projective: x5 = 0");
    }
    // x0+x5 = r0 r/x5 together with the chart condition fix the section.
    const double diff = (q.x5 * q.x5 - q.x_sq()) / params.r0;
    const double pref = params.r / (2.0 * q.x5);
    ProjectivePoint p;
    p.x0 = pref * (params.r0 + diff);
    p.x5 = pref * (params.r0 - diff);
    for (int i = 0; i < 4; ++i) p.xi[i] = params.r * q.xi[i] / q.x5;
    return p;
}

double quadric_residual(const ProjectivePoint& p, const ModelParams& params) {
    return p.spatial_sq() + p.x0 * p.x0 - p.x5 * p.x5 - params.r * params.r;
}

} // namespace ckg
