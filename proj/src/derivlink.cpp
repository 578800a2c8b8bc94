#include "ckg/derivlink.hpp"

#include <cmath>

namespace ckg {

LinkCoefficients link_coefficients(const ConformalPoint& q) {
    const double xsq = q.x_sq();
    const double x5sq = q.x5 * q.x5;
    LinkCoefficients c;
    c.a_plus = 0.5 * (1.0 - xsq + x5sq);
    c.a_minus = 0.5 * (1.0 + xsq - x5sq);
    c.b_plus = 0.5 * (1.0 + xsq + x5sq);
    c.b_minus = 0.5 * (1.0 - xsq - x5sq);
    return c;
}

ProjectiveGradient project_gradient(const ConformalJet& jet,
                                    const ConformalPoint& q,
                                    const ModelParams& params) {
    if (std::fabs(q.x5) < 1e-300) {
        throw ChartSingularityError("project_gradient: x5 = 0");
    }
    const LinkCoefficients c = link_coefficients(q);
    const double N = params.N;
    double xdphi = 0.0;
    for (int i = 0; i < 4; ++i) xdphi += q.xi[i] * jet.d_i[i];

    ProjectiveGradient g;
    g.d0 = N * (c.a_plus / q.x5) * jet.phi + c.b_minus * jet.d5 - q.x5 * xdphi;
    g.d5 = -N * (c.a_minus / q.x5) * jet.phi - c.b_plus * jet.d5 - q.x5 * xdphi;
    for (int i = 0; i < 4; ++i) {
        g.d_i[i] = N * (q.xi[i] / q.x5) * jet.phi + q.xi[i] * jet.d5 +
                   q.x5 * jet.d_i[i];
    }
    return g;
}

double euler_residual(const std::function<double(const ProjectivePoint&)>& field,
                      const ProjectivePoint& p, double degree, double h) {
    if (!(h > 0.0)) throw DomainError("euler_residual: h must be > 0");
    const std::array<double, 6> coords{p.x0,    p.xi[0], p.xi[1],
                                       p.xi[2], p.xi[3], p.x5};
    auto shifted = [&p](int a, double delta) {
        ProjectivePoint s = p;
        if (a == 0) s.x0 += delta;
        else if (a == 5) s.x5 += delta;
        else s.xi[a - 1] += delta;
        return s;
    };
    double sum = 0.0;
    for (int a = 0; a < 6; ++a) {
        const double d = (field(shifted(a, h)) - field(shifted(a, -h))) / (2.0 * h);
        sum += coords[static_cast<std::size_t>(a)] * d;
    }
    return sum - degree * field(p);
}

SpecialProjectiveGradient special_projective_gradient(
    const ReducedJet& jet, const std::array<double, 4>& x, double degree) {
    double xsq = 0.0;
    double xdphi = 0.0;
    for (int i = 0; i < 4; ++i) {
        xsq += x[i] * x[i];
        xdphi += x[i] * jet.d_i[i];
    }
    const double A = std::sqrt(1.0 + xsq);
    SpecialProjectiveGradient g;
    for (int i = 0; i < 4; ++i) {
        g.d_i[i] = A * jet.d_i[i] + (degree / A) * x[i] * jet.phi;
    }
    g.d0 = -A * xdphi + (degree / A) * jet.phi;
    return g;
}

} // namespace ckg
