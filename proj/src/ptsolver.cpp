#include "ckg/ptsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace ckg {

namespace {

void validate(const PTPotentialParams& p) {
    if (!(p.mu >= 0.5)) {
        throw DomainError("ptsolver: mu must be >= 1/2 (canonical root branch)");
    }
    if (p.ell < 0) throw DomainError("ptsolver: ell must be >= 0");
}

void validate(const SolverConfig& cfg) {
    if (!(cfg.xi_max > 1.0)) throw DomainError("SolverConfig: xi_max must be > 1");
    if (cfg.grid_n < 100) throw DomainError("SolverConfig: grid_n must be >= 100");
    if (!(cfg.tol > 0.0)) throw DomainError("SolverConfig: tol must be > 0");
}

double well_strength(const PTPotentialParams& p) {
    return static_cast<double>(p.ell) * (p.ell + 1.0) - p.mu * (p.mu - 1.0);
}

// Frobenius data at the origin: F = xi^mu (1 + c2 xi^2 + c4 xi^4 + ...).
struct SeriesStart {
    double mu, c2, c4;
    double value(double xi) const {
        const double x2 = xi * xi;
        return std::pow(xi, mu) * (1.0 + c2 * x2 + c4 * x2 * x2);
    }
    double deriv(double xi) const {
        const double x2 = xi * xi;
        return std::pow(xi, mu - 1.0) *
               (mu + (mu + 2.0) * c2 * x2 + (mu + 4.0) * c4 * x2 * x2);
    }
};

SeriesStart frobenius_start(const PTPotentialParams& p, double energy) {
    const double g = p.mu * (p.mu - 1.0);
    const double L = static_cast<double>(p.ell) * (p.ell + 1.0);
    // V(xi) - E = g/xi^2 + a0 + a2 xi^2 + O(xi^4)
    const double a0 = -g / 3.0 - L - energy;
    const double a2 = g / 15.0 + L;
    const double c2 = a0 / (4.0 * p.mu + 2.0);
    const double c4 = (a0 * c2 + a2) / (8.0 * p.mu + 12.0);
    return {p.mu, c2, c4};
}

constexpr double kXi0 = 0.02;      // hand-off from the series to the integrator
constexpr double kHBase = 1e-3;    // integrator base step

double graded_step(double xi) {
    return std::min(kHBase, std::max(1e-4, 0.01 * xi));
}

struct Trace {
    std::vector<double> xs, fs, dfs;
};

// RK4 on F'' = (V - E) F from xi0 to xi_end.  Returns the number of sign
// changes of F.  Magnitudes are rescaled on the fly; sign bookkeeping is
// unaffected.
long integrate(const PTPotentialParams& p, double energy, double xi_end,
               double f0, double df0, Trace* trace) {
    auto coeff = [&](double xi) { return pt_potential(xi, p) - energy; };
    double xi = kXi0;
    double f = f0, df = df0;
    long nodes = 0;
    if (trace) {
        trace->xs.push_back(xi);
        trace->fs.push_back(f);
        trace->dfs.push_back(df);
    }
    while (xi < xi_end - 1e-12) {
        const double h = std::min(graded_step(xi), xi_end - xi);
        const double k1f = df;
        const double k1d = coeff(xi) * f;
        const double cm = coeff(xi + 0.5 * h);
        const double k2f = df + 0.5 * h * k1d;
        const double k2d = cm * (f + 0.5 * h * k1f);
        const double k3f = df + 0.5 * h * k2d;
        const double k3d = cm * (f + 0.5 * h * k2f);
        const double ce = coeff(xi + h);
        const double k4f = df + h * k3d;
        const double k4d = ce * (f + h * k3f);
        const double fn = f + h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        const double dfn = df + h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        if ((f > 0.0 && fn < 0.0) || (f < 0.0 && fn > 0.0)) ++nodes;
        f = fn;
        df = dfn;
        xi += h;
        if (std::fabs(f) > 1e250 || std::fabs(df) > 1e250) {
            f *= 1e-250;
            df *= 1e-250;
            if (trace) {
                for (auto& v : trace->fs) v *= 1e-250;
                for (auto& v : trace->dfs) v *= 1e-250;
            }
        }
        if (trace) {
            trace->xs.push_back(xi);
            trace->fs.push_back(f);
            trace->dfs.push_back(df);
        }
    }
    return nodes;
}

long node_count(const PTPotentialParams& p, double energy, double xi_max) {
    const SeriesStart s = frobenius_start(p, energy);
    return integrate(p, energy, xi_max, s.value(kXi0), s.deriv(kXi0), nullptr);
}

double potential_floor(const PTPotentialParams& p, double xi_max) {
    double vmin = 0.0;
    for (int i = 1; i <= 400; ++i) {
        const double xi = xi_max * i / 400.0;
        vmin = std::min(vmin, pt_potential(xi, p));
    }
    return vmin;
}

double outer_turning_point(const PTPotentialParams& p, double energy,
                           double xi_max) {
    for (int i = 400; i >= 1; --i) {
        const double xi = xi_max * i / 400.0;
        if (pt_potential(xi, p) < energy) return xi;
    }
    return 1.0;
}

// ---------------------------------------------------------------------
// FD matrix oracle: Sturm-sequence bisection on the symmetric tridiagonal
// H = tridiag(-1/h^2, 2/h^2 + V_j, -1/h^2), Dirichlet at both ends.
// ---------------------------------------------------------------------

std::vector<double> fd_diagonal(const PTPotentialParams& p, double xi_max,
                                std::size_t n) {
    const double h = xi_max / static_cast<double>(n + 1);
    std::vector<double> d(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double xi = h * static_cast<double>(j + 1);
        d[j] = 2.0 / (h * h) + pt_potential(xi, p);
    }
    return d;
}

// Number of eigenvalues below lambda (LDL^T pivot sign count).
long sturm_count(const std::vector<double>& diag, double off_sq, double lambda) {
    long count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        q = diag[i] - lambda - (i > 0 ? off_sq / q : 0.0);
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> negative_eigenvalues(const std::vector<double>& diag,
                                         double off_sq, double floor_guess) {
    const long total = sturm_count(diag, off_sq, 0.0);
    std::vector<double> eigs;
    eigs.reserve(static_cast<std::size_t>(total));
    for (long k = 0; k < total; ++k) {
        double lo = floor_guess;
        double hi = 0.0;
        while (hi - lo > 1e-13 * std::max(1.0, std::fabs(lo))) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(diag, off_sq, mid) >= k + 1) hi = mid;
            else lo = mid;
        }
        eigs.push_back(0.5 * (lo + hi));
    }
    return eigs;
}

std::vector<double> matrix_negatives(const PTPotentialParams& p, double xi_max,
                                     std::size_t n, double vfloor) {
    const double h = xi_max / static_cast<double>(n + 1);
    const std::vector<double> d = fd_diagonal(p, xi_max, n);
    return negative_eigenvalues(d, 1.0 / (h * h * h * h), vfloor - 1.0);
}

double p_branch(double energy) { return std::sqrt(-energy) - 0.5; }

} // namespace

double pt_potential(double xi, const PTPotentialParams& params) {
    validate(params);
    if (!(xi > 0.0)) throw DomainError("pt_potential: xi must be > 0");
    const double sh = std::sinh(xi);
    const double ch = std::cosh(xi);
    return params.mu * (params.mu - 1.0) / (sh * sh) -
           static_cast<double>(params.ell) * (params.ell + 1.0) / (ch * ch);
}

double schrodinger_residual(const std::function<double(double)>& F, double xi,
                            const PTPotentialParams& params, double p, double h) {
    if (!(h > 0.0)) throw DomainError("schrodinger_residual: h must be > 0");
    if (!(xi >= 3.0 * h)) throw DomainError("schrodinger_residual: need xi >= 3h");
    const double d2 = (F(xi + h) - 2.0 * F(xi) + F(xi - h)) / (h * h);
    const double pp = (p + 0.5) * (p + 0.5);
    return -d2 + (pt_potential(xi, params) + pp) * F(xi);
}

double Eigenfunction::operator()(double xi) const {
    if (!(xi > 0.0)) throw DomainError("Eigenfunction: xi must be > 0");
    if (xi < xi0_) {
        const double x2 = xi * xi;
        return series_amp_ * std::pow(xi, params_.mu) *
               (1.0 + series_c2_ * x2 + series_c4_ * x2 * x2);
    }
    if (xi >= xs_.back()) {
        // exponential continuation beyond the stored range
        const double kappa = std::sqrt(-energy_);
        return fs_.back() * std::exp(-kappa * (xi - xs_.back()));
    }
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), xi);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    const double a = xs_[i], b = xs_[i + 1];
    const double w = b - a;
    const double t = (xi - a) / w;
    const double f0 = fs_[i], f1 = fs_[i + 1];
    const double d0 = dfs_[i] * w, d1 = dfs_[i + 1] * w;
    const double s0 = (pt_potential(a, params_) - energy_) * f0 * w * w;
    const double s1 = (pt_potential(b, params_) - energy_) * f1 * w * w;
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double h00 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
    const double h10 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
    const double h20 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
    const double h01 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    const double h11 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
    const double h21 = 0.5 * t3 - t4 + 0.5 * t5;
    return f0 * h00 + d0 * h10 + s0 * h20 + f1 * h01 + d1 * h11 + s1 * h21;
}

Spectrum fd_hamiltonian_eigen(const PTPotentialParams& params,
                              const SolverConfig& cfg) {
    validate(params);
    validate(cfg);
    const double vfloor = potential_floor(params, cfg.xi_max);
    const std::size_t n1 = cfg.grid_n;
    const std::size_t n2 = 2 * cfg.grid_n + 1;  // exactly halves the step
    const std::vector<double> e1 = matrix_negatives(params, cfg.xi_max, n1, vfloor);
    const std::vector<double> e2 = matrix_negatives(params, cfg.xi_max, n2, vfloor);
    if (e1.size() != e2.size()) {
        throw CrossValidationError(
            "fd_hamiltonian_eigen: eigenvalue count changed under grid refinement");
    }
    // Sturm oscillation cross-check: the zero-energy shooting solution must
    // change sign once per bound state.
    const long nodes = node_count(params, 0.0, cfg.xi_max);
    if (nodes != static_cast<long>(e2.size())) {
        std::ostringstream msg;
        msg << "fd_hamiltonian_eigen: Sturm node count " << nodes
            << " != negative eigenvalue count " << e2.size();
        throw CrossValidationError(msg.str());
    }

    Spectrum s;
    s.mu = params.mu;
    s.ell = params.ell;
    s.method = "matrix";
    for (std::size_t k = 0; k < e2.size(); ++k) {
        const double extrap = (4.0 * e2[k] - e1[k]) / 3.0;
        s.energies.push_back(extrap);
        s.p_values.push_back(p_branch(extrap));
        s.error_estimate =
            std::max(s.error_estimate, std::fabs(e2[k] - e1[k]) / 3.0);
    }
    return s;
}

std::vector<double> fd_eigenvector(const PTPotentialParams& params,
                                   const SolverConfig& cfg, double energy) {
    validate(params);
    validate(cfg);
    const std::size_t n = cfg.grid_n;
    const double h = cfg.xi_max / static_cast<double>(n + 1);
    const std::vector<double> diag = fd_diagonal(params, cfg.xi_max, n);
    const double off = -1.0 / (h * h);

    // Inverse iteration with a tridiagonal LU solve (partial pivoting;
    // the shifted matrix is near-singular on purpose).
    std::vector<double> v(n, 1.0), w(n);
    for (int iter = 0; iter < 4; ++iter) {
        std::vector<double> d(n), du(n, off), du2(n, 0.0), rhs = v;
        std::vector<double> dl(n, off);
        for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - energy;
        du[n - 1] = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::fabs(dl[i]) > std::fabs(d[i])) {
                // swap rows i and i+1, eliminate
                const double m = d[i] / dl[i];
                const double next_du = (i + 2 < n) ? du[i + 1] : 0.0;
                const double new_d = dl[i];
                const double new_du = d[i + 1];
                d[i + 1] = du[i] - m * d[i + 1];
                du[i + 1] = -m * next_du;
                d[i] = new_d;
                du[i] = new_du;
                du2[i] = next_du;
                std::swap(rhs[i], rhs[i + 1]);
                rhs[i + 1] -= m * rhs[i];
            } else {
                const double piv = d[i] == 0.0 ? 1e-300 : d[i];
                const double m = dl[i] / piv;
                d[i + 1] -= m * du[i];
                rhs[i + 1] -= m * rhs[i];
            }
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double x = rhs[ii];
            if (ii + 1 < n) x -= du[ii] * w[ii + 1];
            if (ii + 2 < n) x -= du2[ii] * w[ii + 2];
            const double piv = d[ii] == 0.0 ? 1e-300 : d[ii];
            w[ii] = x / piv;
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    // fix overall sign: positive near the origin
    if (v[std::min<std::size_t>(4, n - 1)] < 0.0) {
        for (double& x : v) x = -x;
    }
    return v;
}

namespace {

class ShootingSolverImpl {
public:
    ShootingSolverImpl(const PTPotentialParams& p, const SolverConfig& cfg)
        : p_(p), cfg_(cfg) {}

    ShootingResult run() const {
        ShootingResult result;
        result.spectrum.mu = p_.mu;
        result.spectrum.ell = p_.ell;
        result.spectrum.method = "shooting";
        const long total = node_count(p_, 0.0, cfg_.xi_max);
        if (total == 0) return result;
        const double floor = potential_floor(p_, cfg_.xi_max) - 1.0;
        for (long k = 0; k < total; ++k) {
            const double e = bisect_energy(k, floor);
            result.spectrum.energies.push_back(e);
            result.spectrum.p_values.push_back(p_branch(e));
            result.states.push_back(build_state(e));
        }
        return result;
    }

private:
    double bisect_energy(long k, double floor) const {
        double lo = floor;
        double hi = 0.0;
        while (hi - lo > 1e-12 * std::max(1.0, std::fabs(lo))) {
            const double mid = 0.5 * (lo + hi);
            if (node_count(p_, mid, cfg_.xi_max) >= k + 1) hi = mid;
            else lo = mid;
        }
        return 0.5 * (lo + hi);
    }

    Eigenfunction build_state(double energy) const {
        const SeriesStart s = frobenius_start(p_, energy);
        Eigenfunction ef;
        ef.params_ = p_;
        ef.energy_ = energy;
        ef.xi0_ = kXi0;
        ef.series_c2_ = s.c2;
        ef.series_c4_ = s.c4;
        Trace trace;
        integrate(p_, energy, cfg_.xi_max, s.value(kXi0), s.deriv(kXi0), &trace);
        // Normalize by the peak over the classically relevant range; the
        // far tail of a left-shot solution picks up the growing mode and
        // must not set the scale.
        const double guard = outer_turning_point(p_, energy, cfg_.xi_max) + 2.0;
        double peak = 0.0;
        for (std::size_t i = 0; i < trace.xs.size(); ++i) {
            if (trace.xs[i] > guard) break;
            peak = std::max(peak, std::fabs(trace.fs[i]));
        }
        if (peak == 0.0) peak = 1.0;
        for (auto& v : trace.fs) v /= peak;
        for (auto& v : trace.dfs) v /= peak;
        ef.xs_ = std::move(trace.xs);
        ef.fs_ = std::move(trace.fs);
        ef.dfs_ = std::move(trace.dfs);
        // series amplitude continuous with the stored start value
        ef.series_amp_ = ef.fs_.front() / std::pow(kXi0, p_.mu) /
                         (1.0 + s.c2 * kXi0 * kXi0 + s.c4 * std::pow(kXi0, 4));
        return ef;
    }

    PTPotentialParams p_;
    SolverConfig cfg_;
};

} // namespace

ShootingResult shooting_solve(const PTPotentialParams& params,
                              const SolverConfig& cfg) {
    validate(params);
    validate(cfg);
    return ShootingSolverImpl(params, cfg).run();
}

Spectrum solve_spectrum(const PTPotentialParams& params, const SolverConfig& cfg) {
    validate(params);
    validate(cfg);
    Spectrum out;
    out.mu = params.mu;
    out.ell = params.ell;
    out.method = cfg.method == SolveMethod::shooting ? "shooting" : "matrix";
    if (!(well_strength(params) > 0.0)) {
        return out;  // no attractive well, nothing to bind
    }
    const Spectrum sh = shooting_solve(params, cfg).spectrum;
    const Spectrum mx = fd_hamiltonian_eigen(params, cfg);
    if (sh.energies.size() != mx.energies.size()) {
        std::ostringstream msg;
        msg << "solve_spectrum: shooting found " << sh.energies.size()
            << " states, matrix found " << mx.energies.size();
        throw CrossValidationError(msg.str());
    }
    double disagreement = 0.0;
    for (std::size_t k = 0; k < sh.energies.size(); ++k) {
        disagreement =
            std::max(disagreement, std::fabs(sh.energies[k] - mx.energies[k]));
    }
    if (disagreement > 10.0 * cfg.tol) {
        std::ostringstream msg;
        msg << "solve_spectrum: methods disagree by " << disagreement
            << " (> 10 * tol = " << 10.0 * cfg.tol << ")";
        throw CrossValidationError(msg.str());
    }
    const Spectrum& chosen = cfg.method == SolveMethod::shooting ? sh : mx;
    out.energies = chosen.energies;
    out.p_values = chosen.p_values;
    out.error_estimate = mx.error_estimate;
    out.method_disagreement = disagreement;
    return out;
}

std::string Spectrum::to_json() const {
    nlohmann::ordered_json j;
    j["mu"] = mu;
    j["ell"] = ell;
    j["energies"] = energies;
    j["p_values"] = p_values;
    j["method"] = method;
    j["error_estimate"] = error_estimate;
    return j.dump(2);
}

} // namespace ckg
