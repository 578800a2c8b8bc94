#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ckg/errors.hpp"

namespace ckg {

// Second Poschl-Teller potential
//   V(xi) = mu(mu-1)/sinh^2(xi) - ell(ell+1)/cosh^2(xi).
struct PTPotentialParams {
    double mu = 1.0;  // canonical branch mu >= 1/2
    int ell = 0;
};

// Bound-state energies in ascending order with E_k = -(p_k + 1/2)^2,
// p_k on the p >= -1/2 branch.
struct Spectrum {
    double mu = 0.0;
    int ell = 0;
    std::vector<double> energies;
    std::vector<double> p_values;
    std::string method;
    double error_estimate = 0.0;       // Richardson estimate from the FD oracle
    double method_disagreement = 0.0;  // max |E_shooting - E_matrix|

    bool empty() const { return energies.empty(); }
    std::string to_json() const;
};

enum class SolveMethod { shooting, matrix };

struct SolverConfig {
    double xi_max = 20.0;
    std::size_t grid_n = 4000;
    SolveMethod method = SolveMethod::shooting;
    double tol = 1e-6;
};

double pt_potential(double xi, const PTPotentialParams& params);

// FD value of the left-hand side of
//   -F'' + [V(xi) + (p+1/2)^2] F = 0.
double schrodinger_residual(const std::function<double(double)>& F, double xi,
                            const PTPotentialParams& params, double p, double h);

// Left-shot bound eigenfunction, sampled on the integration nodes and
// evaluable anywhere via piecewise quintic Hermite interpolation (the
// second derivative at the nodes comes from the equation itself).
class Eigenfunction {
public:
    double operator()(double xi) const;
    double energy() const { return energy_; }
    const PTPotentialParams& params() const { return params_; }

private:
    friend class ShootingSolver;
    PTPotentialParams params_{};
    double energy_ = 0.0;
    std::vector<double> xs_, fs_, dfs_;
    double xi0_ = 0.0;
    double series_c2_ = 0.0, series_c4_ = 0.0, series_amp_ = 0.0;
};

struct ShootingResult {
    Spectrum spectrum;
    std::vector<Eigenfunction> states;
};

// Independent oracle: tridiagonal FD discretization on (0, xi_max] with
// Dirichlet ends, negative eigenvalues extracted by Sturm-sequence
// bisection on two grids and Richardson-extrapolated.  Also cross-checks
// the count against the node count of the zero-energy shooting solution.
Spectrum fd_hamiltonian_eigen(const PTPotentialParams& params,
                              const SolverConfig& cfg);

// Eigenvector of the FD Hamiltonian nearest the given energy, by inverse
// iteration; returned on the grid xi_j = j h, j = 1..grid_n.
std::vector<double> fd_eigenvector(const PTPotentialParams& params,
                                   const SolverConfig& cfg, double energy);

// Shooting solver alone (node-count bisection on the energy).
ShootingResult shooting_solve(const PTPotentialParams& params,
                              const SolverConfig& cfg);

// Runs both methods, verifies they agree to cfg.tol (throws
// CrossValidationError beyond 10 tol) and returns the spectrum of the
// configured method.  No attractive well => empty spectrum, not an error.
Spectrum solve_spectrum(const PTPotentialParams& params, const SolverConfig& cfg);

} // namespace ckg
