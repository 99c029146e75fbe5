#pragma once

#include <vector>

#include "riccati/grid.hpp"
#include "riccati/params.hpp"
#include "riccati/report.hpp"
#include "riccati/trace.hpp"
#include "riccati/types.hpp"

namespace riccati::closed_form {

/// Particular solution of u' + c u^2 + kappa c = 0:
///   kappa=+1: -tan(c eta),  kappa=-1: coth(c eta).
/// Throws SingularPoint within `excl` of a pole.
double u_particular(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);
Deriv2 u_particular_d(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);

/// Seed solution of w'' + kappa c^2 w = 0:
///   kappa=+1: W cos(c eta + phi),  kappa=-1: W sinh(c eta).
double w_seed(const ModelParams& p, double eta);
Deriv2 w_seed_d(const ModelParams& p, double eta);

/// Supersymmetric partner free term c_{kappa,f} = -u_p' + c u_p^2:
///   kappa=+1: c (1 + 2 tan^2(c eta)),  kappa=-1: c (-1 + 2 coth^2(c eta)).
double fermionic_free_term(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);
Deriv2 fermionic_free_term_d(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);

/// Partner (fermionic) solution:
///   kappa=+1: c / cos(c eta + d),  kappa=-1: c / sinh(c eta).
/// The partner-equation identity w'' = c c_{kappa,f} w holds for d = 0;
/// a nonzero d shifts the free term's argument by the same phase.
double w_fermionic(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);
Deriv2 w_fermionic_d(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);

/// Pointwise |u' + c u^2 + kappa c| over a trace carrying d1.
/// Throws MissingDerivative if the trace has no first derivative.
ResidualReport riccati_residual(const FunctionTrace& u, const ModelParams& p, double tol = 1e-12);

/// Verifies, with analytic second derivatives, that
///  (a) w_seed solves the seed equation  w'' + kappa c^2 w = 0, and
///  (b) w_fermionic solves the partner equation  w'' - c c_{kappa,f} w = 0.
FactorizationReport factorization_check(const ModelParams& p, const Grid& grid, double tol = 1e-10);

/// Singularities of u_particular / w_fermionic / w_seed zeros in [start, end]
/// (union over the phase choices carried by `p`), for grid exclusion.
std::vector<double> pole_locations(const ModelParams& p, double start, double end);

}  // namespace riccati::closed_form
