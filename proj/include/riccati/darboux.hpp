#pragma once

#include "riccati/params.hpp"
#include "riccati/types.hpp"

namespace riccati::darboux {

/// I_kappa(eta) = integral_0^eta w_seed^2, in closed form.
///   kappa=+1: W^2 [eta/2 + (sin(2(c eta + phi)) - sin(2 phi)) / (4c)]
///   kappa=-1: W^2 [sinh(2 c eta)/(4c) - eta/2]
/// Half-line problem: throws DomainError for eta < 0.
double integral_I(const ModelParams& p, double eta);

/// d/deta I_kappa = w_seed^2.
double integral_I_d1(const ModelParams& p, double eta);

/// General Riccati solution of the family,
///   u_g = u_p - (1/c) d/deta ln(I_kappa + lambda)
///       = u_p - (1/c) w_seed^2 / (I_kappa + lambda).
double u_general(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);
Deriv2 u_general_d(const ModelParams& p, double eta, double excl = kDefaultExcludedRadius);

/// One-parameter family of free terms c_kappa(eta; lambda), defined through
///   -kappa c_kappa = c u_g^2 + u_g'
///                 = -kappa c - 4 w w' / (c (I+lambda)) + 2 w^4 / (c (I+lambda)^2).
/// As lambda -> inf the correction terms vanish and c_kappa -> c
/// (equivalently kappa c_kappa -> kappa c).
double family_free_term(const ModelParams& p, double eta);

/// Parametric zero mode  w_g = w_seed / (I_kappa + lambda); solves
///   w_g'' + kappa c c_kappa(eta; lambda) w_g = 0.
double w_general(const ModelParams& p, double eta);
Deriv2 w_general_d(const ModelParams& p, double eta);

}  // namespace riccati::darboux
