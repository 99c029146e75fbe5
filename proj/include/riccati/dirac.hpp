#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "riccati/grid.hpp"
#include "riccati/linear_ode.hpp"
#include "riccati/numverify.hpp"
#include "riccati/params.hpp"
#include "riccati/report.hpp"
#include "riccati/trace.hpp"

namespace riccati::dirac {

/// Variant of the D3 second-order zeroth-order bracket. The two printed
/// displays disagree on whether the K2 u_p term carries a factor i;
/// `i_on_both` is the variant consistent with the coupled first-order
/// system (the verification suite reports this).
enum class BracketVariant { as_printed, i_on_both };

/// Variable of integration in the reduction-of-order formula.
enum class Eq24Integration { eta, y_jacobian };

/// Branch of ln(-1) used in the kappa=-1 closed-form prefactors.
enum class LogMinusOne { plus_i_pi, minus_i_pi };

// ---------------------------------------------------------------- D1
/// Zero-mass spinor of the decoupled system, unit constants:
/// kappa=+1 -> (1/cos(c eta), cos(c eta)); kappa=-1 -> (1/sinh, sinh).
SpinorTrace solve_D1(const ModelParams& p, const Grid& grid);

/// Residuals of the first-order pair: |w1' + c u_p w1| and |w2' - c u_p w2|.
std::pair<ResidualReport, ResidualReport> d1_first_order_residual(const ModelParams& p,
                                                                  const SpinorTrace& tr,
                                                                  double tol = 1e-11);

// ---------------------------------------------------------------- D2
/// The decoupled second-order equations (P == 0): first the fermionic
/// component's ODE, then the bosonic one.
std::pair<LinearODE, LinearODE> d2_free_terms(const ModelParams& p);

/// Closed-form solution basis of the bosonic equation. `neg`/`pos` carry the
/// characteristic exponents -mu/+mu at y = 0; the superposition constants
/// map as  kappa=+1: w2 = A*neg + B*pos,  kappa=-1: w2 = C*pos + D*neg.
struct W2Basis {
  std::function<CDeriv2(double)> neg;
  std::function<CDeriv2(double)> pos;
};
W2Basis w2_basis(const ModelParams& p, LogMinusOne lnm1 = LogMinusOne::plus_i_pi);

CDeriv2 w2_closed_form_d(const ModelParams& p, double eta,
                         LogMinusOne lnm1 = LogMinusOne::plus_i_pi);
cplx w2_closed_form(const ModelParams& p, double eta, LogMinusOne lnm1 = LogMinusOne::plus_i_pi);

/// Coefficients (A, B) with  A*neg + B*pos  matching value/derivative at eta0.
std::pair<cplx, cplx> match_superposition(const W2Basis& basis, double eta0, cplx value,
                                          cplx deriv);

/// Reduction of order w1 = (1 + k * integral[w2^2]) / w2, accumulated along
/// the grid by adaptive quadrature. The construction produces solutions of
/// the fermionic equation when 1/w2 is itself a fermionic solution (K = 0).
FunctionTrace w1_from_w2(const ModelParams& p, const std::function<CDeriv2(double)>& w2,
                         const Grid& grid, Eq24Integration mode = Eq24Integration::eta);

// ---------------------------------------------------------------- D3
/// Second-order forms: w_i'' + P w_i' + Q_i w_i = 0 with
/// P = c (u_p - u_g) - i (K1 - K2); returns (i=1, i=2).
std::pair<LinearODE, LinearODE> d3_system(const ModelParams& p,
                                          BracketVariant variant = BracketVariant::as_printed);

/// Free term of the gauged standard form z_i'' + Q_i z_i = 0.
cplx q_free_term(const ModelParams& p, int component, double eta,
                 BracketVariant variant = BracketVariant::as_printed);

/// Gauge factor exp(i eta dK / 2) / sqrt(I_kappa + lambda) with derivatives.
CDeriv2 gauge_factor_d(const ModelParams& p, double eta);

/// w_i = z_i * factor, and its inverse; round trip is the identity.
FunctionTrace gauge_to_w(const ModelParams& p, const FunctionTrace& z);
FunctionTrace gauge_to_z(const ModelParams& p, const FunctionTrace& w);

struct SpinorInit {
  cplx w1, dw1, w2, dw2;
};

/// Initial data at eta0 seeded from the closed forms (w_fermionic, w_general)
/// with derivatives compatible with the coupled first-order system.
SpinorInit anchor_init(const ModelParams& p, double eta0);

/// Integrates the gauged equations z_i'' + Q_i z_i = 0 and assembles the
/// spinor through the inverse gauge transform. Trace carries d1.
SpinorTrace solve_D3_numeric(const ModelParams& p, const Grid& grid, const SpinorInit& init,
                             BracketVariant variant = BracketVariant::as_printed,
                             numverify::IntegratorOptions opts = {});

/// The coupled first-order systems, integrated directly.
/// d2: potentials (u_p, u_p) with K1 = K2 = K;  d3: (u_p, u_g) with K1, K2.
enum class CoupledKind { d2, d3 };
SpinorTrace solve_coupled(const ModelParams& p, CoupledKind kind, const Grid& grid,
                          const SpinorInit& init, numverify::IntegratorOptions opts = {});

/// Second derivatives of a coupled-system solution, obtained by
/// differentiating the first-order system (no numeric differentiation).
std::pair<std::vector<cplx>, std::vector<cplx>> coupled_second_derivative(const ModelParams& p,
                                                                          CoupledKind kind,
                                                                          const SpinorTrace& tr);

/// Residuals of a spinor trace under the coupled first-order system.
std::pair<ResidualReport, ResidualReport> coupled_residual(const ModelParams& p, CoupledKind kind,
                                                           const SpinorTrace& tr,
                                                           double tol = 1e-6);

}  // namespace riccati::dirac
