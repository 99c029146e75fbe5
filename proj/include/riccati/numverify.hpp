#pragma once

#include <array>
#include <functional>
#include <utility>

#include "riccati/grid.hpp"
#include "riccati/linear_ode.hpp"
#include "riccati/report.hpp"
#include "riccati/trace.hpp"
#include "riccati/types.hpp"

namespace riccati::numverify {

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
};

/// Integrates w'' + P w' + Q w = 0 with an embedded Dormand-Prince 5(4)
/// pair, landing exactly on every grid node. The returned trace carries
/// values and first derivatives.
FunctionTrace integrate_ode(const LinearODE& ode, cplx y0, cplx dy0, const Grid& grid,
                            IntegratorOptions opts = {});

/// Same tableau at a fixed step over [a, b]; returns (w, w') at b.
/// Used by the order-of-convergence checks.
std::pair<cplx, cplx> integrate_ode_fixed(const LinearODE& ode, cplx y0, cplx dy0, double a,
                                          double b, int n_steps);

/// First-order linear 2-system y' = A(eta) y, A row-major [a11 a12 a21 a22].
using Matrix2Fn = std::function<std::array<cplx, 4>(double)>;

/// Integrates the coupled pair on the grid; traces carry values and d1.
std::pair<FunctionTrace, FunctionTrace> integrate_linear_system2(const Matrix2Fn& A, cplx y1_0,
                                                                 cplx y2_0, const Grid& grid,
                                                                 IntegratorOptions opts = {});

/// Adaptive Gauss-Kronrod (G7, K15) bisection quadrature; absolute error
/// target tol. Throws MaxDepth past 60 bisection levels.
cplx quadrature(const std::function<cplx(double)>& f, double a, double b, double tol = 1e-11);

/// Central differences, O(h^2): returns (d1, d2) at eta.
std::pair<cplx, cplx> finite_diff(const std::function<cplx(double)>& f, double eta, double h);

/// Sup/L2 residual of w (with analytic derivatives) under the ODE.
ResidualReport residual(const LinearODE& ode, const std::function<CDeriv2(double)>& w,
                        const Grid& grid, double tol, const std::string& name = "residual");

/// Relative Wronskian drift max|W(eta) - W(eta0)| / |W(eta0)| of two traces
/// carrying first derivatives on a shared grid. Throws DegeneratePair when
/// W(eta0) vanishes relative to the component scales.
double wronskian_drift(const FunctionTrace& w, const FunctionTrace& v);

}  // namespace riccati::numverify
