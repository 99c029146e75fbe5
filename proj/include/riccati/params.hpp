#pragma once

#include <cmath>

#include "riccati/errors.hpp"
#include "riccati/types.hpp"

namespace riccati {

/// Default exclusion radius (in eta units) around poles and zeros.
inline constexpr double kDefaultExcludedRadius = 1e-3;

/// All constant parameters of the model family in one validated record.
///
/// kappa selects the trigonometric (+1) or hyperbolic (-1) branch, c is the
/// Riccati coefficient, lambda the Darboux family parameter, K the D2
/// mass/energy, K1/K2 the D3 masses, k the reduction-of-order constant and
/// A..D superposition constants for the closed-form D2 solutions.
struct ModelParams {
  int kappa = +1;        // +1 or -1
  double c = 1.0;        // nonzero, units 1/eta
  double phase_phi = 0.0;  // phase of the kappa=+1 seed solution
  double amp_w = 1.0;      // seed amplitude W_{+-1}, > 0
  double phase_d = 0.0;    // phase of the kappa=+1 fermionic solution
  double lambda = 1.0;     // family parameter, > 0
  double K = 0.0;          // D2 constant, >= 0
  double K1 = 0.0;         // D3 constant, >= 0
  double K2 = 0.0;         // D3 constant, >= 0
  double k = 0.0;          // reduction-of-order constant, arbitrary
  cplx A{1.0, 0.0};        // superposition constants (kappa=+1)
  cplx B{0.0, 0.0};
  cplx C{1.0, 0.0};        // superposition constants (kappa=-1)
  cplx D{0.0, 0.0};

  void validate() const {
    if (kappa != 1 && kappa != -1) throw DomainError("kappa must be +1 or -1");
    if (c == 0.0 || !std::isfinite(c)) throw DomainError("c must be nonzero and finite");
    if (!(amp_w > 0.0)) throw DomainError("amp_w must be positive");
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    if (K < 0.0 || K1 < 0.0 || K2 < 0.0) throw DomainError("K, K1, K2 must be nonnegative");
  }
};

}  // namespace riccati
