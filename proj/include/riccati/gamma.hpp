#pragma once

#include "riccati/types.hpp"

namespace riccati::special {

/// Gamma function for complex argument (Lanczos approximation, g = 7,
/// 9 coefficients; reflection formula for Re z < 0.5). Relative accuracy
/// ~1e-13 or better on the moderate strip used by the connection formulas.
/// Throws PoleParameter at nonpositive integers.
cplx complex_gamma(cplx z);

/// 1 / Gamma(z); entire, returns 0 at the poles of Gamma.
cplx recip_gamma(cplx z);

}  // namespace riccati::special
