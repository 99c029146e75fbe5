#pragma once

#include "riccati/types.hpp"

namespace riccati::special {

/// Treatment of arguments on the branch cut [1, inf).
enum class CutSide {
  forbid,  // throw CutAmbiguity (default)
  above,   // boundary value from Im z > 0 (z + i0)
  below,   // boundary value from Im z < 0 (z - i0)
};

struct Hyp2F1Args {
  cplx a;
  cplx b;
  cplx c;
  cplx z;
};

/// Value and first two z-derivatives of 2F1.
struct Hyp2F1Result {
  cplx value;
  cplx d1;
  cplx d2;
};

/// Gauss hypergeometric function 2F1(a, b; c; z) on the principal branch
/// (cut along [1, inf)), with analytic continuation outside the series disk.
///
/// Strategy: Maclaurin series for |z| <= 0.8; Pfaff map z/(z-1) when it
/// shrinks the modulus; 1-z and 1/z connection formulas when the relevant
/// parameter combinations stay away from integers; everything else (the
/// exceptional neighbourhoods of exp(+-i pi/3), unit-circle arguments with
/// integer c-a-b, near-cut targets) is reached by a Taylor shift - the
/// hypergeometric ODE's coefficient recurrence carries (F, F') along a short
/// path of anchors starting inside the series disk.
///
/// Unit-circle arguments (|z| = 1, z != 1) are evaluated only when
/// Re(c-a-b) > 0; otherwise NoConvergence is thrown. Arguments on the cut
/// throw CutAmbiguity unless a side is selected.
Hyp2F1Result hyp2f1_full(const Hyp2F1Args& args, CutSide side = CutSide::forbid);
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, CutSide side = CutSide::forbid);

namespace detail {

// Individual strategies, exposed for the equivalence tests.
Hyp2F1Result eval_series(cplx a, cplx b, cplx c, cplx z);
Hyp2F1Result eval_pfaff(cplx a, cplx b, cplx c, cplx z);
Hyp2F1Result eval_one_minus_z(cplx a, cplx b, cplx c, cplx z, CutSide side);
Hyp2F1Result eval_inv_z(cplx a, cplx b, cplx c, cplx z, CutSide side);
Hyp2F1Result eval_continuation(cplx a, cplx b, cplx c, cplx z, CutSide side);

}  // namespace detail

}  // namespace riccati::special
