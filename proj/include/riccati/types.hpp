#pragma once

#include <complex>

namespace riccati {

using cplx = std::complex<double>;

/// Value together with analytic first and second derivatives.
struct Deriv2 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

struct CDeriv2 {
  cplx v{0.0, 0.0};
  cplx d1{0.0, 0.0};
  cplx d2{0.0, 0.0};
};

}  // namespace riccati
