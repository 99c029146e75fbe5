#pragma once

#include <functional>
#include <string>

#include "riccati/types.hpp"

namespace riccati {

/// Second-order scalar ODE  w'' + P(eta) w' + Q(eta) w = 0  given by
/// evaluable coefficient functions.
struct LinearODE {
  std::function<cplx(double)> P;
  std::function<cplx(double)> Q;
  std::string description;
};

}  // namespace riccati
