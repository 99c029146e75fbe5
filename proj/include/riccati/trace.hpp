#pragma once

#include <optional>
#include <vector>

#include "riccati/grid.hpp"
#include "riccati/types.hpp"

namespace riccati {

/// Sampled complex-valued function on a grid, optionally with derivatives.
struct FunctionTrace {
  Grid grid;
  std::vector<cplx> values;
  std::optional<std::vector<cplx>> d1;
  std::optional<std::vector<cplx>> d2;

  void validate() const;
};

/// Two-component spinor sampled on a grid.
struct SpinorTrace {
  Grid grid;
  std::vector<cplx> w1;
  std::vector<cplx> w2;
  std::optional<std::vector<cplx>> d1_w1;
  std::optional<std::vector<cplx>> d1_w2;

  void validate() const;
};

}  // namespace riccati
