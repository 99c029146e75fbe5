#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace riccati {

/// Sup/L2 residual of a candidate solution, with pass/fail verdict.
/// l2_norm is the discrete norm sqrt(sum |r_i|^2 * spacing).
struct ResidualReport {
  std::string name;
  double sup_norm = 0.0;
  double l2_norm = 0.0;
  double worst_eta = 0.0;
  std::size_t n_points = 0;
  double tolerance = 0.0;
  bool pass = false;
};

ResidualReport make_report(std::string name, const std::vector<double>& abs_residuals,
                           const std::vector<double>& etas, double spacing, double tolerance);

/// Pair of reports produced by the factorization check: the seed (bosonic)
/// equation and its supersymmetric partner (fermionic) equation.
struct FactorizationReport {
  ResidualReport bosonic;
  ResidualReport fermionic;
  bool pass = false;
};

}  // namespace riccati
