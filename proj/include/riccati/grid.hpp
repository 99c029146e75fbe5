#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "riccati/errors.hpp"
#include "riccati/params.hpp"

namespace riccati {

/// Uniform 1-D evaluation grid with singularity exclusion.
///
/// Points are a subset of the uniform lattice start + i*spacing; lattice
/// points closer than excluded_radius to a declared singularity are dropped
/// rather than reported as an error.
struct Grid {
  double start = 0.0;
  double end = 1.0;
  int n_requested = 2;
  double spacing = 1.0;
  double excluded_radius = kDefaultExcludedRadius;
  std::vector<double> pts;

  static Grid uniform(double start, double end, int n,
                      double excluded_radius = kDefaultExcludedRadius,
                      std::span<const double> singularities = {});

  std::size_t size() const { return pts.size(); }
  double operator[](std::size_t i) const { return pts[i]; }
};

}  // namespace riccati
