#include <algorithm>
#include <cmath>
#include <limits>

#include "riccati/grid.hpp"
#include "riccati/report.hpp"
#include "riccati/trace.hpp"

namespace riccati {

Grid Grid::uniform(double start, double end, int n, double excluded_radius,
                   std::span<const double> singularities) {
  if (!(start < end)) throw DomainError("grid: start must be < end");
  if (n < 2) throw DomainError("grid: need at least 2 points");
  if (!(excluded_radius > 0.0)) throw DomainError("grid: excluded_radius must be positive");

  Grid g;
  g.start = start;
  g.end = end;
  g.n_requested = n;
  g.excluded_radius = excluded_radius;
  g.spacing = (end - start) / static_cast<double>(n - 1);
  g.pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Inclusive endpoints; the last point is pinned exactly.
    const double eta = (i == n - 1) ? end : start + g.spacing * i;
    bool excluded = false;
    for (double s : singularities) {
      if (std::abs(eta - s) <= excluded_radius) {
        excluded = true;
        break;
      }
    }
    if (!excluded) g.pts.push_back(eta);
  }
  if (g.pts.size() < 2) throw DomainError("grid: fewer than 2 points remain after exclusion");
  return g;
}

void FunctionTrace::validate() const {
  const std::size_t n = grid.size();
  if (values.size() != n) throw DomainError("trace: values length != grid length");
  auto finite = [](const std::vector<cplx>& v) {
    return std::all_of(v.begin(), v.end(), [](cplx z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  };
  if (!finite(values)) throw NonFinite("trace: non-finite value");
  if (d1 && (d1->size() != n || !finite(*d1))) throw DomainError("trace: bad d1");
  if (d2 && (d2->size() != n || !finite(*d2))) throw DomainError("trace: bad d2");
}

void SpinorTrace::validate() const {
  const std::size_t n = grid.size();
  if (w1.size() != n || w2.size() != n) throw DomainError("spinor: component length != grid length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(w1[i].real()) || !std::isfinite(w1[i].imag()) ||
        !std::isfinite(w2[i].real()) || !std::isfinite(w2[i].imag()))
      throw NonFinite("spinor: non-finite component");
  }
}

ResidualReport make_report(std::string name, const std::vector<double>& abs_residuals,
                           const std::vector<double>& etas, double spacing, double tolerance) {
  ResidualReport r;
  r.name = std::move(name);
  r.n_points = abs_residuals.size();
  r.tolerance = tolerance;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < abs_residuals.size(); ++i) {
    const double a = abs_residuals[i];
    sum_sq += a * a;
    if (a > r.sup_norm) {
      r.sup_norm = a;
      r.worst_eta = etas[i];
    }
  }
  r.l2_norm = std::sqrt(sum_sq * spacing);
  r.pass = r.sup_norm <= tolerance;
  return r;
}

}  // namespace riccati
