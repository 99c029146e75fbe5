#include "riccati/gamma.hpp"

#include <cmath>

#include "riccati/errors.hpp"

namespace riccati::special {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtTwoPi = 2.50662827463100050242;

// Godfrey's coefficients for g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z, double tol = 1e-13) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = z.real();
  return r <= tol && std::abs(r - std::round(r)) <= tol;
}

}  // namespace

cplx complex_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleParameter("gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  }
  const cplx zm = z - 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
  const cplx t = zm + 7.5;
  return kSqrtTwoPi * std::pow(t, zm + 0.5) * std::exp(-t) * x;
}

cplx recip_gamma(cplx z) {
  if (is_nonpositive_integer(z)) return cplx(0.0);
  return 1.0 / complex_gamma(z);
}

}  // namespace riccati::special
