#include "riccati/darboux.hpp"

#include <cmath>

#include "riccati/closed_form.hpp"

namespace riccati::darboux {

namespace {

void require_half_line(double eta, const char* what) {
  if (eta < 0.0) throw DomainError(std::string(what) + ": eta must be >= 0 (half-line problem)");
}

// w_seed^2 / (I_kappa + lambda) and its first two derivatives.
struct LogDeriv {
  double g, dg, d2g;
};

LogDeriv log_derivative_term(const ModelParams& p, double eta) {
  const Deriv2 w = closed_form::w_seed_d(p, eta);
  const double denom = integral_I(p, eta) + p.lambda;
  const double g = w.v * w.v / denom;
  const double dg = 2.0 * w.v * w.d1 / denom - g * g;
  // d2g = (2 w'^2 + 2 w w'')/denom - 6 w^3 w'/denom^2 + 2 w^6/denom^3
  const double w2 = w.v * w.v;
  const double d2g = (2.0 * w.d1 * w.d1 + 2.0 * w.v * w.d2) / denom -
                     6.0 * w2 * w.v * w.d1 / (denom * denom) +
                     2.0 * w2 * w2 * w2 / (denom * denom * denom);
  return {g, dg, d2g};
}

}  // namespace

double integral_I(const ModelParams& p, double eta) {
  require_half_line(eta, "integral_I");
  const double c = p.c;
  const double w2 = p.amp_w * p.amp_w;
  if (p.kappa == +1) {
    const double phi = p.phase_phi;
    return w2 * (eta / 2.0 + (std::sin(2.0 * (c * eta + phi)) - std::sin(2.0 * phi)) / (4.0 * c));
  }
  return w2 * (std::sinh(2.0 * c * eta) / (4.0 * c) - eta / 2.0);
}

double integral_I_d1(const ModelParams& p, double eta) {
  require_half_line(eta, "integral_I");
  const double w = closed_form::w_seed(p, eta);
  return w * w;
}

double u_general(const ModelParams& p, double eta, double excl) {
  return u_general_d(p, eta, excl).v;
}

Deriv2 u_general_d(const ModelParams& p, double eta, double excl) {
  require_half_line(eta, "u_general");
  const Deriv2 up = closed_form::u_particular_d(p, eta, excl);
  const LogDeriv g = log_derivative_term(p, eta);
  Deriv2 r;
  r.v = up.v - g.g / p.c;
  r.d1 = up.d1 - g.dg / p.c;
  r.d2 = up.d2 - g.d2g / p.c;
  return r;
}

double family_free_term(const ModelParams& p, double eta) {
  require_half_line(eta, "family_free_term");
  const double c = p.c;
  const Deriv2 w = closed_form::w_seed_d(p, eta);
  const double denom = integral_I(p, eta) + p.lambda;
  const double w2 = w.v * w.v;
  // -kappa c_kappa = -kappa c - 4 w w'/(c(I+lambda)) + 2 w^4/(c(I+lambda)^2)
  return c + (p.kappa / c) * (4.0 * w.v * w.d1 / denom - 2.0 * w2 * w2 / (denom * denom));
}

double w_general(const ModelParams& p, double eta) { return w_general_d(p, eta).v; }

Deriv2 w_general_d(const ModelParams& p, double eta) {
  require_half_line(eta, "w_general");
  const Deriv2 w = closed_form::w_seed_d(p, eta);
  const double denom = integral_I(p, eta) + p.lambda;
  const double w2 = w.v * w.v;
  Deriv2 r;
  r.v = w.v / denom;
  r.d1 = w.d1 / denom - w2 * w.v / (denom * denom);
  r.d2 = w.d2 / denom - 4.0 * w2 * w.d1 / (denom * denom) +
         2.0 * w2 * w2 * w.v / (denom * denom * denom);
  return r;
}

}  // namespace riccati::darboux
