#include "riccati/closed_form.hpp"

#include <cmath>

namespace riccati::closed_form {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Distance from eta to the nearest zero of cos(c eta + phase).
double dist_to_cos_zero(double c, double phase, double eta) {
  const double theta = c * eta + phase;
  const double k = std::round((theta - kPi / 2.0) / kPi);
  const double theta_pole = kPi / 2.0 + k * kPi;
  return std::abs(theta - theta_pole) / std::abs(c);
}

void guard_cos_zero(double c, double phase, double eta, double excl, const char* what) {
  if (dist_to_cos_zero(c, phase, eta) <= excl)
    throw SingularPoint(std::string(what) + ": eta within excluded radius of a pole");
}

void guard_origin(double eta, double excl, const char* what) {
  if (std::abs(eta) <= excl)
    throw SingularPoint(std::string(what) + ": eta within excluded radius of the origin pole");
}

}  // namespace

double u_particular(const ModelParams& p, double eta, double excl) {
  return u_particular_d(p, eta, excl).v;
}

Deriv2 u_particular_d(const ModelParams& p, double eta, double excl) {
  const double c = p.c;
  Deriv2 r;
  if (p.kappa == +1) {
    if (dist_to_cos_zero(c, 0.0, eta) <= excl) throw SingularPoint("u_particular: tan pole");
    const double t = std::tan(c * eta);
    const double s2 = 1.0 + t * t;  // sec^2
    r.v = -t;
    r.d1 = -c * s2;
    r.d2 = -2.0 * c * c * s2 * t;
  } else {
    guard_origin(eta, excl, "u_particular");
    const double ct = 1.0 / std::tanh(c * eta);
    const double csch2 = ct * ct - 1.0;
    r.v = ct;
    r.d1 = -c * csch2;
    r.d2 = 2.0 * c * c * ct * csch2;
  }
  return r;
}

double w_seed(const ModelParams& p, double eta) { return w_seed_d(p, eta).v; }

Deriv2 w_seed_d(const ModelParams& p, double eta) {
  const double c = p.c;
  const double w = p.amp_w;
  Deriv2 r;
  if (p.kappa == +1) {
    const double th = c * eta + p.phase_phi;
    r.v = w * std::cos(th);
    r.d1 = -w * c * std::sin(th);
    r.d2 = -c * c * r.v;
  } else {
    r.v = w * std::sinh(c * eta);
    r.d1 = w * c * std::cosh(c * eta);
    r.d2 = c * c * r.v;
  }
  return r;
}

double fermionic_free_term(const ModelParams& p, double eta, double excl) {
  return fermionic_free_term_d(p, eta, excl).v;
}

Deriv2 fermionic_free_term_d(const ModelParams& p, double eta, double excl) {
  const double c = p.c;
  Deriv2 r;
  if (p.kappa == +1) {
    if (dist_to_cos_zero(c, 0.0, eta) <= excl) throw SingularPoint("fermionic_free_term: tan pole");
    const double t = std::tan(c * eta);
    const double s2 = 1.0 + t * t;
    r.v = c * (1.0 + 2.0 * t * t);
    r.d1 = 4.0 * c * c * t * s2;
    r.d2 = 4.0 * c * c * c * s2 * (s2 + 2.0 * t * t);
  } else {
    guard_origin(eta, excl, "fermionic_free_term");
    const double ct = 1.0 / std::tanh(c * eta);
    const double csch2 = ct * ct - 1.0;
    r.v = c * (-1.0 + 2.0 * ct * ct);
    r.d1 = -4.0 * c * c * ct * csch2;
    r.d2 = 4.0 * c * c * c * csch2 * (csch2 + 2.0 * ct * ct);
  }
  return r;
}

double w_fermionic(const ModelParams& p, double eta, double excl) {
  return w_fermionic_d(p, eta, excl).v;
}

Deriv2 w_fermionic_d(const ModelParams& p, double eta, double excl) {
  const double c = p.c;
  Deriv2 r;
  if (p.kappa == +1) {
    guard_cos_zero(c, p.phase_d, eta, excl, "w_fermionic");
    const double th = c * eta + p.phase_d;
    const double sec = 1.0 / std::cos(th);
    const double tan = std::tan(th);
    r.v = c * sec;
    r.d1 = c * c * sec * tan;
    r.d2 = c * c * c * sec * (2.0 * sec * sec - 1.0);
  } else {
    guard_origin(eta, excl, "w_fermionic");
    const double csch = 1.0 / std::sinh(c * eta);
    const double coth = 1.0 / std::tanh(c * eta);
    r.v = c * csch;
    r.d1 = -c * c * csch * coth;
    r.d2 = c * c * c * csch * (1.0 + 2.0 * csch * csch);
  }
  return r;
}

ResidualReport riccati_residual(const FunctionTrace& u, const ModelParams& p, double tol) {
  if (!u.d1) throw MissingDerivative("riccati_residual: trace carries no first derivative");
  const double c = p.c;
  const double kc = p.kappa * c;
  std::vector<double> res(u.grid.size());
  for (std::size_t i = 0; i < u.grid.size(); ++i) {
    const cplx ui = u.values[i];
    res[i] = std::abs((*u.d1)[i] + c * ui * ui + kc);
  }
  return make_report("riccati_residual", res, u.grid.pts, u.grid.spacing, tol);
}

FactorizationReport factorization_check(const ModelParams& p, const Grid& grid, double tol) {
  const double c = p.c;
  std::vector<double> res_b(grid.size()), res_f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double eta = grid[i];
    const Deriv2 ws = w_seed_d(p, eta);
    res_b[i] = std::abs(ws.d2 + p.kappa * c * c * ws.v);
    const Deriv2 wf = w_fermionic_d(p, eta, grid.excluded_radius);
    const double cf = fermionic_free_term(p, eta, grid.excluded_radius);
    res_f[i] = std::abs(wf.d2 - c * cf * wf.v);
  }
  FactorizationReport rep;
  rep.bosonic = make_report("seed_equation", res_b, grid.pts, grid.spacing, tol);
  rep.fermionic = make_report("partner_equation", res_f, grid.pts, grid.spacing, tol);
  rep.pass = rep.bosonic.pass && rep.fermionic.pass;
  return rep;
}

std::vector<double> pole_locations(const ModelParams& p, double start, double end) {
  std::vector<double> out;
  if (p.kappa == -1) {
    if (start <= 0.0 && end >= 0.0) out.push_back(0.0);
    return out;
  }
  const double c = p.c;
  for (double phase : {0.0, p.phase_d, p.phase_phi}) {
    // zeros of cos(c eta + phase): eta = (pi/2 - phase + k pi)/c
    const double lo = std::min(c * start, c * end) + phase;
    const double hi = std::max(c * start, c * end) + phase;
    const long k0 = static_cast<long>(std::floor((lo - kPi / 2.0) / kPi)) - 1;
    const long k1 = static_cast<long>(std::ceil((hi - kPi / 2.0) / kPi)) + 1;
    for (long k = k0; k <= k1; ++k) {
      const double eta = (kPi / 2.0 + k * kPi - phase) / c;
      if (eta >= start && eta <= end) out.push_back(eta);
    }
  }
  return out;
}

}  // namespace riccati::closed_form
