#include "riccati/dirac.hpp"

#include <cmath>

#include "riccati/closed_form.hpp"
#include "riccati/darboux.hpp"
#include "riccati/hyp2f1.hpp"

namespace riccati::dirac {

namespace cf = riccati::closed_form;
namespace db = riccati::darboux;
namespace sp = riccati::special;

// ---------------------------------------------------------------- D1

SpinorTrace solve_D1(const ModelParams& p, const Grid& grid) {
  SpinorTrace tr;
  tr.grid = grid;
  const std::size_t n = grid.size();
  tr.w1.resize(n);
  tr.w2.resize(n);
  tr.d1_w1 = std::vector<cplx>(n);
  tr.d1_w2 = std::vector<cplx>(n);
  const double c = p.c;
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = grid[i];
    if (p.kappa == +1) {
      ModelParams q = p;
      q.phase_d = 0.0;
      q.amp_w = 1.0;
      const Deriv2 wf = cf::w_fermionic_d(q, eta, grid.excluded_radius);  // c * sec
      tr.w1[i] = wf.v / c;
      (*tr.d1_w1)[i] = wf.d1 / c;
      const double co = std::cos(c * eta);
      tr.w2[i] = co;
      (*tr.d1_w2)[i] = -c * std::sin(c * eta);
    } else {
      ModelParams q = p;
      q.amp_w = 1.0;
      const Deriv2 wf = cf::w_fermionic_d(q, eta, grid.excluded_radius);  // c * csch
      tr.w1[i] = wf.v / c;
      (*tr.d1_w1)[i] = wf.d1 / c;
      tr.w2[i] = std::sinh(c * eta);
      (*tr.d1_w2)[i] = c * std::cosh(c * eta);
    }
  }
  return tr;
}

std::pair<ResidualReport, ResidualReport> d1_first_order_residual(const ModelParams& p,
                                                                  const SpinorTrace& tr,
                                                                  double tol) {
  if (!tr.d1_w1 || !tr.d1_w2) throw MissingDerivative("d1_first_order_residual: need d1");
  const std::size_t n = tr.grid.size();
  std::vector<double> r1(n), r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double up = cf::u_particular(p, tr.grid[i], tr.grid.excluded_radius);
    r1[i] = std::abs((*tr.d1_w1)[i] + p.c * up * tr.w1[i]);
    r2[i] = std::abs((*tr.d1_w2)[i] - p.c * up * tr.w2[i]);
  }
  return {make_report("d1_component1", r1, tr.grid.pts, tr.grid.spacing, tol),
          make_report("d1_component2", r2, tr.grid.pts, tr.grid.spacing, tol)};
}

// ---------------------------------------------------------------- D2

std::pair<LinearODE, LinearODE> d2_free_terms(const ModelParams& p) {
  const double c = p.c;
  const double K = p.K;
  const int kappa = p.kappa;
  auto zero = [](double) { return cplx(0.0); };
  LinearODE fermionic;
  fermionic.P = zero;
  fermionic.description = "fermionic component, w'' - [..] w = 0";
  LinearODE bosonic;
  bosonic.P = zero;
  bosonic.description = "bosonic component, w'' + [..] w = 0";
  if (kappa == +1) {
    fermionic.Q = [c, K](double eta) {
      const double t = std::tan(c * eta);
      return -cplx(c * c * (1.0 + 2.0 * t * t), 2.0 * c * K * t);
    };
    bosonic.Q = [c, K](double eta) {
      const double t = std::tan(c * eta);
      return cplx(c * c, -2.0 * c * K * t);
    };
  } else {
    fermionic.Q = [c, K](double eta) {
      const double ct = 1.0 / std::tanh(c * eta);
      return -cplx(c * c * (-1.0 + 2.0 * ct * ct), -2.0 * c * K * ct);
    };
    bosonic.Q = [c, K](double eta) {
      const double ct = 1.0 / std::tanh(c * eta);
      return cplx(-c * c, 2.0 * c * K * ct);
    };
  }
  return {fermionic, bosonic};
}

namespace {

struct BranchSpec {
  cplx mu;     // characteristic exponent at y = 0
  cplx alpha;  // 2F1 parameters
  cplx beta;
  cplx gamma;
  cplx constant;  // overall constant prefactor
};

bool branch_is_degenerate(const BranchSpec& s) {
  auto nonpos_int = [](cplx w) {
    return w.real() <= 1e-12 && std::abs(w.imag()) <= 1e-12 &&
           std::abs(w.real() - std::round(w.real())) <= 1e-12;
  };
  if (!nonpos_int(s.gamma)) return false;
  const long pole = std::lround(-s.gamma.real());
  long nt = -1;
  if (nonpos_int(s.alpha)) nt = std::lround(-s.alpha.real());
  if (nonpos_int(s.beta)) {
    const long nb = std::lround(-s.beta.real());
    nt = (nt < 0) ? nb : std::min(nt, nb);
  }
  return nt < 0 || nt > pole;
}

// Exponents and parameters of the two solution branches. For kappa=+1,
// mu^2 = 1 + 2K/c and nu^2 = 1 - 2K/c with argument x = -y^2, y = e^{ic eta};
// for kappa=-1, mu = -i r, nu = -i s with r = (-1 - 2iK/c)^{1/2},
// s = (-1 + 2iK/c)^{1/2} and argument x = y^2, y = e^{c eta}.
std::pair<BranchSpec, BranchSpec> make_branches(const ModelParams& p, LogMinusOne lnm1) {
  const double c = p.c;
  const double ratio = 2.0 * p.K / c;
  cplx mu, nu;
  cplx const_pos(1.0), const_neg(1.0);
  if (p.kappa == +1) {
    mu = std::sqrt(cplx(1.0 + ratio, 0.0));
    nu = std::sqrt(cplx(1.0 - ratio, 0.0));
  } else {
    double im = -ratio;
    if (im == 0.0) im = 0.0;  // normalise -0.0
    mu = cplx(0.0, -1.0) * std::sqrt(cplx(-1.0, im));
    double ip = ratio;
    if (ip == 0.0) ip = 0.0;
    nu = cplx(0.0, -1.0) * std::sqrt(cplx(-1.0, ip));
    const cplx log_m1 = (lnm1 == LogMinusOne::plus_i_pi) ? cplx(0.0, 3.14159265358979323846)
                                                         : cplx(0.0, -3.14159265358979323846);
    const_pos = std::exp(log_m1 * mu / 2.0);   // (-1)^{-i r / 2}
    const_neg = std::exp(-log_m1 * mu / 2.0);  // (-1)^{+i r / 2}
  }
  BranchSpec pos{mu, (mu + nu) / 2.0, (mu - nu) / 2.0, 1.0 + mu, const_pos};
  BranchSpec neg{-mu, (-mu + nu) / 2.0, (-mu - nu) / 2.0, 1.0 - mu, const_neg};
  if (branch_is_degenerate(pos) || branch_is_degenerate(neg))
    throw BranchConflict("w2_closed_form: exponent family degenerates (1 +- mu nonpositive integer)");
  return {neg, pos};
}

CDeriv2 eval_branch(const ModelParams& p, const BranchSpec& s, double eta) {
  const double c = p.c;
  cplx lfac, x;
  sp::CutSide side = sp::CutSide::forbid;
  if (p.kappa == +1) {
    lfac = cplx(0.0, c);               // d/deta ln y
    x = -std::exp(cplx(0.0, 2.0 * c * eta));
  } else {
    lfac = cplx(c, 0.0);
    x = std::exp(cplx(2.0 * c * eta, 0.0));
    side = sp::CutSide::above;  // boundary value x + i0 on [1, inf)
  }
  sp::Hyp2F1Result F;
  try {
    F = sp::hyp2f1_full({s.alpha, s.beta, s.gamma, x}, side);
  } catch (const PoleParameter&) {
    throw BranchConflict("w2_closed_form: hypergeometric parameter pole");
  }
  const cplx pref = s.constant * std::exp(s.mu * lfac * eta);
  const cplx two_x_f1 = 2.0 * x * F.d1;
  CDeriv2 r;
  r.v = pref * F.value;
  r.d1 = pref * lfac * (s.mu * F.value + two_x_f1);
  r.d2 = pref * lfac * lfac *
         (s.mu * s.mu * F.value + 4.0 * (s.mu + 1.0) * x * F.d1 + 4.0 * x * x * F.d2);
  return r;
}

}  // namespace

W2Basis w2_basis(const ModelParams& p, LogMinusOne lnm1) {
  const auto [neg, pos] = make_branches(p, lnm1);
  W2Basis basis;
  basis.neg = [p, neg](double eta) { return eval_branch(p, neg, eta); };
  basis.pos = [p, pos](double eta) { return eval_branch(p, pos, eta); };
  return basis;
}

CDeriv2 w2_closed_form_d(const ModelParams& p, double eta, LogMinusOne lnm1) {
  const auto [neg, pos] = make_branches(p, lnm1);
  const cplx ca = (p.kappa == +1) ? p.A : p.D;
  const cplx cb = (p.kappa == +1) ? p.B : p.C;
  CDeriv2 r;
  if (ca != cplx(0.0)) {
    const CDeriv2 n = eval_branch(p, neg, eta);
    r.v += ca * n.v;
    r.d1 += ca * n.d1;
    r.d2 += ca * n.d2;
  }
  if (cb != cplx(0.0)) {
    const CDeriv2 q = eval_branch(p, pos, eta);
    r.v += cb * q.v;
    r.d1 += cb * q.d1;
    r.d2 += cb * q.d2;
  }
  return r;
}

cplx w2_closed_form(const ModelParams& p, double eta, LogMinusOne lnm1) {
  return w2_closed_form_d(p, eta, lnm1).v;
}

std::pair<cplx, cplx> match_superposition(const W2Basis& basis, double eta0, cplx value,
                                          cplx deriv) {
  const CDeriv2 n = basis.neg(eta0);
  const CDeriv2 q = basis.pos(eta0);
  const cplx det = n.v * q.d1 - q.v * n.d1;
  const double scale = std::abs(n.v) * std::abs(q.d1) + std::abs(q.v) * std::abs(n.d1);
  if (std::abs(det) <= 1e-12 * scale)
    throw DegeneratePair("match_superposition: basis Wronskian vanishes at eta0");
  const cplx a = (value * q.d1 - q.v * deriv) / det;
  const cplx b = (n.v * deriv - value * n.d1) / det;
  return {a, b};
}

FunctionTrace w1_from_w2(const ModelParams& p, const std::function<CDeriv2(double)>& w2,
                         const Grid& grid, Eq24Integration mode) {
  const std::size_t n = grid.size();
  std::vector<CDeriv2> w(n);
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = w2(grid[i]);
    max_abs = std::max(max_abs, std::abs(w[i].v));
  }

  const double c = p.c;
  const bool trig = (p.kappa == +1);
  // y-variable Jacobian dz/deta and its derivative.
  auto jac = [c, trig](double eta) -> cplx {
    if (trig) return cplx(0.0, c) * std::exp(cplx(0.0, c * eta));
    return c * std::exp(cplx(c * eta, 0.0));
  };
  auto jac_d1 = [c, trig](double eta) -> cplx {
    if (trig) return -c * c * std::exp(cplx(0.0, c * eta));
    return c * c * std::exp(cplx(c * eta, 0.0));
  };
  auto integrand = [&](double eta) -> cplx {
    const cplx v = w2(eta).v;
    const cplx sq = v * v;
    return (mode == Eq24Integration::eta) ? sq : sq * jac(eta);
  };

  FunctionTrace tr;
  tr.grid = grid;
  tr.values.resize(n);
  tr.d1 = std::vector<cplx>(n);
  tr.d2 = std::vector<cplx>(n);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) acc += numverify::quadrature(integrand, grid[i - 1], grid[i], 1e-12);
    // |w2| <= excl * |w2'| puts eta within the exclusion radius of a simple zero
    if (std::abs(w[i].v) <= grid.excluded_radius * std::abs(w[i].d1) ||
        std::abs(w[i].v) <= 1e-14 * max_abs)
      throw ZeroDivision("w1_from_w2: w2 vanishes on the grid");
    const cplx g = 1.0 + p.k * acc;
    const cplx jm = (mode == Eq24Integration::eta) ? cplx(1.0) : jac(grid[i]);
    const cplx jm1 = (mode == Eq24Integration::eta) ? cplx(0.0) : jac_d1(grid[i]);
    const cplx dg = p.k * w[i].v * w[i].v * jm;
    const cplx d2g = p.k * (2.0 * w[i].v * w[i].d1 * jm + w[i].v * w[i].v * jm1);
    const cplx v = g / w[i].v;
    const cplx dv = dg / w[i].v - g * w[i].d1 / (w[i].v * w[i].v);
    const cplx d2v = d2g / w[i].v - 2.0 * dg * w[i].d1 / (w[i].v * w[i].v) -
                     g * w[i].d2 / (w[i].v * w[i].v) +
                     2.0 * g * w[i].d1 * w[i].d1 / (w[i].v * w[i].v * w[i].v);
    tr.values[i] = v;
    (*tr.d1)[i] = dv;
    (*tr.d2)[i] = d2v;
  }
  return tr;
}

// ---------------------------------------------------------------- D3

namespace {

// Zeroth-order bracket of the second-order form, component i in {1, 2}.
cplx d3_bracket(const ModelParams& p, int component, double eta, BracketVariant variant,
                double excl) {
  const double c = p.c;
  const Deriv2 up = cf::u_particular_d(p, eta, excl);
  const Deriv2 ug = db::u_general_d(p, eta, excl);
  const double dui = (component == 1) ? up.d1 : -ug.d1;
  const cplx ik1 = cplx(0.0, p.K1);
  const cplx k2 = (variant == BracketVariant::i_on_both) ? cplx(0.0, p.K2) : cplx(p.K2, 0.0);
  return c * (dui + ik1 * ug.v + k2 * up.v) - c * c * up.v * ug.v;
}

}  // namespace

std::pair<LinearODE, LinearODE> d3_system(const ModelParams& p, BracketVariant variant) {
  const double excl = kDefaultExcludedRadius;
  auto pcoef = [p, excl](double eta) -> cplx {
    const double up = cf::u_particular(p, eta, excl);
    const double ug = db::u_general(p, eta, excl);
    return cplx(p.c * (up - ug), -(p.K1 - p.K2));
  };
  LinearODE one, two;
  one.P = pcoef;
  two.P = pcoef;
  one.Q = [p, variant, excl](double eta) { return d3_bracket(p, 1, eta, variant, excl); };
  two.Q = [p, variant, excl](double eta) { return d3_bracket(p, 2, eta, variant, excl); };
  one.description = "D3 second-order form, component 1";
  two.description = "D3 second-order form, component 2";
  return {one, two};
}

cplx q_free_term(const ModelParams& p, int component, double eta, BracketVariant variant) {
  if (component != 1 && component != 2) throw DomainError("q_free_term: component must be 1 or 2");
  const double excl = kDefaultExcludedRadius;
  const double c = p.c;
  const Deriv2 up = cf::u_particular_d(p, eta, excl);
  const Deriv2 ug = db::u_general_d(p, eta, excl);
  const cplx bracket = d3_bracket(p, component, eta, variant, excl);
  const cplx pc = cplx(c * (up.v - ug.v), -(p.K1 - p.K2));
  return bracket - 0.5 * c * (up.d1 - ug.d1) - 0.25 * pc * pc;
}

CDeriv2 gauge_factor_d(const ModelParams& p, double eta) {
  const double dk = p.K1 - p.K2;
  const double denom = db::integral_I(p, eta) + p.lambda;
  const Deriv2 w = cf::w_seed_d(p, eta);
  const double g = w.v * w.v / denom;
  const double dg = 2.0 * w.v * w.d1 / denom - g * g;
  const cplx f = std::exp(cplx(0.0, eta * dk / 2.0)) / std::sqrt(denom);
  const cplx l1 = cplx(-0.5 * g, 0.5 * dk);  // f'/f
  CDeriv2 r;
  r.v = f;
  r.d1 = f * l1;
  r.d2 = f * (l1 * l1 - 0.5 * dg);
  return r;
}

namespace {

FunctionTrace apply_gauge(const ModelParams& p, const FunctionTrace& in, bool to_w) {
  FunctionTrace out;
  out.grid = in.grid;
  const std::size_t n = in.grid.size();
  out.values.resize(n);
  if (in.d1) out.d1 = std::vector<cplx>(n);
  if (in.d2) out.d2 = std::vector<cplx>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CDeriv2 f = gauge_factor_d(p, in.grid[i]);
    if (to_w) {
      out.values[i] = in.values[i] * f.v;
      if (in.d1) (*out.d1)[i] = (*in.d1)[i] * f.v + in.values[i] * f.d1;
      if (in.d2)
        (*out.d2)[i] = (*in.d2)[i] * f.v + 2.0 * (*in.d1)[i] * f.d1 + in.values[i] * f.d2;
    } else {
      const cplx z = in.values[i] / f.v;
      out.values[i] = z;
      cplx dz(0.0);
      if (in.d1) {
        dz = ((*in.d1)[i] - z * f.d1) / f.v;
        (*out.d1)[i] = dz;
      }
      if (in.d2) (*out.d2)[i] = ((*in.d2)[i] - 2.0 * dz * f.d1 - z * f.d2) / f.v;
    }
  }
  return out;
}

}  // namespace

FunctionTrace gauge_to_w(const ModelParams& p, const FunctionTrace& z) {
  return apply_gauge(p, z, true);
}

FunctionTrace gauge_to_z(const ModelParams& p, const FunctionTrace& w) {
  return apply_gauge(p, w, false);
}

SpinorInit anchor_init(const ModelParams& p, double eta0) {
  const double c = p.c;
  const cplx w1 = cf::w_fermionic(p, eta0);
  const cplx w2 = db::w_general(p, eta0);
  const double up = cf::u_particular(p, eta0);
  const double ug = db::u_general(p, eta0);
  SpinorInit init;
  init.w1 = w1;
  init.w2 = w2;
  init.dw1 = (cplx(-c * up, p.K1)) * w1 - cplx(0.0, p.K2) * w2;
  init.dw2 = cplx(0.0, p.K1) * w1 + (cplx(c * ug, -p.K2)) * w2;
  return init;
}

SpinorTrace solve_D3_numeric(const ModelParams& p, const Grid& grid, const SpinorInit& init,
                             BracketVariant variant, numverify::IntegratorOptions opts) {
  const double eta0 = grid.pts.front();
  const CDeriv2 f0 = gauge_factor_d(p, eta0);
  // z = w / f, z' = (w' - w f'/f) / f
  const cplx z1 = init.w1 / f0.v;
  const cplx dz1 = (init.dw1 - init.w1 * (f0.d1 / f0.v)) / f0.v;
  const cplx z2 = init.w2 / f0.v;
  const cplx dz2 = (init.dw2 - init.w2 * (f0.d1 / f0.v)) / f0.v;

  LinearODE ode1, ode2;
  auto zero = [](double) { return cplx(0.0); };
  ode1.P = zero;
  ode2.P = zero;
  ode1.Q = [p, variant](double eta) { return q_free_term(p, 1, eta, variant); };
  ode2.Q = [p, variant](double eta) { return q_free_term(p, 2, eta, variant); };

  const FunctionTrace z1_tr = numverify::integrate_ode(ode1, z1, dz1, grid, opts);
  const FunctionTrace z2_tr = numverify::integrate_ode(ode2, z2, dz2, grid, opts);
  const FunctionTrace w1_tr = gauge_to_w(p, z1_tr);
  const FunctionTrace w2_tr = gauge_to_w(p, z2_tr);

  SpinorTrace out;
  out.grid = grid;
  out.w1 = w1_tr.values;
  out.w2 = w2_tr.values;
  out.d1_w1 = *w1_tr.d1;
  out.d1_w2 = *w2_tr.d1;
  return out;
}

namespace {

// Coupled first-order system  y' = A(eta) y  with y = (w1, w2):
//   a11 = -c u1 + i K1, a12 = -i K2, a21 = i K1, a22 = c u2 - i K2,
// where (u1, u2) = (u_p, u_p) for D2 (K1 = K2 = K) and (u_p, u_g) for D3.
struct CoupledCoefs {
  double K1, K2;
  bool second_is_general;
};

CoupledCoefs coupled_coefs(const ModelParams& p, CoupledKind kind) {
  if (kind == CoupledKind::d2) return {p.K, p.K, false};
  return {p.K1, p.K2, true};
}

}  // namespace

SpinorTrace solve_coupled(const ModelParams& p, CoupledKind kind, const Grid& grid,
                          const SpinorInit& init, numverify::IntegratorOptions opts) {
  const CoupledCoefs cc = coupled_coefs(p, kind);
  const double excl = grid.excluded_radius;
  numverify::Matrix2Fn A = [p, cc, excl](double eta) -> std::array<cplx, 4> {
    const double u1 = cf::u_particular(p, eta, excl);
    const double u2 = cc.second_is_general ? db::u_general(p, eta, excl) : u1;
    return {cplx(-p.c * u1, cc.K1), cplx(0.0, -cc.K2), cplx(0.0, cc.K1), cplx(p.c * u2, -cc.K2)};
  };
  auto [t1, t2] = numverify::integrate_linear_system2(A, init.w1, init.w2, grid, opts);
  SpinorTrace out;
  out.grid = grid;
  out.w1 = t1.values;
  out.w2 = t2.values;
  out.d1_w1 = *t1.d1;
  out.d1_w2 = *t2.d1;
  return out;
}

std::pair<std::vector<cplx>, std::vector<cplx>> coupled_second_derivative(const ModelParams& p,
                                                                          CoupledKind kind,
                                                                          const SpinorTrace& tr) {
  if (!tr.d1_w1 || !tr.d1_w2) throw MissingDerivative("coupled_second_derivative: need d1");
  const CoupledCoefs cc = coupled_coefs(p, kind);
  const std::size_t n = tr.grid.size();
  std::vector<cplx> d2w1(n), d2w2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = tr.grid[i];
    const Deriv2 up = cf::u_particular_d(p, eta, tr.grid.excluded_radius);
    const Deriv2 u2 = cc.second_is_general ? db::u_general_d(p, eta, tr.grid.excluded_radius) : up;
    const cplx a11(-p.c * up.v, cc.K1), a12(0.0, -cc.K2), a21(0.0, cc.K1), a22(p.c * u2.v, -cc.K2);
    // w'' = A' w + A w'
    d2w1[i] = -p.c * up.d1 * tr.w1[i] + a11 * (*tr.d1_w1)[i] + a12 * (*tr.d1_w2)[i];
    d2w2[i] = p.c * u2.d1 * tr.w2[i] + a21 * (*tr.d1_w1)[i] + a22 * (*tr.d1_w2)[i];
  }
  return {d2w1, d2w2};
}

std::pair<ResidualReport, ResidualReport> coupled_residual(const ModelParams& p, CoupledKind kind,
                                                           const SpinorTrace& tr, double tol) {
  if (!tr.d1_w1 || !tr.d1_w2) throw MissingDerivative("coupled_residual: need d1");
  const CoupledCoefs cc = coupled_coefs(p, kind);
  const std::size_t n = tr.grid.size();
  std::vector<double> r1(n), r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = tr.grid[i];
    const double u1 = cf::u_particular(p, eta, tr.grid.excluded_radius);
    const double u2 = cc.second_is_general ? db::u_general(p, eta, tr.grid.excluded_radius) : u1;
    const cplx a11(-p.c * u1, cc.K1), a12(0.0, -cc.K2), a21(0.0, cc.K1), a22(p.c * u2, -cc.K2);
    r1[i] = std::abs((*tr.d1_w1)[i] - (a11 * tr.w1[i] + a12 * tr.w2[i]));
    r2[i] = std::abs((*tr.d1_w2)[i] - (a21 * tr.w1[i] + a22 * tr.w2[i]));
  }
  return {make_report("coupled_component1", r1, tr.grid.pts, tr.grid.spacing, tol),
          make_report("coupled_component2", r2, tr.grid.pts, tr.grid.spacing, tol)};
}

}  // namespace riccati::dirac
