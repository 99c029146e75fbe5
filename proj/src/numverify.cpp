#include "riccati/numverify.hpp"

#include <algorithm>
#include <cmath>

#include "riccati/errors.hpp"

namespace riccati::numverify {

namespace {

using State = std::array<cplx, 2>;
using Rhs = std::function<State(double, const State&)>;

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State r = y;
  for (auto [w, k] : terms) {
    r[0] += h * w * (*k)[0];
    r[1] += h * w * (*k)[1];
  }
  return r;
}

void check_finite(const State& y) {
  for (const cplx& v : y)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFinite("integrator: non-finite state");
}

// One Dormand-Prince step; k1 is f(t, y) (FSAL), k7 out becomes the next k1.
double dp_step(const Rhs& f, double t, const State& y, const State& k1, double h, State& ynew,
               State& k7, const IntegratorOptions& opts) {
  const State k2 = f(t + c2 * h, axpy(y, h, {{a21, &k1}}));
  const State k3 = f(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
  const State k4 = f(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const State k5 = f(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const State k6 =
      f(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  ynew = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  k7 = f(t + h, ynew);

  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const cplx err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                          e7 * k7[i]);
    const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
    const double r = std::abs(err) / sc;
    sum += r * r;
  }
  return std::sqrt(sum / 2.0);
}

// Integrates from grid.pts[0] through every node, invoking sink(i, t, y).
void integrate_through(const Rhs& f, State y, const Grid& grid, const IntegratorOptions& opts,
                       const std::function<void(std::size_t, double, const State&)>& sink) {
  double t = grid.pts.front();
  sink(0, t, y);
  State k1 = f(t, y);
  double h = grid.spacing > 0 ? grid.spacing : (grid.end - grid.start) / 100.0;
  long n_steps = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double target = grid.pts[i];
    while (t < target) {
      if (++n_steps > 20'000'000) throw NoConvergence("integrator: step count exceeded");
      const double h_try = std::min(h, target - t);
      if (h_try < 1e-14 * std::max(1.0, std::abs(t)))
        throw StepSizeUnderflow("integrator: step size underflow");
      State ynew, k7;
      const double err = dp_step(f, t, y, k1, h_try, ynew, k7, opts);
      if (err <= 1.0) {
        t += h_try;
        y = ynew;
        k1 = k7;
        check_finite(y);
        const double grow = (err == 0.0) ? 5.0 : 0.9 * std::pow(err, -0.2);
        h = h_try * std::clamp(grow, 0.2, 5.0);
      } else {
        h = h_try * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      }
    }
    sink(i, t, y);
  }
}

}  // namespace

FunctionTrace integrate_ode(const LinearODE& ode, cplx y0, cplx dy0, const Grid& grid,
                            IntegratorOptions opts) {
  const Rhs f = [&ode](double t, const State& y) -> State {
    return {y[1], -(ode.P(t) * y[1] + ode.Q(t) * y[0])};
  };
  FunctionTrace tr;
  tr.grid = grid;
  tr.values.resize(grid.size());
  tr.d1 = std::vector<cplx>(grid.size());
  integrate_through(f, {y0, dy0}, grid, opts,
                    [&tr](std::size_t i, double, const State& y) {
                      tr.values[i] = y[0];
                      (*tr.d1)[i] = y[1];
                    });
  return tr;
}

std::pair<cplx, cplx> integrate_ode_fixed(const LinearODE& ode, cplx y0, cplx dy0, double a,
                                          double b, int n_steps) {
  const Rhs f = [&ode](double t, const State& y) -> State {
    return {y[1], -(ode.P(t) * y[1] + ode.Q(t) * y[0])};
  };
  State y{y0, dy0};
  State k1 = f(a, y);
  const double h = (b - a) / n_steps;
  IntegratorOptions opts;  // unused by the fixed-step path beyond scaling
  for (int i = 0; i < n_steps; ++i) {
    State ynew, k7;
    dp_step(f, a + i * h, y, k1, h, ynew, k7, opts);
    y = ynew;
    k1 = k7;
    check_finite(y);
  }
  return {y[0], y[1]};
}

std::pair<FunctionTrace, FunctionTrace> integrate_linear_system2(const Matrix2Fn& A, cplx y1_0,
                                                               cplx y2_0, const Grid& grid,
                                                               IntegratorOptions opts) {
  const Rhs f = [&A](double t, const State& y) -> State {
    const std::array<cplx, 4> m = A(t);
    return {m[0] * y[0] + m[1] * y[1], m[2] * y[0] + m[3] * y[1]};
  };
  FunctionTrace t1, t2;
  t1.grid = grid;
  t2.grid = grid;
  t1.values.resize(grid.size());
  t2.values.resize(grid.size());
  t1.d1 = std::vector<cplx>(grid.size());
  t2.d1 = std::vector<cplx>(grid.size());
  integrate_through(f, {y1_0, y2_0}, grid, opts,
                    [&](std::size_t i, double t, const State& y) {
                      const std::array<cplx, 4> m = A(t);
                      t1.values[i] = y[0];
                      t2.values[i] = y[1];
                      (*t1.d1)[i] = m[0] * y[0] + m[1] * y[1];
                      (*t2.d1)[i] = m[2] * y[0] + m[3] * y[1];
                    });
  return {t1, t2};
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half).
constexpr double xgk[8] = {0.991455371120812639206854697526329,
                           0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926,
                           0.741531185599394439863864773280788,
                           0.586087235467691130294144838258730,
                           0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245,
                           0.0};
constexpr double wgk[8] = {0.022935322010529224963732008058970,
                           0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518,
                           0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550,
                           0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649,
                           0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082,
                          0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975,
                          0.417959183673469387755102040816327};

struct GKResult {
  cplx kronrod;
  cplx gauss;
};

GKResult gk15(const std::function<cplx(double)>& f, double a, double b) {
  const double hl = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  GKResult r{0.0, 0.0};
  for (int i = 0; i < 8; ++i) {
    const double dx = hl * xgk[i];
    cplx fsum = f(mid + dx);
    if (xgk[i] != 0.0) fsum += f(mid - dx);
    r.kronrod += wgk[i] * fsum;
    if (i % 2 == 1) r.gauss += wg[i / 2] * fsum;  // Gauss nodes sit at odd indices
  }
  r.kronrod *= hl;
  r.gauss *= hl;
  return r;
}

cplx adapt_gk(const std::function<cplx(double)>& f, double a, double b, double tol, int depth) {
  const GKResult g = gk15(f, a, b);
  const double err = std::abs(g.kronrod - g.gauss);
  if (err <= tol || err <= 1e-15 * std::abs(g.kronrod)) return g.kronrod;
  if (depth >= 60) throw MaxDepth("quadrature: maximum bisection depth reached");
  const double m = 0.5 * (a + b);
  return adapt_gk(f, a, m, 0.5 * tol, depth + 1) + adapt_gk(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace

cplx quadrature(const std::function<cplx(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  if (!(tol > 0.0)) throw DomainError("quadrature: tol must be positive");
  return adapt_gk(f, a, b, tol, 0);
}

std::pair<cplx, cplx> finite_diff(const std::function<cplx(double)>& f, double eta, double h) {
  const cplx fp = f(eta + h);
  const cplx fm = f(eta - h);
  const cplx f0 = f(eta);
  return {(fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)};
}

ResidualReport residual(const LinearODE& ode, const std::function<CDeriv2(double)>& w,
                        const Grid& grid, double tol, const std::string& name) {
  std::vector<double> res(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double eta = grid[i];
    const CDeriv2 wd = w(eta);
    res[i] = std::abs(wd.d2 + ode.P(eta) * wd.d1 + ode.Q(eta) * wd.v);
  }
  return make_report(name, res, grid.pts, grid.spacing, tol);
}

double wronskian_drift(const FunctionTrace& w, const FunctionTrace& v) {
  if (!w.d1 || !v.d1) throw MissingDerivative("wronskian_drift: traces must carry d1");
  if (w.grid.size() != v.grid.size())
    throw DomainError("wronskian_drift: traces on different grids");
  const std::size_t n = w.grid.size();
  const cplx w0 = w.values[0] * (*v.d1)[0] - (*w.d1)[0] * v.values[0];
  const double scale =
      std::abs(w.values[0]) * std::abs((*v.d1)[0]) + std::abs((*w.d1)[0]) * std::abs(v.values[0]);
  if (std::abs(w0) <= 1e-10 * scale)
    throw DegeneratePair("wronskian_drift: initial Wronskian vanishes (proportional pair?)");
  double drift = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const cplx wi = w.values[i] * (*v.d1)[i] - (*w.d1)[i] * v.values[i];
    drift = std::max(drift, std::abs(wi - w0) / std::abs(w0));
  }
  return drift;
}

}  // namespace riccati::numverify
