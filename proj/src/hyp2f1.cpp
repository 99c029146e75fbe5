#include "riccati/hyp2f1.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "riccati/errors.hpp"
#include "riccati/gamma.hpp"

namespace riccati::special {

namespace {

constexpr double kSeriesRadius = 0.8;
constexpr int kMaxTerms = 20000;
constexpr double kGammaMargin = 0.05;  // distance to integers for connection formulas
constexpr double kPi = 3.14159265358979323846;

double dist_to_int(cplx w) {
  return std::hypot(w.imag(), w.real() - std::round(w.real()));
}

bool near_integer(cplx w, double margin) { return dist_to_int(w) <= margin; }

bool is_nonpos_int(cplx w) {
  return w.real() <= 1e-12 && dist_to_int(w) <= 1e-12;
}

// Polynomial order if a or b is a nonpositive integer, else -1.
int terminating_order(cplx a, cplx b) {
  long n = -1;
  if (is_nonpos_int(a)) n = std::lround(-a.real());
  if (is_nonpos_int(b)) {
    const long nb = std::lround(-b.real());
    n = (n < 0) ? nb : std::min(n, nb);
  }
  return static_cast<int>(n);
}

// log with an explicit side convention when the argument sits on the
// negative real axis (where the principal branch is ambiguous at +-i0).
cplx log_on_side(cplx w, int neg_axis_arg_sign) {
  if (std::abs(w.imag()) <= 1e-14 * std::abs(w.real()) && w.real() < 0.0)
    return cplx(std::log(-w.real()), neg_axis_arg_sign * kPi);
  return std::log(w);
}

// Second derivative from the hypergeometric ODE (valid for z != 0, 1):
// z(1-z) F'' + [c - (a+b+1) z] F' - a b F = 0.
cplx ode_d2(cplx a, cplx b, cplx c, cplx z, cplx f, cplx d1) {
  return (((a + b + 1.0) * z - c) * d1 + a * b * f) / (z * (1.0 - z));
}

}  // namespace

namespace detail {

Hyp2F1Result eval_series(cplx a, cplx b, cplx c, cplx z) {
  if (std::abs(z) == 0.0)
    return {cplx(1.0), a * b / c, a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0))};
  const int nt = terminating_order(a, b);
  cplx term(1.0);
  cplx s0 = term, s1 = 0.0, s2 = 0.0;
  int consecutive_small = 0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    if (nt >= 0 && n > nt) break;  // polynomial summed exactly
    const double nm = static_cast<double>(n - 1);
    term *= (a + nm) * (b + nm) / ((c + nm) * static_cast<double>(n)) * z;
    s0 += term;
    s1 += static_cast<double>(n) * term;
    s2 += static_cast<double>(n) * nm * term;
    if (nt >= 0) continue;
    if (std::abs(term) < 1e-16 * std::abs(s0)) {
      if (++consecutive_small >= 3) break;
    } else {
      consecutive_small = 0;
    }
    if (n == kMaxTerms) throw NoConvergence("hyp2f1: series did not converge");
  }
  return {s0, s1 / z, s2 / (z * z)};
}

Hyp2F1Result eval_pfaff(cplx a, cplx b, cplx c, cplx z) {
  // 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
  const cplx w = z / (z - 1.0);
  const Hyp2F1Result g = eval_series(a, c - b, c, w);
  const cplx lom = std::log(1.0 - z);
  const cplx pref = std::exp(-a * lom);
  const cplx dw = -1.0 / ((z - 1.0) * (z - 1.0));
  const cplx f = pref * g.value;
  const cplx d1 = a * std::exp(-(a + 1.0) * lom) * g.value + pref * g.d1 * dw;
  return {f, d1, ode_d2(a, b, c, z, f, d1)};
}

Hyp2F1Result eval_one_minus_z(cplx a, cplx b, cplx c, cplx z, CutSide side) {
  const cplx w = 1.0 - z;
  const cplx s = c - a - b;
  const cplx gc = complex_gamma(c);
  const cplx a1 = gc * complex_gamma(s) * recip_gamma(c - a) * recip_gamma(c - b);
  const cplx a2 = gc * complex_gamma(-s) * recip_gamma(a) * recip_gamma(b);
  const Hyp2F1Result g1 = eval_series(a, b, a + b - c + 1.0, w);
  const Hyp2F1Result g2 = eval_series(c - a, c - b, s + 1.0, w);
  // z approaching the cut from above puts w just below the negative axis.
  const cplx lw = log_on_side(w, side == CutSide::above ? -1 : +1);
  const cplx ws = std::exp(s * lw);
  const cplx ws1 = std::exp((s - 1.0) * lw);
  const cplx f = a1 * g1.value + a2 * ws * g2.value;
  const cplx d1 = -(a1 * g1.d1 + a2 * (s * ws1 * g2.value + ws * g2.d1));
  return {f, d1, ode_d2(a, b, c, z, f, d1)};
}

Hyp2F1Result eval_inv_z(cplx a, cplx b, cplx c, cplx z, CutSide side) {
  const cplx w = 1.0 / z;
  const cplx gc = complex_gamma(c);
  const cplx b1 = gc * complex_gamma(b - a) * recip_gamma(b) * recip_gamma(c - a);
  const cplx b2 = gc * complex_gamma(a - b) * recip_gamma(a) * recip_gamma(c - b);
  const Hyp2F1Result g1 = eval_series(a, a - c + 1.0, a - b + 1.0, w);
  const Hyp2F1Result g2 = eval_series(b, b - c + 1.0, b - a + 1.0, w);
  // z on the cut from above puts -z just below the negative axis.
  const cplx lmz = log_on_side(-z, side == CutSide::above ? -1 : +1);
  const cplx t1 = std::exp(-a * lmz);
  const cplx t2 = std::exp(-b * lmz);
  const cplx f = b1 * t1 * g1.value + b2 * t2 * g2.value;
  // d/dz log(-z) = 1/z = w;  d/dz G(1/z) = -w^2 G'.
  const cplx d1 = -w * (b1 * t1 * (a * g1.value + w * g1.d1) + b2 * t2 * (b * g2.value + w * g2.d1));
  return {f, d1, ode_d2(a, b, c, z, f, d1)};
}

namespace {

double segment_distance(cplx p0, cplx p1, cplx q) {
  // distance from q to the segment [p0, p1]
  const cplx d = p1 - p0;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(q - p0);
  double t = ((q - p0).real() * d.real() + (q - p0).imag() * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(q - (p0 + t * d));
}

}  // namespace

Hyp2F1Result eval_continuation(cplx a, cplx b, cplx c, cplx z, CutSide side) {
  if (std::abs(z) <= kSeriesRadius) return eval_series(a, b, c, z);
  if (std::abs(z - 1.0) < 5e-4)
    throw NoConvergence("hyp2f1: argument too close to the branch point z = 1");

  int sgn;
  if (side == CutSide::above)
    sgn = +1;
  else if (side == CutSide::below)
    sgn = -1;
  else
    sgn = (z.imag() >= 0.0) ? +1 : -1;

  // Path of straight segments from a series anchor, kept clear of z = 1.
  std::array<cplx, 3> waypoints{};
  int n_way = 0;
  cplx start = 0.45 * z / std::abs(z);
  if (segment_distance(start, z, cplx(1.0)) >= 0.25) {
    waypoints = {z, 0, 0};
    n_way = 1;
  } else {
    const cplx mid(1.0, 0.9 * sgn);
    start = 0.45 * mid / std::abs(mid);
    waypoints = {mid, z, 0};
    n_way = 2;
  }

  Hyp2F1Result anchor = eval_series(a, b, c, start);
  cplx zeta = start;
  cplx t0 = anchor.value, t1 = anchor.d1;
  cplx d2_final = anchor.d2;

  int steps = 0;
  for (int wi = 0; wi < n_way; ++wi) {
    const cplx target = waypoints[wi];
    while (std::abs(target - zeta) > 1e-15 * (1.0 + std::abs(target))) {
      if (++steps > 400) throw NoConvergence("hyp2f1: continuation exceeded step limit");
      const double rho = std::min(std::abs(zeta), std::abs(zeta - 1.0));
      const cplx rem = target - zeta;
      const double hmax = 0.38 * rho;
      const cplx u = (std::abs(rem) <= hmax) ? rem : rem / std::abs(rem) * hmax;

      // Taylor step: coefficients from the ODE recurrence at zeta.
      const cplx denom_base = zeta * (1.0 - zeta);
      cplx tn = t0, tn1 = t1;
      cplx pw = 1.0;  // u^n
      cplx s0 = 0.0, s1 = 0.0, s2 = 0.0;
      int small_count = 0;
      bool converged = false;
      for (int n = 0; n <= 150; ++n) {
        const cplx contrib = tn * pw;
        s0 += contrib;
        s1 += static_cast<double>(n) * tn * (n > 0 ? pw / u : cplx(0.0));
        s2 += static_cast<double>(n) * static_cast<double>(n - 1) * tn *
              (n > 1 ? pw / (u * u) : cplx(0.0));
        if (n >= 6 && std::abs(contrib) <= 1e-17 * (std::abs(s0) + 1e-300)) {
          if (++small_count >= 3) {
            converged = true;
            break;
          }
        } else {
          small_count = 0;
        }
        // t_{n+2} from t_n, t_{n+1}
        const double nd = static_cast<double>(n);
        const cplx tn2 = ((nd + a) * (nd + b) * tn -
                          (nd + 1.0) * ((1.0 - 2.0 * zeta) * nd + c - (a + b + 1.0) * zeta) * tn1) /
                         (denom_base * (nd + 2.0) * (nd + 1.0));
        tn = tn1;
        tn1 = tn2;
        pw *= u;
      }
      if (!converged) throw NoConvergence("hyp2f1: Taylor step did not converge");
      zeta += u;
      t0 = s0;
      t1 = s1;
      d2_final = s2;
    }
  }
  return {t0, t1, d2_final};
}

}  // namespace detail

Hyp2F1Result hyp2f1_full(const Hyp2F1Args& args, CutSide side) {
  const cplx a = args.a, b = args.b, c = args.c, z = args.z;
  const int nt = terminating_order(a, b);
  if (is_nonpos_int(c)) {
    const long pole_index = std::lround(-c.real());
    if (nt < 0 || nt > pole_index)
      throw PoleParameter("hyp2f1: lower parameter is a nonpositive integer");
  }
  if (std::abs(z) == 0.0) return detail::eval_series(a, b, c, z);
  if (nt >= 0) return detail::eval_series(a, b, c, z);  // polynomial, entire

  const bool on_cut = std::abs(z.imag()) <= 1e-13 && z.real() >= 1.0 - 1e-13;
  if (on_cut) {
    if (std::abs(z - 1.0) <= 1e-12) throw CutAmbiguity("hyp2f1: argument at the branch point");
    if (side == CutSide::forbid)
      throw CutAmbiguity("hyp2f1: argument on the branch cut [1, inf); select a side");
    if (std::abs(z - 1.0) < 0.05)
      throw NoConvergence("hyp2f1: on-cut argument too close to the branch point");
  } else if (std::abs(std::abs(z) - 1.0) <= 1e-13) {
    // Unit circle: the boundary series converges absolutely iff Re(c-a-b) > 0.
    if ((c - a - b).real() <= 0.0)
      throw NoConvergence("hyp2f1: |z| = 1 with Re(c-a-b) <= 0 refused");
    if (std::abs(z - 1.0) < 0.05)
      throw NoConvergence("hyp2f1: unit-circle argument too close to z = 1");
  }

  if (std::abs(z) <= kSeriesRadius) return detail::eval_series(a, b, c, z);
  if (std::abs(z / (z - 1.0)) <= kSeriesRadius) return detail::eval_pfaff(a, b, c, z);
  if (std::abs(1.0 - z) <= kSeriesRadius && !near_integer(c - a - b, kGammaMargin))
    return detail::eval_one_minus_z(a, b, c, z, side);
  if (std::abs(z) >= 1.25 && !near_integer(a - b, kGammaMargin))
    return detail::eval_inv_z(a, b, c, z, side);
  return detail::eval_continuation(a, b, c, z, side);
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, CutSide side) {
  return hyp2f1_full({a, b, c, z}, side).value;
}

}  // namespace riccati::special
