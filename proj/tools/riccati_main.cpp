// Command-line surface: evaluate the model objects on a grid, run the
// verification suites, and emit machine-readable traces and reports.
//
// Exit codes: 0 all requested checks pass; 1 a verification check failed;
// 2 configuration error; 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "riccati/closed_form.hpp"
#include "riccati/csv.hpp"
#include "riccati/darboux.hpp"
#include "riccati/dirac.hpp"
#include "riccati/numverify.hpp"

using namespace riccati;
namespace cf = riccati::closed_form;
namespace db = riccati::darboux;
namespace dr = riccati::dirac;
namespace nv = riccati::numverify;
using nlohmann::json;

namespace {

struct Config {
  ModelParams p;
  std::string grid_spec;
  double excl = kDefaultExcludedRadius;
  std::string output;
  std::string format = "csv";
  std::string report_path;
  std::string bracket = "as-printed";
  std::string eq24 = "eta";
  bool emit_w1 = false;
  std::string a_str = "1", b_str = "0", c_str = "1", d_str = "0";
};

cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
  return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

struct GridSpec {
  double start, end;
  int n;
};

GridSpec parse_grid(const std::string& s) {
  const auto c1 = s.find(':');
  const auto c2 = s.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw DomainError("grid spec must be start:end:n");
  GridSpec g{};
  g.start = std::stod(s.substr(0, c1));
  g.end = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  g.n = std::stoi(s.substr(c2 + 1));
  return g;
}

void add_common_options(CLI::App* cmd, Config& cfg, bool need_grid = true) {
  cmd->add_option("--kappa", cfg.p.kappa, "branch selector, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  cmd->add_option("--c", cfg.p.c, "Riccati coefficient (nonzero)");
  cmd->add_option("--phi", cfg.p.phase_phi, "seed phase (kappa=+1)");
  cmd->add_option("--W", cfg.p.amp_w, "seed amplitude (> 0)");
  cmd->add_option("--d", cfg.p.phase_d, "partner-solution phase (kappa=+1)");
  cmd->add_option("--lambda", cfg.p.lambda, "family parameter (> 0)");
  cmd->add_option("--K", cfg.p.K, "D2 constant (>= 0)");
  cmd->add_option("--K1", cfg.p.K1, "D3 constant (>= 0)");
  cmd->add_option("--K2", cfg.p.K2, "D3 constant (>= 0)");
  cmd->add_option("--k", cfg.p.k, "reduction-of-order constant");
  cmd->add_option("--A", cfg.a_str, "superposition constant, re[,im]");
  cmd->add_option("--B", cfg.b_str, "superposition constant, re[,im]");
  cmd->add_option("--C", cfg.c_str, "superposition constant, re[,im]");
  cmd->add_option("--D", cfg.d_str, "superposition constant, re[,im]");
  auto* grid = cmd->add_option("--grid", cfg.grid_spec, "evaluation grid start:end:n");
  if (need_grid) grid->required();
  cmd->add_option("--excl", cfg.excl, "exclusion radius around singularities");
  cmd->add_option("--output", cfg.output, "trace output path");
  cmd->add_option("--format", cfg.format, "trace format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--report", cfg.report_path, "verification report path (JSON)");
  cmd->add_option("--d2-bracket-variant", cfg.bracket, "D3 bracket variant")
      ->check(CLI::IsMember({"as-printed", "i-on-both"}));
  cmd->add_option("--eq24-integration", cfg.eq24, "reduction-of-order integration variable")
      ->check(CLI::IsMember({"eta", "y-jacobian"}));
}

json params_json(const Config& cfg) {
  json j;
  j["kappa"] = cfg.p.kappa;
  j["c"] = cfg.p.c;
  j["phase_phi"] = cfg.p.phase_phi;
  j["amp_W"] = cfg.p.amp_w;
  j["phase_d"] = cfg.p.phase_d;
  j["lambda"] = cfg.p.lambda;
  j["K"] = cfg.p.K;
  j["K1"] = cfg.p.K1;
  j["K2"] = cfg.p.K2;
  j["k"] = cfg.p.k;
  j["A"] = {cfg.p.A.real(), cfg.p.A.imag()};
  j["B"] = {cfg.p.B.real(), cfg.p.B.imag()};
  j["C"] = {cfg.p.C.real(), cfg.p.C.imag()};
  j["D"] = {cfg.p.D.real(), cfg.p.D.imag()};
  j["grid"] = cfg.grid_spec;
  j["excluded_radius"] = cfg.excl;
  j["d2_bracket_variant"] = cfg.bracket;
  j["eq24_integration"] = cfg.eq24;
  return j;
}

json check_json(const ResidualReport& r) {
  json j;
  j["name"] = r.name;
  j["sup_norm"] = r.sup_norm;
  j["l2_norm"] = r.l2_norm;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

void write_trace(const Config& cfg, const std::vector<io::Column>& cols) {
  if (cfg.output.empty()) return;
  std::ofstream os(cfg.output);
  if (!os) throw DomainError("cannot open output path: " + cfg.output);
  if (cfg.format == "csv") {
    io::write_csv(os, cols);
  } else {
    json j;
    for (const auto& col : cols) j["columns"][col.name] = col.values;
    os << j.dump(2) << "\n";
  }
}

int emit_report(const Config& cfg, const std::string& subcommand,
                const std::vector<ResidualReport>& checks) {
  bool pass = true;
  json j;
  j["subcommand"] = subcommand;
  j["params"] = params_json(cfg);
  j["checks"] = json::array();
  for (const ResidualReport& r : checks) {
    j["checks"].push_back(check_json(r));
    pass = pass && r.pass;
  }
  j["pass"] = pass;
  if (cfg.report_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(cfg.report_path);
    if (!os) throw DomainError("cannot open report path: " + cfg.report_path);
    os << j.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

Grid make_grid(const Config& cfg, bool half_line) {
  const GridSpec gs = parse_grid(cfg.grid_spec);
  if (half_line && gs.start < 0.0)
    throw DomainError("this subcommand is a half-line problem: grid start must be >= 0");
  const auto sing = cf::pole_locations(cfg.p, gs.start, gs.end);
  return Grid::uniform(gs.start, gs.end, gs.n, cfg.excl, sing);
}

// ------------------------------------------------------------- subcommands

int run_closed_form(const Config& cfg) {
  const ModelParams& p = cfg.p;
  const Grid g = make_grid(cfg, false);
  std::vector<io::Column> cols{{"eta", g.pts}, {"u_p", {}}, {"w_seed", {}}, {"w_f", {}},
                               {"c_f", {}}};
  std::vector<double> ric(g.size());
  FunctionTrace up_trace;
  up_trace.grid = g;
  up_trace.values.resize(g.size());
  up_trace.d1 = std::vector<cplx>(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Deriv2 u = cf::u_particular_d(p, g[i], g.excluded_radius);
    up_trace.values[i] = u.v;
    (*up_trace.d1)[i] = u.d1;
    cols[1].values.push_back(u.v);
    cols[2].values.push_back(cf::w_seed(p, g[i]));
    cols[3].values.push_back(cf::w_fermionic(p, g[i], g.excluded_radius));
    cols[4].values.push_back(cf::fermionic_free_term(p, g[i], g.excluded_radius));
  }
  write_trace(cfg, cols);

  std::vector<ResidualReport> checks;
  ResidualReport ric_rep = cf::riccati_residual(up_trace, p, 1e-12);
  ric_rep.name = "riccati_particular";
  checks.push_back(ric_rep);
  const FactorizationReport fact = cf::factorization_check(p, g, 1e-10);
  checks.push_back(fact.bosonic);
  checks.push_back(fact.fermionic);
  return emit_report(cfg, "closed-form", checks);
}

int run_family(const Config& cfg) {
  const ModelParams& p = cfg.p;
  const Grid g = make_grid(cfg, true);
  std::vector<io::Column> cols{{"eta", g.pts}, {"u_g", {}}, {"c_family", {}}, {"w_g", {}}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    cols[1].values.push_back(db::u_general(p, g[i], g.excluded_radius));
    cols[2].values.push_back(db::family_free_term(p, g[i]));
    cols[3].values.push_back(db::w_general(p, g[i]));
  }
  write_trace(cfg, cols);

  std::vector<ResidualReport> checks;
  {
    std::vector<double> res(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Deriv2 ug = db::u_general_d(p, g[i], g.excluded_radius);
      res[i] = std::abs(p.c * ug.v * ug.v + ug.d1 + p.kappa * db::family_free_term(p, g[i]));
    }
    checks.push_back(make_report("family_riccati", res, g.pts, g.spacing, 1e-9));
  }
  {
    std::vector<double> res(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Deriv2 ug = db::u_general_d(p, g[i], g.excluded_radius);
      res[i] = std::abs(-ug.d1 + p.c * ug.v * ug.v -
                        cf::fermionic_free_term(p, g[i], g.excluded_radius));
    }
    checks.push_back(make_report("partner_invariance", res, g.pts, g.spacing, 1e-8));
  }
  {
    LinearODE ode;
    ode.P = [](double) { return cplx(0.0); };
    ode.Q = [&p](double eta) { return cplx(p.kappa * p.c * db::family_free_term(p, eta)); };
    auto w = [&p](double eta) -> CDeriv2 {
      const Deriv2 d = db::w_general_d(p, eta);
      return {d.v, d.d1, d.d2};
    };
    checks.push_back(nv::residual(ode, w, g, 1e-9, "zero_mode_equation"));
  }
  {
    // closed-form antiderivative vs adaptive quadrature at sampled nodes
    std::vector<double> res, etas;
    const std::size_t stride = std::max<std::size_t>(1, g.size() / 20);
    for (std::size_t i = 0; i < g.size(); i += stride) {
      const cplx q = nv::quadrature(
          [&p](double y) { return cplx(cf::w_seed(p, y) * cf::w_seed(p, y)); }, 0.0, g[i], 1e-12);
      res.push_back(std::abs(db::integral_I(p, g[i]) - q.real()));
      etas.push_back(g[i]);
    }
    checks.push_back(make_report("integral_vs_quadrature", res, etas, g.spacing, 1e-10));
  }
  return emit_report(cfg, "family", checks);
}

int run_dirac1(const Config& cfg) {
  const Grid g = make_grid(cfg, false);
  const SpinorTrace tr = dr::solve_D1(cfg.p, g);
  std::vector<io::Column> cols{{"eta", g.pts}, {"w1", {}}, {"w2", {}}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    cols[1].values.push_back(tr.w1[i].real());
    cols[2].values.push_back(tr.w2[i].real());
  }
  write_trace(cfg, cols);
  const auto [r1, r2] = dr::d1_first_order_residual(cfg.p, tr, 1e-11);
  return emit_report(cfg, "dirac1", {r1, r2});
}

int run_dirac2(const Config& cfg) {
  const ModelParams& p = cfg.p;
  const Grid g = make_grid(cfg, false);
  const auto [ferm, bos] = dr::d2_free_terms(p);

  std::vector<io::Column> cols{{"eta", g.pts}, {"w2_re", {}}, {"w2_im", {}}};
  auto w2 = [&p](double eta) { return dr::w2_closed_form_d(p, eta); };
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx v = w2(g[i]).v;
    cols[1].values.push_back(v.real());
    cols[2].values.push_back(v.imag());
  }
  std::vector<ResidualReport> checks;
  checks.push_back(nv::residual(bos, w2, g, 1e-8, "bosonic_equation"));

  if (cfg.emit_w1) {
    const auto mode = (cfg.eq24 == "eta") ? dr::Eq24Integration::eta
                                          : dr::Eq24Integration::y_jacobian;
    const FunctionTrace w1 = dr::w1_from_w2(p, w2, g, mode);
    io::Column w1re{"w1_re", {}}, w1im{"w1_im", {}};
    std::vector<double> res(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      w1re.values.push_back(w1.values[i].real());
      w1im.values.push_back(w1.values[i].imag());
      res[i] = std::abs((*w1.d2)[i] + ferm.Q(g[i]) * w1.values[i]);
    }
    cols.push_back(w1re);
    cols.push_back(w1im);
    checks.push_back(make_report("fermionic_equation", res, g.pts, g.spacing, 1e-6));
  }
  write_trace(cfg, cols);
  return emit_report(cfg, "dirac2", checks);
}

int run_dirac3(const Config& cfg) {
  const ModelParams& p = cfg.p;
  const Grid g = make_grid(cfg, true);
  const auto variant = (cfg.bracket == "as-printed") ? dr::BracketVariant::as_printed
                                                     : dr::BracketVariant::i_on_both;
  const dr::SpinorInit init = dr::anchor_init(p, g.pts.front());
  const SpinorTrace tr = dr::solve_D3_numeric(p, g, init, variant);
  std::vector<io::Column> cols{{"eta", g.pts}, {"w1_re", {}}, {"w1_im", {}}, {"w2_re", {}},
                               {"w2_im", {}}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    cols[1].values.push_back(tr.w1[i].real());
    cols[2].values.push_back(tr.w1[i].imag());
    cols[3].values.push_back(tr.w2[i].real());
    cols[4].values.push_back(tr.w2[i].imag());
  }
  write_trace(cfg, cols);
  const auto [r1, r2] = dr::coupled_residual(p, dr::CoupledKind::d3, tr, 1e-6);
  return emit_report(cfg, "dirac3", {r1, r2});
}

int run_verify(const Config& cfg) {
  // Section-1 invariants: particular solutions, factorizations, and the
  // one-parameter family, all with analytic derivatives.
  const ModelParams& p = cfg.p;
  const Grid g = make_grid(cfg, true);
  std::vector<ResidualReport> checks;

  FunctionTrace up_trace;
  up_trace.grid = g;
  up_trace.values.resize(g.size());
  up_trace.d1 = std::vector<cplx>(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Deriv2 u = cf::u_particular_d(p, g[i], g.excluded_radius);
    up_trace.values[i] = u.v;
    (*up_trace.d1)[i] = u.d1;
  }
  ResidualReport ric = cf::riccati_residual(up_trace, p, 1e-12);
  ric.name = "riccati_particular";
  checks.push_back(ric);

  const FactorizationReport fact = cf::factorization_check(p, g, 1e-10);
  checks.push_back(fact.bosonic);
  checks.push_back(fact.fermionic);

  {
    std::vector<double> res(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Deriv2 w = cf::w_seed_d(p, g[i]);
      const double u = cf::u_particular(p, g[i], g.excluded_radius);
      res[i] = std::abs(p.c * u - w.d1 / w.v);
    }
    checks.push_back(make_report("logderiv_consistency", res, g.pts, g.spacing, 1e-10));
  }
  {
    std::vector<double> res(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Deriv2 u = cf::u_particular_d(p, g[i], g.excluded_radius);
      res[i] = std::abs(cf::fermionic_free_term(p, g[i], g.excluded_radius) -
                        (-u.d1 + p.c * u.v * u.v));
    }
    checks.push_back(make_report("freeterm_identity", res, g.pts, g.spacing, 1e-10));
  }
  {
    // analytic first derivatives vs central differences (independent oracle);
    // sampled away from poles, where the O(h^2) remainder stays below 1e-6
    const auto poles = cf::pole_locations(p, g.start - 1.0, g.end + 1.0);
    auto pole_dist = [&poles](double eta) {
      double d = 1e300;
      for (double s : poles) d = std::min(d, std::abs(eta - s));
      return d;
    };
    std::vector<double> res, etas;
    const std::size_t stride = std::max<std::size_t>(1, g.size() / 25);
    for (std::size_t i = 0; i < g.size(); i += stride) {
      const double eta = g[i];
      if (eta - 2e-5 < g.start) continue;
      if (pole_dist(eta) < 0.15) continue;
      double worst = 0.0;
      const auto fd = [&](auto analytic, auto plain) {
        const Deriv2 d = analytic(eta);
        const auto [d1, d2] = nv::finite_diff([&](double x) { return cplx(plain(x)); }, eta, 1e-5);
        worst = std::max(worst, std::abs(d.d1 - d1.real()));
      };
      fd([&](double x) { return cf::u_particular_d(p, x, g.excluded_radius); },
         [&](double x) { return cf::u_particular(p, x, g.excluded_radius); });
      fd([&](double x) { return cf::w_seed_d(p, x); }, [&](double x) { return cf::w_seed(p, x); });
      fd([&](double x) { return db::u_general_d(p, x, g.excluded_radius); },
         [&](double x) { return db::u_general(p, x, g.excluded_radius); });
      res.push_back(worst);
      etas.push_back(eta);
    }
    checks.push_back(make_report("fd_crosscheck", res, etas, g.spacing, 1e-6));
  }
  {
    std::vector<double> res(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Deriv2 ug = db::u_general_d(p, g[i], g.excluded_radius);
      res[i] = std::abs(-ug.d1 + p.c * ug.v * ug.v -
                        cf::fermionic_free_term(p, g[i], g.excluded_radius));
    }
    checks.push_back(make_report("partner_invariance", res, g.pts, g.spacing, 1e-8));
  }
  {
    LinearODE ode;
    ode.P = [](double) { return cplx(0.0); };
    ode.Q = [&p](double eta) { return cplx(p.kappa * p.c * db::family_free_term(p, eta)); };
    auto w = [&p](double eta) -> CDeriv2 {
      const Deriv2 d = db::w_general_d(p, eta);
      return {d.v, d.d1, d.d2};
    };
    checks.push_back(nv::residual(ode, w, g, 1e-9, "zero_mode_equation"));
  }
  return emit_report(cfg, "verify", checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riccati seed solutions, Darboux one-parameter family, and Dirac-like systems: "
               "evaluation and numerical verification"};
  app.require_subcommand(1);

  Config cfg;
  CLI::App* c_closed = app.add_subcommand("closed-form", "particular/seed/partner closed forms");
  CLI::App* c_family = app.add_subcommand("family", "one-parameter Darboux family");
  CLI::App* c_d1 = app.add_subcommand("dirac1", "decoupled zero-mass system");
  CLI::App* c_d2 = app.add_subcommand("dirac2", "mass-K system, hypergeometric solutions");
  CLI::App* c_d3 = app.add_subcommand("dirac3", "two-mass system, numerical solution");
  CLI::App* c_verify = app.add_subcommand("verify", "run the invariant suite");
  for (CLI::App* cmd : {c_closed, c_family, c_d1, c_d2, c_d3, c_verify})
    add_common_options(cmd, cfg);
  c_d2->add_flag("--emit-w1", cfg.emit_w1, "also emit the reduction-of-order fermionic component");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    cfg.p.A = parse_complex(cfg.a_str);
    cfg.p.B = parse_complex(cfg.b_str);
    cfg.p.C = parse_complex(cfg.c_str);
    cfg.p.D = parse_complex(cfg.d_str);
    cfg.p.validate();
    parse_grid(cfg.grid_spec);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_closed)) return run_closed_form(cfg);
    if (app.got_subcommand(c_family)) return run_family(cfg);
    if (app.got_subcommand(c_d1)) return run_dirac1(cfg);
    if (app.got_subcommand(c_d2)) return run_dirac2(cfg);
    if (app.got_subcommand(c_d3)) return run_dirac3(cfg);
    if (app.got_subcommand(c_verify)) return run_verify(cfg);
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
