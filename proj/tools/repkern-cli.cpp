// repkern command-line front end.
//
// Subcommands: reproduce, ks-report, converge, finite-type, onb.
// Shared flags: --config <path> --out <path> --seed <u64> --tol <float>
//               --resolution <int>.
// Exit codes: 0 = all tolerances met, 2 = tolerance failure, 3 = config error.

#include <CLI11.hpp>

#include <cmath>
#include <optional>
#include <sstream>

#include "common.hpp"
#include "repkern/boundary_operator.hpp"
#include "repkern/cn_kernels.hpp"
#include "repkern/planar_kernels.hpp"

namespace rk = repkern;
using rk::cd;
using namespace rk::cli;

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<unsigned long long> seed;
  std::optional<double> tol;
  std::optional<int> resolution;
};

void add_common(CLI::App* sub, CommonFlags& fl) {
  sub->add_option("--config", fl.config_path, "experiment config (JSON)")->required();
  sub->add_option("--out", fl.out, "output path (default: config 'out', else stdout)");
  sub->add_option("--seed", fl.seed, "seed for sampled minimizations");
  sub->add_option("--tol", fl.tol, "tolerance override");
  sub->add_option("--resolution", fl.resolution, "override N (planar) / res (grid)");
}

struct Loaded {
  json cfg;
  std::optional<std::string> out;
  unsigned long long seed;
  double tol;
};

Loaded load(const CommonFlags& fl, double default_tol) {
  Loaded l;
  l.cfg = load_config(fl.config_path);
  l.out = fl.out;
  if (!l.out && l.cfg.contains("out")) l.out = l.cfg.at("out").get<std::string>();
  l.seed = fl.seed.value_or(value_or<unsigned long long>(l.cfg, "seed", 20240801ULL));
  l.tol = fl.tol.value_or(value_or<double>(l.cfg, "tol", default_tol));
  if (l.tol <= 0.0) throw ConfigError("tolerance must be positive");
  return l;
}

int planar_N(const Loaded& l, const CommonFlags& fl, int fallback = 256) {
  const int N = fl.resolution.value_or(value_or<int>(l.cfg, "N", fallback));
  if (N < 4 || N % 2 != 0) throw ConfigError("N must be even and >= 4");
  return N;
}

int grid_res(const Loaded& l, const CommonFlags& fl, int fallback = 32) {
  // accept both spellings in configs; the command-line flag wins over either
  const int cfg_res = l.cfg.contains("res") ? value_or<int>(l.cfg, "res", fallback)
                                            : value_or<int>(l.cfg, "resolution", fallback);
  const int res = fl.resolution.value_or(cfg_res);
  if (res < 8) throw ConfigError("grid resolution must be >= 8");
  return res;
}

void require_interior(const rk::PlanarContour& c, cd z) {
  // Binary classification (winding 1 vs 0); the coarse-N quadrature error of
  // the winding integral near the boundary can reach percent level, so gate
  // at 1/2 rather than at quadrature accuracy.
  if (std::abs(rk::winding_number(c, z) - 1.0) > 0.5)
    throw ConfigError("evaluation point is not interior to the contour");
}

rk::BoundaryOperator op_difference(const rk::BoundaryOperator& X,
                                   const rk::BoundaryOperator& Y) {
  rk::BoundaryOperator d = X;
  d.M -= Y.M;
  return d;
}

// ---------------------------------------------------------------------------

int cmd_reproduce(const CommonFlags& fl) {
  const Loaded l = load(fl, 1e-5);
  const DomainSpec dom = parse_domain(l.cfg);
  const std::string formula = require<std::string>(l.cfg, "formula");
  const std::string ftext = value_or<std::string>(l.cfg, "f", "1");

  json report;
  report["formula"] = formula;
  report["kernel"] = formula;
  report["domain"] = dom.kind;
  report["f"] = ftext;
  report["tol"] = round12(l.tol);

  cd value, oracle;
  if (formula == "cauchy" || formula == "pompeiu") {
    if (!dom.planar()) throw ConfigError("formula '" + formula + "' needs a planar domain");
    const Expression f = parse_expression(ftext, 1);
    const int N = planar_N(l, fl);
    const rk::PlanarContour c = make_planar(dom, N);
    const cd z = parse_complex(l.cfg.contains("z") ? l.cfg.at("z") : json(0.0), "z");
    require_interior(c, z);
    oracle = f.eval(z);
    if (formula == "cauchy") {
      if (!f.holomorphic())
        throw ConfigError("the Cauchy formula needs a holomorphic f; use 'pompeiu'");
      std::vector<cd> samples(c.N);
      for (int k = 0; k < c.N; ++k) samples[k] = f.eval(c.gamma[k]);
      value = rk::cauchy_reproduce(c, samples, z);
    } else {
      value = rk::cauchy_pompeiu(
          c, [&](cd w) { return f.eval(w); }, [&](cd w) { return f.dbar(0, w); }, z);
    }
    report["N"] = N;
    report["z"] = complex_to_json(z);
  } else if (formula == "bm" || formula == "bm_full" || formula == "cf" ||
             formula == "henkin") {
    if (dom.planar()) throw ConfigError("formula '" + formula + "' needs a C^2 domain");
    const Expression f = parse_expression(ftext, 2);
    const rk::DefiningDomain dd = make_cn_domain(dom);
    const int res = grid_res(l, fl);
    const rk::HypersurfaceGrid grid = rk::make_surface_grid(dd, res);
    const rk::CnPoint z = parse_cn_point(
        l.cfg.contains("z") ? l.cfg.at("z") : json::array({0.0, 0.0}), "z");
    if (dd.rho(z) >= -1e-12) throw ConfigError("evaluation point is not interior");
    auto fn = [&](cd a, cd b) { return f.eval(a, b); };
    oracle = f.eval(z[0], z[1]);
    if (formula == "bm") {
      if (!f.holomorphic())
        throw ConfigError("the surface term alone needs holomorphic f; use 'bm_full'");
      value = rk::bm_reproduce(grid, fn, z);
    } else if (formula == "bm_full") {
      rk::CnDbar db = [&](cd a, cd b) {
        return std::array<cd, 2>{f.dbar(0, a, b), f.dbar(1, a, b)};
      };
      value = rk::bm_full(grid, rk::VolumeChart{}, fn, db, z);
    } else if (formula == "cf") {
      if (dd.kind != rk::DomainKind::ball)
        throw ConfigError("the explicit Leray weight is specific to the ball");
      if (!f.holomorphic()) throw ConfigError("'cf' needs holomorphic f");
      value = rk::cf_reproduce(grid, rk::ball_leray_weight(), fn, z);
    } else {
      if (!f.holomorphic()) throw ConfigError("'henkin' needs holomorphic f");
      value = rk::henkin_reproduce(dd, grid, fn, z);
    }
    report["res"] = res;
    report["z"] = json::array({complex_to_json(z[0]), complex_to_json(z[1])});
  } else {
    throw ConfigError("unknown formula '" + formula + "'");
  }

  const double abs_err = std::abs(value - oracle);
  report["value"] = complex_to_json(value);
  report["value_re"] = round12(value.real());
  report["value_im"] = round12(value.imag());
  report["oracle"] = complex_to_json(oracle);
  report["abs_err"] = round12(abs_err);
  report["error_vs_oracle"] = round12(abs_err);
  stamp(report, l.cfg, l.seed);
  write_text(l.out, report.dump(2) + "\n");
  return abs_err <= l.tol ? kExitOk : kExitTolerance;
}

// ---------------------------------------------------------------------------

int cmd_ks_report(const CommonFlags& fl) {
  const Loaded l = load(fl, 1e-5);
  const DomainSpec dom = parse_domain(l.cfg);
  if (!dom.planar()) throw ConfigError("ks-report needs a planar domain");
  const int N = planar_N(l, fl);
  const int Jmax = value_or<int>(l.cfg, "J", 8);
  if (Jmax < 1) throw ConfigError("J must be >= 1");
  const rk::PlanarContour c = make_planar(dom, N);
  const cd a = parse_complex(
      l.cfg.contains("eval_point") ? l.cfg.at("eval_point") : json(0.3), "eval_point");
  require_interior(c, a);

  const rk::BoundaryOperator H = rk::cauchy_operator(c);
  const rk::BoundaryOperator A = rk::ks_operator(H);
  const rk::BoundaryOperator S = rk::szego_projection_direct(H, A);

  json report;
  report["domain"] = dom.kind;
  report["N"] = N;
  report["norm_A"] = round12(rk::op_norm2(A));
  const auto res4 = rk::operator_identities_report(H, S);
  report["residuals"] = json::array();
  for (double r : res4) report["residuals"].push_back(round12(r));
  report["projection_residual"] = round12(S.projection_tol);

  bool diverged = false;
  json nj = json::array(), ne = json::array();
  try {
    for (int J = 1; J <= Jmax; ++J) {
      const rk::BoundaryOperator SJ = rk::szego_projection_neumann(H, A, J);
      nj.push_back(J);
      ne.push_back(round12(rk::op_norm2(op_difference(SJ, S))));
    }
  } catch (const std::runtime_error&) {
    diverged = true;  // reported, not fatal: the direct solve is already emitted
    nj = json::array();
    ne = json::array();
  }
  report["neumann_diverged"] = diverged;
  report["neumann_J"] = nj;
  report["neumann_errors"] = ne;

  const auto sig = rk::compactness_profile(A);
  json sj = json::array();
  for (std::size_t k = 0; k < sig.size() && k < 20; ++k) sj.push_back(round12(sig[k]));
  report["sigma"] = sj;

  const rk::SzegoExtract ex = rk::szego_kernel_extract(S, c, a);
  report["eval_point"] = complex_to_json(a);

  std::string csv_path;
  if (l.out) {
    const std::string& o = *l.out;
    csv_path = (o.size() > 5 && o.substr(o.size() - 5) == ".json")
                   ? o.substr(0, o.size() - 5) + ".csv"
                   : o + ".csv";
  }
  std::ostringstream csv;
  csv << "t,re,im\n";
  for (int k = 0; k < c.N; ++k)
    csv << fmt12(c.t[k]) << "," << fmt12(ex.boundary[k].real()) << ","
        << fmt12(ex.boundary[k].imag()) << "\n";
  if (!csv_path.empty()) {
    const std::size_t slash = csv_path.find_last_of('/');
    report["kernel_csv"] = slash == std::string::npos ? csv_path : csv_path.substr(slash + 1);
    write_text(csv_path, csv.str());
  }

  stamp(report, l.cfg, l.seed);
  write_text(l.out, report.dump(2) + "\n");
  if (!l.out) write_text(std::nullopt, csv.str());

  double worst = 0.0;
  for (double r : res4) worst = std::max(worst, r);
  return worst <= l.tol ? kExitOk : kExitTolerance;
}

// ---------------------------------------------------------------------------

int cmd_converge(const CommonFlags& fl) {
  const Loaded l = load(fl, 1e-5);
  const std::string formula = require<std::string>(l.cfg, "formula");
  const std::string ftext = value_or<std::string>(l.cfg, "f", "exp");

  std::vector<int> ns;
  std::vector<double> errs;

  if (formula == "cauchy") {
    const DomainSpec dom = parse_domain(l.cfg);
    if (!dom.planar()) throw ConfigError("'cauchy' convergence needs a planar domain");
    const Expression f = parse_expression(ftext, 1);
    if (!f.holomorphic()) throw ConfigError("'cauchy' convergence needs holomorphic f");
    const cd z = parse_complex(l.cfg.contains("z") ? l.cfg.at("z") : json(0.2), "z");
    for (int N : {32, 64, 128, 256, 512}) {
      const rk::PlanarContour c = make_planar(dom, N);
      require_interior(c, z);
      std::vector<cd> samples(c.N);
      for (int k = 0; k < c.N; ++k) samples[k] = f.eval(c.gamma[k]);
      ns.push_back(N);
      errs.push_back(std::abs(rk::cauchy_reproduce(c, samples, z) - f.eval(z)));
    }
  } else if (formula == "onb") {
    const Expression ignored = parse_expression("1", 1);
    (void)ignored;
    const rk::PlanarContour c = rk::make_circle(value_or<int>(l.cfg, "N", 256));
    const std::array<cd, 3> pts{cd(0.3, 0.0), cd(-0.2, 0.25), cd(0.0, 0.45)};
    for (int B : {4, 8, 16, 32}) {
      const rk::HoloBasis basis = rk::build_onb(c, B, rk::HoloSpace::A2);
      double worst = 0.0;
      for (cd z : pts)
        for (cd w : pts)
          worst = std::max(worst,
                           std::abs(rk::kernel_sum(basis, z, w) - rk::bergman_disc(z, w)));
      ns.push_back(B);
      errs.push_back(worst);
    }
  } else if (formula == "bm") {
    const DomainSpec dom = parse_domain(l.cfg);
    if (dom.planar()) throw ConfigError("'bm' convergence needs a C^2 domain");
    const rk::DefiningDomain dd = make_cn_domain(dom);
    const Expression f = parse_expression(ftext == "exp" ? "z1*z2" : ftext, 2);
    if (!f.holomorphic()) throw ConfigError("'bm' convergence needs holomorphic f");
    const rk::CnPoint z = parse_cn_point(
        l.cfg.contains("z") ? l.cfg.at("z") : json::array({0.3, 0.2}), "z");
    if (dd.rho(z) >= -1e-12) throw ConfigError("evaluation point is not interior");
    const cd oracle = f.eval(z[0], z[1]);
    for (int res : {8, 12, 16, 24, 32}) {
      const rk::HypersurfaceGrid grid = rk::make_surface_grid(dd, res);
      ns.push_back(res);
      errs.push_back(std::abs(
          rk::bm_reproduce(grid, [&](cd x, cd y) { return f.eval(x, y); }, z) - oracle));
    }
  } else {
    throw ConfigError("unknown convergence formula '" + formula + "'");
  }

  // Least-squares slope of log err vs log N over the pre-plateau segment.
  double order = 0.0;
  {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (errs[i] < 1e-14) break;
      lx.push_back(std::log(double(ns[i])));
      ly.push_back(std::log(errs[i]));
    }
    if (lx.size() >= 2) {
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
      mx /= lx.size();
      my /= ly.size();
      double num = 0, den = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
      }
      order = -num / den;
    }
  }

  std::ostringstream csv;
  csv << "# repkern converge " << kToolVersion << "\n";
  csv << "# config_hash=" << config_hash(l.cfg) << " seed=" << l.seed << "\n";
  csv << "N,abs_err\n";
  for (std::size_t i = 0; i < ns.size(); ++i)
    csv << ns[i] << "," << fmt12(errs[i]) << "\n";
  csv << "# estimated_order=" << fmt12(order) << "\n";
  write_text(l.out, csv.str());

  // Contract: monotone decrease to plateau for smooth data (slack 2x, plateau
  // at quadrature floor).
  bool monotone = true;
  for (std::size_t i = 1; i < errs.size(); ++i)
    if (errs[i] > 2.0 * errs[i - 1] && errs[i] > 1e-12) monotone = false;
  return monotone ? kExitOk : kExitTolerance;
}

// ---------------------------------------------------------------------------

int cmd_finite_type(const CommonFlags& fl) {
  const Loaded l = load(fl, 1e-5);
  const DomainSpec dom = parse_domain(l.cfg);
  if (dom.planar()) throw ConfigError("finite-type needs a C^2 domain");
  const rk::DefiningDomain dd = make_cn_domain(dom);
  const int m = value_or<int>(l.cfg, "m", dd.m);
  if (m < 1) throw ConfigError("type order m must be >= 1");
  const int samples = value_or<int>(l.cfg, "samples", 10000);
  if (samples < 1) throw ConfigError("samples must be >= 1");

  const rk::FiniteTypeReport r = rk::finite_type_bounds(dd, m, samples, l.seed);

  json report;
  report["domain"] = dom.kind;
  report["m"] = m;
  report["samples"] = samples;
  report["c_62"] = round12(r.c62);
  report["c_63"] = round12(r.c63);
  report["argmin_62"] = {
      {"z", json::array({complex_to_json(r.c62_z[0]), complex_to_json(r.c62_z[1])})},
      {"zeta",
       json::array({complex_to_json(r.c62_zeta[0]), complex_to_json(r.c62_zeta[1])})}};
  report["argmin_63"] = {
      {"zeta",
       json::array({complex_to_json(r.c63_zeta[0]), complex_to_json(r.c63_zeta[1])})},
      {"t", round12(r.c63_t)}};
  report["worst_fiber_order"] = round12(r.worst_fiber_order);
  report["type_failure"] = r.type_failure;
  report["message"] = r.message;
  stamp(report, l.cfg, l.seed);
  write_text(l.out, report.dump(2) + "\n");

  return (!r.type_failure && r.c62 > 0.0 && r.c63 > 0.0) ? kExitOk : kExitTolerance;
}

// ---------------------------------------------------------------------------

int cmd_onb(const CommonFlags& fl) {
  const Loaded l = load(fl, 1e-8);
  const DomainSpec dom = parse_domain(l.cfg);
  if (!dom.planar()) throw ConfigError("onb needs a planar domain");
  const int N = planar_N(l, fl);
  const int B = value_or<int>(l.cfg, "basis", 40);
  const std::string space_s = value_or<std::string>(l.cfg, "space", "A2");
  if (space_s != "A2" && space_s != "H2") throw ConfigError("space must be 'A2' or 'H2'");
  const rk::HoloSpace space = space_s == "A2" ? rk::HoloSpace::A2 : rk::HoloSpace::H2;

  const rk::PlanarContour c = make_planar(dom, N);
  rk::HoloBasis basis;
  try {
    basis = rk::build_onb(c, B, space);
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }

  json report;
  report["domain"] = dom.kind;
  report["space"] = space_s;
  report["basis"] = B;
  report["N"] = N;

  // Closed-form oracle on the unit disc; elsewhere an orthonormality residual.
  const bool unit_disc =
      dom.kind == "circle" && value_or<double>(dom.params, "radius", 1.0) == 1.0;
  double gate;
  if (unit_disc) {
    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const cd z = cd(-0.5 + 0.25 * i, 0.0);
        const cd w = cd(0.0, -0.5 + 0.25 * j);
        const cd oracle = space == rk::HoloSpace::A2 ? rk::bergman_disc(z, w)
                                                     : rk::szego_disc(z, w);
        worst = std::max(worst, std::abs(rk::kernel_sum(basis, z, w) - oracle));
      }
    report["max_kernel_err"] = round12(worst);
    gate = worst;
  } else {
    // max_{i<=j} |<phi_i, phi_j> - delta_ij| via explicit quadrature
    double worst = 0.0;
    for (int i = 0; i < B; ++i)
      for (int j = i; j < B; ++j) {
        cd acc = 0.0;
        if (space == rk::HoloSpace::H2) {
          for (int k = 0; k < c.N; ++k)
            acc += basis.eval(i, c.gamma[k]) * std::conj(basis.eval(j, c.gamma[k])) *
                   std::abs(c.dgamma[k]) * c.two_pi_over_n();
        } else {
          acc = rk::area_integrate(
              c, [&](cd w) { return basis.eval(i, w) * std::conj(basis.eval(j, w)); },
              std::nullopt, 96);
        }
        worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
      }
    report["ortho_residual"] = round12(worst);
    gate = worst;
  }
  report["tol"] = round12(l.tol);
  stamp(report, l.cfg, l.seed);
  write_text(l.out, report.dump(2) + "\n");
  return gate <= l.tol ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repkern: reproducing-kernel numerical laboratory"};
  app.require_subcommand(1);

  CommonFlags fl;
  int rc = kExitConfig;
  auto bind = [&](const char* name, const char* desc, int (*fn)(const CommonFlags&)) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub, fl);
    sub->callback([&rc, &fl, fn]() { rc = fn(fl); });
    return sub;
  };
  bind("reproduce", "evaluate a reproducing formula against its oracle", cmd_reproduce);
  bind("ks-report", "Kerzman-Stein operator report (JSON + kernel CSV)", cmd_ks_report);
  bind("converge", "error-vs-resolution sweep (CSV)", cmd_converge);
  bind("finite-type", "finite-type estimate constants (JSON)", cmd_finite_type);
  bind("onb", "orthonormal-basis kernel reconstruction report", cmd_onb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return rc;
}
