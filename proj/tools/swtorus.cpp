// swtorus: command line front end. Subcommands: verify, solve, lift, pair,
// convergence. Options come from an INI file (--config) overridden by flags;
// every command writes a JSON report with the same config echo so reruns with
// one seed are byte-identical.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <sw/kernels.hpp>
#include <sw/lattice.hpp>
#include <sw/random.hpp>
#include <sw/snapshot.hpp>
#include <sw/solver.hpp>
#include <sw/symplectic.hpp>
#include <sw/verify.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace sw;

namespace {

struct Options {
  std::string config;
  std::string out = ".";
  std::uint64_t seed = 1;
  std::array<int, 4> grid{6, 6, 6, 6};
  std::array<double, 4> lengths{1, 1, 1, 1};
  std::array<int, 2> grid2{16, 16};
  std::string scheme = "link";
  std::string convention = "paper";
  std::string kernel = "auto";
  double conformal = 0.3;
  double wedge_sign = -1, orientation = 1;
  std::array<double, 2> twist_signs{-1, 1};
  int threads = 1;
  int steps = 20000;
  double step_size = 1e-2, tol = 1e-8;
  int report_every = 100;
  int dim = 2;
  double amp = 1e-4;
  int modes = 2;
  std::array<int, 2> p{0, 0}, q{0, 0};
  std::vector<int> sizes{4, 8, 16};
  std::string gauge_file, spinor_file;
};

std::string trim(const std::string& s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  auto e = s.find_last_not_of(ws);
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line, section;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ": line " + std::to_string(no) + ": expected key = value");
    kv[section + "." + trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return kv;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

template <std::size_t N, class T, class F>
void fill_array(std::array<T, N>& a, const std::string& v, const std::string& key, F conv) {
  auto parts = split(v);
  if (parts.size() != N)
    throw std::runtime_error("config: " + key + " needs " + std::to_string(N) + " values");
  for (std::size_t i = 0; i < N; ++i) a[i] = conv(parts[i]);
}

void apply_ini(Options& o, const std::map<std::string, std::string>& kv) {
  auto to_i = [](const std::string& s) { return std::stoi(s); };
  auto to_d = [](const std::string& s) { return std::stod(s); };
  for (const auto& [k, v] : kv) {
    if (k == "grid.n") fill_array(o.grid, v, k, to_i);
    else if (k == "grid.lengths") fill_array(o.lengths, v, k, to_d);
    else if (k == "grid.n2") fill_array(o.grid2, v, k, to_i);
    else if (k == "forms.wedge_sign") o.wedge_sign = to_d(v);
    else if (k == "forms.twist_signs") fill_array(o.twist_signs, v, k, to_d);
    else if (k == "forms.orientation") o.orientation = to_d(v);
    else if (k == "forms.conformal") o.conformal = to_d(v);
    else if (k == "solver.steps") o.steps = to_i(v);
    else if (k == "solver.step_size") o.step_size = to_d(v);
    else if (k == "solver.tol") o.tol = to_d(v);
    else if (k == "solver.report_every") o.report_every = to_i(v);
    else if (k == "solver.scheme") o.scheme = v;
    else if (k == "solver.convention") o.convention = v;
    else if (k == "run.seed") o.seed = std::stoull(v);
    else if (k == "run.kernel") o.kernel = v;
    else if (k == "run.threads") o.threads = to_i(v);
    else if (k == "run.dim") o.dim = to_i(v);
    else if (k == "run.amp") o.amp = to_d(v);
    else if (k == "run.modes") o.modes = to_i(v);
    else if (k == "run.p") fill_array(o.p, v, k, to_i);
    else if (k == "run.q") fill_array(o.q, v, k, to_i);
    else if (k == "run.sizes") {
      o.sizes.clear();
      for (const std::string& s : split(v)) o.sizes.push_back(to_i(s));
    } else {
      throw std::runtime_error("config: unknown key " + k);
    }
  }
}

Scheme to_scheme(const std::string& s) {
  if (s == "link") return Scheme::link;
  if (s == "central") return Scheme::central;
  throw std::runtime_error("scheme must be 'link' or 'central', got '" + s + "'");
}

Convention to_convention(const std::string& s) {
  if (s == "paper") return Convention::paper;
  if (s == "standard") return Convention::standard;
  throw std::runtime_error("convention must be 'paper' or 'standard', got '" + s + "'");
}

FormConventions to_forms(const Options& o) {
  FormConventions fc;
  fc.wedge_sign = o.wedge_sign;
  fc.twist_form = o.twist_signs[0];
  fc.twist_spinor = o.twist_signs[1];
  fc.orientation = o.orientation;
  validate(fc);
  return fc;
}

json config_echo(const Options& o) {
  json c;
  c["grid"] = o.grid;
  c["lengths"] = o.lengths;
  c["grid2"] = o.grid2;
  c["lengths2"] = std::array<double, 2>{o.lengths[0], o.lengths[1]};
  c["scheme"] = o.scheme;
  c["convention"] = o.convention;
  c["conformal"] = o.conformal;
  c["p"] = o.p;
  c["q"] = o.q;
  c["wedge_sign"] = o.wedge_sign;
  c["twist_signs"] = o.twist_signs;
  c["orientation"] = o.orientation;
  c["solver"] = {{"steps", o.steps},
                 {"step_size", o.step_size},
                 {"tol", o.tol},
                 {"report_every", o.report_every}};
  return c;
}

json report_base(const char* command, const Options& o) {
  json j;
  j["command"] = command;
  j["schema"] = "sw-report-v1";
  j["seed"] = o.seed;
  j["generator"] = generator_name();
  j["kernel"] = kernels::name(kernels::active());
  j["config"] = config_echo(o);
  return j;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

void write_trace(const std::string& path, const std::vector<TraceRow>& trace) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot write " + path);
  std::fputs("step,energy,curvature_residual,dirac_residual,grad_norm\n", f);
  for (const TraceRow& r : trace)
    std::fprintf(f, "%d,%.17g,%.17g,%.17g,%.17g\n", r.step, r.energy, r.curvature_residual,
                 r.dirac_residual, r.grad_norm);
  std::fclose(f);
}

json record_json(const InvariantRecord& r) {
  json j;
  j["name"] = r.name;
  j["trials"] = r.trials;
  j["max_defect"] = r.max_defect;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["fitted_constants"] = json::object();
  for (const auto& [k, v] : r.fitted) j["fitted_constants"][k] = v;
  j["seed"] = r.seed;
  return j;
}

std::string out_path(const Options& o, const char* name) {
  return (std::filesystem::path(o.out) / name).string();
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.grid = Grid4{o.grid, o.lengths};
  vo.convention = to_convention(o.convention);
  vo.forms = to_forms(o);
  vo.conformal = o.conformal;
  std::vector<InvariantRecord> rec = run_all_checks(vo);

  json j = report_base("verify", o);
  json fitted = json::object();
  bool all = true;
  for (const InvariantRecord& r : rec) {
    for (const auto& [k, v] : r.fitted)
      if (k == "kappa" || k == "kappa_m" || k == "nondegeneracy_c") fitted[k] = v;
    all = all && r.pass;
  }
  j["fitted_constants"] = fitted;
  j["invariants"] = json::array();
  for (const InvariantRecord& r : rec) j["invariants"].push_back(record_json(r));
  j["pass"] = all;
  write_json(out_path(o, "report.json"), j);

  for (const InvariantRecord& r : rec)
    std::printf("%-20s %s  max_defect=%.3e  tol=%.1e  trials=%d\n", r.name.c_str(),
                r.pass ? "pass" : "FAIL", r.max_defect, r.tolerance, r.trials);
  std::printf("%s\n", all ? "all invariants hold" : "invariant failures detected");
  return all ? 0 : 1;
}

int cmd_solve(const Options& o) {
  SolveSettings st;
  st.max_steps = o.steps;
  st.step_size = o.step_size;
  st.tol = o.tol;
  st.scheme = to_scheme(o.scheme);
  st.convention = to_convention(o.convention);
  st.report_every = o.report_every;

  json j = report_base("solve", o);
  json res;
  res["dim"] = o.dim;
  if (o.dim == 2) {
    Grid2 g{{o.grid2[0], o.grid2[1]}, {o.lengths[0], o.lengths[1]}};
    Grid4 g4{o.grid, o.lengths};
    Transverse tv{g4.spacing(2), g4.spacing(3)};
    ReducedConfig c(g);
    c.a0 = random_smooth_field2(g, o.seed, o.modes, o.amp);
    c.a1 = random_smooth_field2(g, o.seed + 1, o.modes, o.amp);
    c.phi1 = random_smooth_field2(g, o.seed + 2, o.modes, o.amp);
    c.phi2 = random_smooth_field2(g, o.seed + 3, o.modes, o.amp);
    c.u = random_smooth_spinor2(g, o.seed + 4, o.modes, o.amp);
    Solve2Result r = solve_reduced(c, st, tv);
    save_gauge2(out_path(o, "config_gauge.swf"), r.c.a0, r.c.a1, r.c.phi1, r.c.phi2);
    save(out_path(o, "config_spinor.swf"), r.c.u);
    write_trace(out_path(o, "trace.csv"), r.trace);
    auto [cr, dr] = residual_norms2(r.c, st.scheme, tv);
    res["converged"] = r.converged;
    res["steps"] = r.steps;
    res["final_energy"] = r.final_energy;
    res["curvature_residual"] = cr;
    res["dirac_residual"] = dr;
    res["residual"] = std::sqrt(cr * cr + dr * dr);
    j["result"] = res;
    write_json(out_path(o, "solve.json"), j);
    std::printf("solve dim=2: %s after %d steps, residual=%.3e\n",
                r.converged ? "converged" : "not converged", r.steps,
                std::sqrt(cr * cr + dr * dr));
    return r.converged ? 0 : 1;
  }
  if (o.dim != 4) throw std::runtime_error("dim must be 2 or 4");
  Grid4 g{o.grid, o.lengths};
  GaugeField4 A = random_smooth_gauge(g, o.seed, o.modes, o.amp);
  SpinorField4 u = random_smooth_spinor(g, o.seed + 1, o.modes, o.amp);
  DescendResult r = descend(std::move(A), std::move(u), st);
  save(out_path(o, "config_gauge.swf"), r.A);
  save(out_path(o, "config_spinor.swf"), r.u);
  write_trace(out_path(o, "trace.csv"), r.trace);
  auto [cr, dr] = residual_norms(r.A, r.u, st.convention, st.scheme);
  res["converged"] = r.converged;
  res["steps"] = r.steps;
  res["final_energy"] = r.final_energy;
  res["curvature_residual"] = cr;
  res["dirac_residual"] = dr;
  res["residual"] = std::sqrt(cr * cr + dr * dr);
  j["result"] = res;
  write_json(out_path(o, "solve.json"), j);
  std::printf("solve dim=4: %s after %d steps, residual=%.3e\n",
              r.converged ? "converged" : "not converged", r.steps, std::sqrt(cr * cr + dr * dr));
  return r.converged ? 0 : 1;
}

int cmd_lift(const Options& o) {
  Snapshot sg = load(o.gauge_file);
  Snapshot ss = load(o.spinor_file);
  if (static_cast<int>(sg.n[0]) != o.grid[0] || static_cast<int>(sg.n[1]) != o.grid[1] ||
      sg.n[2] != 1 || sg.n[3] != 1) {
    std::fprintf(stderr, "lift: gauge snapshot is %ux%ux%ux%u, target base is %dx%d\n", sg.n[0],
                 sg.n[1], sg.n[2], sg.n[3], o.grid[0], o.grid[1]);
    return 2;
  }
  std::array<double, 2> len2{o.lengths[0], o.lengths[1]};
  auto legs = as_gauge2(sg, len2);
  ReducedConfig c;
  c.a0 = legs[0];
  c.a1 = legs[1];
  c.phi1 = legs[2];
  c.phi2 = legs[3];
  c.u = as_spinor2(ss, len2);
  if (c.u.grid.n != c.a0.grid.n) {
    std::fprintf(stderr, "lift: gauge and spinor snapshots disagree on the base grid\n");
    return 2;
  }
  Grid4 g4{o.grid, o.lengths};
  Scheme sc = to_scheme(o.scheme);
  Convention cv = to_convention(o.convention);
  Transverse tv{g4.spacing(2), g4.spacing(3)};
  auto [c2, d2] = residual_norms2(c, sc, tv);
  auto [A, u] = lift_config(c, g4);
  auto [c4, d4] = residual_norms(A, u, cv, sc);
  double r2 = std::sqrt(c2 * c2 + d2 * d2), r4 = std::sqrt(c4 * c4 + d4 * d4);
  double defect = std::fabs(r4 - r2) / (1 + r2);
  save(out_path(o, "lift_gauge.swf"), A);
  save(out_path(o, "lift_spinor.swf"), u);

  json j = report_base("lift", o);
  j["result"] = {{"residual_2d", {{"curvature", c2}, {"dirac", d2}, {"total", r2}}},
                 {"residual_4d", {{"curvature", c4}, {"dirac", d4}, {"total", r4}}},
                 {"defect", defect},
                 {"pass", defect <= 1e-12 * (1 + r2)}};
  write_json(out_path(o, "lift.json"), j);
  std::printf("lift: residual 2d=%.12e 4d=%.12e defect=%.3e\n", r2, r4, defect);
  return defect <= 1e-12 * (1 + r2) ? 0 : 1;
}

int cmd_pair(const Options& o) {
  Grid4 g{o.grid, o.lengths};
  Grid2 s1 = factor1(g), s2 = factor2(g);
  FormConventions fc = to_forms(o);
  KahlerData k = o.conformal == 0 ? constant_kahler(s1, s2)
                                  : harmonic_kahler(s1, s2, o.conformal, 0.8 * o.conformal);
  Weights4 w = lift_weights(g, k);
  TangentVector4 a = random_tangent(g, o.seed, o.modes, 1.0);
  TangentVector4 b = random_tangent(g, o.seed + 10, o.modes, 1.0);

  double om = omega(a, b, w, fc);
  double cc = omega_cross_check(a, b, w, fc);
  double cross_defect = std::fabs(om - cc) / (1 + std::fabs(om));

  auto mod = [](int v, int n) { return ((v % n) + n) % n; };
  std::array<int, 2> p{mod(o.p[0], g.n[2]), mod(o.p[1], g.n[3])};
  std::array<int, 2> q{mod(o.q[0], g.n[0]), mod(o.q[1], g.n[1])};
  double oy = omega_y(a, b, k, p, q, fc);
  double ps = pullback_pair_sum(a, b, k, p, q, fc);

  InvariantRecord slice = check_slice_identity(fc, o.seed + 100, 24);
  InvariantRecord moment = check_moment_identity(g, fc, o.seed + 200, 12);
  double kappa = slice.fitted.at("kappa");
  double kappa_m = moment.fitted.at("kappa_m");
  double pullback_defect = std::fabs(oy - kappa * ps) / (1 + std::fabs(oy) + std::fabs(ps));

  ReducedTangent X = pushforward_psi1(a, p[0], p[1]);
  ReducedTangent Y = pushforward_psi1(b, p[0], p[1]);
  double o1 = omega1_sigma(X, Y, k.f1, fc);
  double gc = gc_metric(X, X, k.f1);

  double tw = omega(a, twist(a, fc), w, fc) / tangent_norm2(a);

  bool pass = cross_defect < 1e-12 && pullback_defect < 1e-10 && slice.pass && moment.pass &&
              tw > 0;
  json j = report_base("pair", o);
  j["result"] = {{"omega", om},
                 {"cross_check", cc},
                 {"cross_defect", cross_defect},
                 {"omega_y", oy},
                 {"pullback_sum", ps},
                 {"pullback_defect", pullback_defect},
                 {"omega1_slice", o1},
                 {"metric_slice", gc},
                 {"twist_ratio", tw},
                 {"kappa", kappa},
                 {"kappa_m", kappa_m},
                 {"pass", pass}};
  write_json(out_path(o, "pair.json"), j);
  std::printf("pair: omega=%.12e cross_defect=%.3e kappa=%.12f kappa_m=%.12f twist_ratio=%.6f\n",
              om, cross_defect, kappa, kappa_m, tw);
  return pass ? 0 : 1;
}

int cmd_convergence(const Options& o) {
  if (o.sizes.size() < 2) throw std::runtime_error("--sizes needs at least two entries");
  ConvergenceTable tab = convergence_table(o.sizes);
  std::FILE* f = std::fopen(out_path(o, "convergence.csv").c_str(), "wb");
  if (!f) throw std::runtime_error("cannot write convergence.csv");
  std::fputs("n,h,curv_link,dirac_link,curv_central,dirac_central\n", f);
  for (const ConvergenceRow& r : tab.rows)
    std::fprintf(f, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.n, r.h, r.curv_link, r.dirac_link,
                 r.curv_central, r.dirac_central);
  std::fclose(f);

  bool pass = std::fabs(tab.order_curv_link - 1) < 0.2 && std::fabs(tab.order_dirac_link - 1) < 0.2 &&
              std::fabs(tab.order_curv_central - 2) < 0.2 &&
              std::fabs(tab.order_dirac_central - 2) < 0.2;
  json j = report_base("convergence", o);
  j["result"] = {{"sizes", o.sizes},
                 {"order_curv_link", tab.order_curv_link},
                 {"order_dirac_link", tab.order_dirac_link},
                 {"order_curv_central", tab.order_curv_central},
                 {"order_dirac_central", tab.order_dirac_central},
                 {"pass", pass}};
  write_json(out_path(o, "convergence.json"), j);
  std::printf("orders: link curvature %.3f, link dirac %.3f, central curvature %.3f, "
              "central dirac %.3f\n",
              tab.order_curv_link, tab.order_dirac_link, tab.order_curv_central,
              tab.order_dirac_central);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  // The config file seeds the defaults; flags parsed afterwards override it.
  try {
    std::string cfg;
    for (int i = 1; i < argc; ++i) {
      std::string a = argv[i];
      if (a == "--config" && i + 1 < argc) cfg = argv[i + 1];
      else if (a.rfind("--config=", 0) == 0) cfg = a.substr(9);
    }
    if (!cfg.empty()) apply_ini(o, read_ini(cfg));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  CLI::App app{"Lattice toolkit for the abelian monopole system on a product of two flat 2-tori"};
  app.add_option("--config", o.config, "INI config file ([grid], [forms], [solver], [run])");
  app.add_option("--seed", o.seed, "base seed for all randomness");
  app.add_option("--grid", o.grid, "4D grid extents N0,N1,N2,N3")->delimiter(',');
  app.add_option("--lengths", o.lengths, "torus lengths L0,L1,L2,L3")->delimiter(',');
  app.add_option("--grid2", o.grid2, "reduced grid extents N0,N1")->delimiter(',');
  app.add_option("--scheme", o.scheme, "derivative scheme: link or central");
  app.add_option("--convention", o.convention, "self-dual convention: paper or standard");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--conformal", o.conformal, "conformal weight amplitude, 0 = flat");
  app.add_option("--wedge-sign", o.wedge_sign, "wedge sector sign, +1 or -1");
  app.add_option("--twist-signs", o.twist_signs, "twist signs s1,s2")->delimiter(',');
  app.add_option("--orientation", o.orientation, "volume orientation, +1 or -1");
  app.add_option("--threads", o.threads, "worker threads");
  app.add_option("--kernel", o.kernel, "kernel variant: auto, scalar, avx2");
  app.add_option("--steps", o.steps, "max descent steps");
  app.add_option("--step-size", o.step_size, "initial descent step");
  app.add_option("--tol", o.tol, "residual tolerance");
  app.add_option("--report-every", o.report_every, "trace row cadence");
  app.add_option("--dim", o.dim, "solve dimension: 2 or 4");
  app.add_option("--amp", o.amp, "initial field amplitude");
  app.add_option("--modes", o.modes, "harmonics per random field");
  app.add_option("--p", o.p, "slice point p2,p3 on the second factor")->delimiter(',');
  app.add_option("--q", o.q, "slice point q0,q1 on the first factor")->delimiter(',');
  app.add_option("--sizes", o.sizes, "convergence ladder sizes")->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "run every invariant suite, write report.json");
  CLI::App* solve = app.add_subcommand("solve", "gradient descent from a seeded start");
  CLI::App* lift = app.add_subcommand("lift", "lift a reduced snapshot and compare residuals");
  CLI::App* pair = app.add_subcommand("pair", "evaluate the 2-form, slices, and fitted constants");
  CLI::App* conv = app.add_subcommand("convergence", "discretization orders on a ladder");
  lift->add_option("--gauge", o.gauge_file, "reduced gauge snapshot (.swf)")->required();
  lift->add_option("--spinor", o.spinor_file, "reduced spinor snapshot (.swf)")->required();
  for (CLI::App* s : {verify, solve, lift, pair, conv}) s->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.kernel == "auto")
      kernels::set_variant(kernels::supported(kernels::Variant::avx2) ? kernels::Variant::avx2
                                                                      : kernels::Variant::scalar);
    else if (o.kernel == "scalar")
      kernels::set_variant(kernels::Variant::scalar);
    else if (o.kernel == "avx2")
      kernels::set_variant(kernels::Variant::avx2);
    else
      throw std::runtime_error("kernel must be auto, scalar, or avx2");
    kernels::set_threads(o.threads < 1 ? 1 : o.threads);
    std::filesystem::create_directories(o.out);

    if (verify->parsed()) return cmd_verify(o);
    if (solve->parsed()) return cmd_solve(o);
    if (lift->parsed()) return cmd_lift(o);
    if (pair->parsed()) return cmd_pair(o);
    return cmd_convergence(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
