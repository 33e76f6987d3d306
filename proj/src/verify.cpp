#include <sw/verify.hpp>

#include <sw/lattice.hpp>
#include <sw/random.hpp>

#include <algorithm>
#include <cmath>

namespace sw {
namespace {

double max_abs(const ScalarField4& f) {
  double m = 0;
  for (double v : f.v) m = std::max(m, std::fabs(v));
  return m;
}

double max_abs_diff(const ScalarField4& a, const ScalarField4& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::fabs(a.v[i] - b.v[i]));
  return m;
}

double max_site_norm(const SpinorField4& f) {
  double m = 0;
  for (std::size_t i = 0; i < f.w.size(); ++i) m = std::max(m, norm(f.site(i)));
  return m;
}

Quat rand_quat(SplitMix64& rng, double lo = -2.0, double hi = 2.0) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

// Ratio fit y = kappa x minimizing the L2 misfit.
double fit_ratio(const std::vector<double>& x, const std::vector<double>& y) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += x[i] * y[i];
    den += x[i] * x[i];
  }
  return num / den;
}

}  // namespace

InvariantRecord check_moment_closed_form(std::uint64_t seed, int trials) {
  InvariantRecord r{"moment_closed_form", trials, 0, 1e-13, false, {}, seed};
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Quat h = rand_quat(rng);
    Quat p = conj(h) * Quat{0, 1, 0, 0} * h;
    Moment m = moment_map(h);
    double d = std::max({std::fabs(m.m1 - 0.5 * p.x), std::fabs(m.m2 - 0.5 * p.y),
                         std::fabs(m.m3 - 0.5 * p.z), std::fabs(0.5 * p.w)});
    r.max_defect = std::max(r.max_defect, d);
  }
  r.pass = r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_hamiltonian_identity(std::uint64_t seed, int trials) {
  InvariantRecord r{"hamiltonian_identity", trials, 0, 1e-12, false, {}, seed};
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Quat h = rand_quat(rng), v = rand_quat(rng);
    double c = rng.uniform(-3, 3);
    double d = kahler_pairing(fundamental_field(c, h), v) + c * (conj(h) * v).w;
    r.max_defect = std::max(r.max_defect, std::fabs(d));
  }
  r.pass = r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_gauge_exactness(const Grid4& g, Convention conv, std::uint64_t seed,
                                      int trials) {
  InvariantRecord r{"gauge_exactness", trials, 0, 1e-12, false, {}, seed};
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + 100 * static_cast<std::uint64_t>(t);
    GaugeField4 A = random_smooth_gauge(g, s, 3, 0.8);
    SpinorField4 u = random_smooth_spinor(g, s + 1, 3, 0.9);
    ScalarField4 theta = random_smooth_field(g, s + 2, 3, 1.2);
    auto [Ag, ug] = gauge_transform(theta, A, u);

    Curvature4 C0 = curvature(A), C1 = curvature(Ag);
    const ScalarField4* c0[6] = {&C0.f01, &C0.f02, &C0.f03, &C0.f12, &C0.f13, &C0.f23};
    const ScalarField4* c1[6] = {&C1.f01, &C1.f02, &C1.f03, &C1.f12, &C1.f13, &C1.f23};
    for (int k = 0; k < 6; ++k)
      r.max_defect = std::max(r.max_defect, max_abs_diff(*c1[k], *c0[k]) / (1 + max_abs(*c0[k])));

    SelfDual4 K0 = fhat(A, conv), K1 = fhat(Ag, conv);
    SelfDual4 X0 = residual_chi(A, u, conv), X1 = residual_chi(Ag, ug, conv);
    const ScalarField4* s0[6] = {&K0.k1, &K0.k2, &K0.k3, &X0.k1, &X0.k2, &X0.k3};
    const ScalarField4* s1[6] = {&K1.k1, &K1.k2, &K1.k3, &X1.k1, &X1.k2, &X1.k3};
    for (int k = 0; k < 6; ++k)
      r.max_defect = std::max(r.max_defect, max_abs_diff(*s1[k], *s0[k]) / (1 + max_abs(*s0[k])));

    auto D0 = covariant_deriv(A, u, Scheme::link);
    auto D1 = covariant_deriv(Ag, ug, Scheme::link);
    auto P0 = dirac(A, u, Scheme::link);
    auto P1 = dirac(Ag, ug, Scheme::link);
    for (int mu = 0; mu < 4; ++mu) {
      auto m = static_cast<std::size_t>(mu);
      double scale = 1 + max_site_norm(D0[m]);
      for (std::size_t i = 0; i < u.w.size(); ++i) {
        Quat rot = u1_phase(-theta.v[i]) * D0[m].site(i);
        r.max_defect = std::max(r.max_defect, norm(rot - D1[m].site(i)) / scale);
        double n0 = norm2(P0[m].site(i)), n1 = norm2(P1[m].site(i));
        r.max_defect = std::max(r.max_defect, std::fabs(n1 - n0) / (1 + n0));
      }
    }
  }
  r.pass = r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_lift_commutation(std::uint64_t seed, int trials) {
  InvariantRecord r{"lift_commutation", trials, 0, 1e-14, false, {}, seed};
  const int n0s[2] = {4, 6}, n1s[2] = {4, 5}, n2s[2] = {4, 5}, n3s[2] = {5, 4};
  const double l2s[2] = {1.0, 0.5}, l3s[2] = {1.0, 2.0};
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + 100 * static_cast<std::uint64_t>(t);
    Grid2 base{{n0s[t % 2], n1s[(t / 2) % 2]}, {t % 3 == 0 ? 2.0 : 1.0, 1.0}};
    Grid2 fiber{{n2s[(t / 3) % 2], n3s[(t / 5) % 2]}, {l2s[(t / 4) % 2], l3s[(t / 8) % 2]}};
    Grid4 g4 = product_grid(base, fiber);
    Scheme sc = t % 2 ? Scheme::central : Scheme::link;
    Convention cv = (t / 2) % 2 ? Convention::standard : Convention::paper;

    ReducedConfig c(base);
    c.a0 = random_smooth_field2(base, s, 2, 0.8);
    c.a1 = random_smooth_field2(base, s + 1, 2, 0.8);
    c.phi1 = random_smooth_field2(base, s + 2, 2, 0.8);
    c.phi2 = random_smooth_field2(base, s + 3, 2, 0.8);
    c.u = random_smooth_spinor2(base, s + 4, 2, 0.9);

    Transverse tv{g4.spacing(2), g4.spacing(3)};
    ReducedResidual rr = reduced_residual(c, sc, tv);
    auto [A, u] = lift_config(c, g4);
    SelfDual4 chi = residual_chi(A, u, cv, sc);
    SpinorField4 S4 = dirac_sum(A, u, sc);

    const ScalarField2* k2[3] = {&rr.curv.k1, &rr.curv.k2, &rr.curv.k3};
    const ScalarField4* k4[3] = {&chi.k1, &chi.k2, &chi.k3};
    for (int kc = 0; kc < 3; ++kc) {
      ScalarField4 lifted = lift1(*k2[kc], g4);
      double scale = 1 + max_abs(*k4[kc]);
      for (std::size_t i = 0; i < lifted.v.size(); ++i) {
        double d = std::fabs(0.125 * lifted.v[i] - k4[kc]->v[i]);
        r.max_defect = std::max(r.max_defect, d / scale);
      }
    }
    SpinorField4 ls = lift1(rr.dirac, g4);
    double scale = 1 + max_site_norm(S4);
    for (std::size_t i = 0; i < ls.w.size(); ++i)
      r.max_defect = std::max(r.max_defect, norm(ls.site(i) - S4.site(i)) / scale);
  }
  r.pass = r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_solve_lift(std::uint64_t seed) {
  InvariantRecord r{"solve_lift", 1, 0, 1e-12, false, {}, seed};
  Grid2 g{{16, 16}, {1, 1}};
  Grid4 g4{{16, 16, 4, 4}, {1, 1, 1, 1}};
  ReducedConfig c(g);
  c.a0 = random_smooth_field2(g, seed, 2, 1e-4);
  c.a1 = random_smooth_field2(g, seed + 1, 2, 1e-4);
  c.phi1 = random_smooth_field2(g, seed + 2, 2, 1e-4);
  c.phi2 = random_smooth_field2(g, seed + 3, 2, 1e-4);
  c.u = random_smooth_spinor2(g, seed + 4, 2, 1e-4);
  SolveSettings st;
  st.max_steps = 20000;
  st.tol = 1e-6;
  st.report_every = 1000;
  Transverse tv{g4.spacing(2), g4.spacing(3)};
  Solve2Result sol = solve_reduced(c, st, tv);
  auto [c2, d2] = residual_norms2(sol.c, st.scheme, tv);
  double r2 = std::sqrt(c2 * c2 + d2 * d2);
  auto [A, u] = lift_config(sol.c, g4);
  auto [c4, d4] = residual_norms(A, u, st.convention, st.scheme);
  double r4 = std::sqrt(c4 * c4 + d4 * d4);
  r.max_defect = std::fabs(r4 - r2) / (1 + r2);
  r.fitted["residual_2d"] = r2;
  r.fitted["residual_4d"] = r4;
  r.pass = sol.converged && r2 < 1e-6 && r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_cross_terms(const Grid4& g, const FormConventions& fc, double conformal,
                                  std::uint64_t seed, int pairs) {
  InvariantRecord r{"cross_terms", pairs, 0, 1e-12, false, {}, seed};
  Grid2 s1 = factor1(g), s2 = factor2(g);
  Weights4 wc = lift_weights(g, constant_kahler(s1, s2, 1.0, 1.4));
  Weights4 wh = lift_weights(g, harmonic_kahler(s1, s2, conformal, 0.8 * conformal));
  for (int t = 0; t < pairs; ++t) {
    std::uint64_t s = seed + 100 * static_cast<std::uint64_t>(t);
    TangentVector4 a = random_tangent(g, s, 2, 1.0);
    TangentVector4 b = random_tangent(g, s + 10, 2, 1.0);
    const Weights4& w = t % 2 ? wh : wc;
    double v1 = omega(a, b, w, fc);
    double v2 = omega_cross_check(a, b, w, fc);
    r.max_defect = std::max(r.max_defect, std::fabs(v1 - v2) / (1 + std::fabs(v1)));
  }
  r.pass = r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_omega_structure(const Grid4& g, const FormConventions& fc, double conformal,
                                      std::uint64_t seed, int trials) {
  InvariantRecord r{"omega_structure", trials, 0, 1e-12, false, {}, seed};
  Grid2 s1 = factor1(g), s2 = factor2(g);
  Weights4 wc = lift_weights(g, constant_kahler(s1, s2, 1.0, 1.0));
  Weights4 wh = lift_weights(g, harmonic_kahler(s1, s2, conformal, 0.5 * conformal));
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + 100 * static_cast<std::uint64_t>(t);
    const Weights4& w = t % 2 ? wh : wc;
    TangentVector4 a = random_tangent(g, s, 2, 1.0);
    TangentVector4 b = random_tangent(g, s + 10, 2, 1.0);
    TangentVector4 c = random_tangent(g, s + 20, 2, 1.0);
    double ab = omega(a, b, w, fc);
    double scale = 1 + std::fabs(ab);

    r.max_defect = std::max(r.max_defect, std::fabs(ab + omega(b, a, w, fc)) / scale);

    const double la = 1.7 - 0.01 * t, mu = -0.6 + 0.02 * t;
    TangentVector4 lc(g);
    const ScalarField4* pa[4] = {&a.a0, &a.a1, &a.c2, &a.c3};
    const ScalarField4* pc[4] = {&c.a0, &c.a1, &c.c2, &c.c3};
    ScalarField4* pl[4] = {&lc.a0, &lc.a1, &lc.c2, &lc.c3};
    for (int k = 0; k < 4; ++k)
      for (std::size_t i = 0; i < pl[k]->v.size(); ++i)
        pl[k]->v[i] = la * pa[k]->v[i] + mu * pc[k]->v[i];
    for (std::size_t i = 0; i < lc.zeta.w.size(); ++i)
      lc.zeta.set_site(i, la * a.zeta.site(i) + mu * c.zeta.site(i));
    double lin = omega(lc, b, w, fc) - la * ab - mu * omega(c, b, w, fc);
    r.max_defect = std::max(r.max_defect, std::fabs(lin) / scale);

    GaugeField4 A = random_smooth_gauge(g, s + 30, 2, 0.7);
    SpinorField4 u = random_smooth_spinor(g, s + 31, 2, 0.7);
    r.max_defect =
        std::max(r.max_defect, std::fabs(omega_at(A, u, a, b, w, fc) - ab) / scale);

    ScalarField4 theta = random_smooth_field(g, s + 32, 2, 1.1);
    TangentVector4 ar = a, br = b;
    for (std::size_t i = 0; i < theta.v.size(); ++i) {
      Quat ph = u1_phase(-theta.v[i]);
      ar.zeta.set_site(i, ph * a.zeta.site(i));
      br.zeta.set_site(i, ph * b.zeta.site(i));
    }
    r.max_defect = std::max(r.max_defect, std::fabs(omega(ar, br, w, fc) - ab) / scale);
  }
  r.pass = r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_nondegeneracy(const FormConventions& fc, std::uint64_t seed, int trials) {
  InvariantRecord r{"nondegeneracy", trials, 0, 1e-12, false, {}, seed};
  Grid4 g{{8, 8, 8, 8}, {1, 1, 1, 1}};
  Weights4 w = lift_weights(g, constant_kahler(factor1(g), factor2(g)));
  SplitMix64 rng(seed);
  double cmin = 0;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + 100 * static_cast<std::uint64_t>(t);
    TangentVector4 a = random_tangent(g, s, 2, rng.uniform(0.5, 1.5));
    double q = omega(a, twist(a, fc), w, fc);
    double ratio = q / tangent_norm2(a);
    cmin = t == 0 ? ratio : std::min(cmin, ratio);
    r.max_defect = std::max(r.max_defect, std::fabs(ratio - 0.25));
  }
  r.fitted["nondegeneracy_c"] = cmin;
  r.pass = cmin > 0 && r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_slice_identity(const FormConventions& fc, std::uint64_t seed, int trials) {
  InvariantRecord r{"slice_identity", trials, 0, 1e-10, false, {}, seed};
  struct Shape {
    std::array<int, 4> n;
    std::array<double, 4> len;
  };
  const Shape shapes[4] = {
      {{6, 4, 4, 6}, {1, 1, 0.5, 2}},
      {{4, 6, 6, 4}, {2, 1, 1, 0.5}},
      {{5, 4, 4, 5}, {1, 0.5, 1, 1}},
      {{4, 4, 4, 4}, {1, 1, 1, 1}},
  };
  const double amps[3][2] = {{0, 0}, {0.3, 0.2}, {0.45, 0.1}};
  SplitMix64 rng(seed);
  std::vector<double> xs, ys;
  std::vector<int> groups;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + 100 * static_cast<std::uint64_t>(t);
    const Shape& sh = shapes[t % 4];
    Grid4 g{sh.n, sh.len};
    Grid2 s1 = factor1(g), s2 = factor2(g);
    const double* amp = amps[(t / 4) % 3];
    KahlerData k = amp[0] == 0 ? constant_kahler(s1, s2, 1.0, 1.3)
                               : harmonic_kahler(s1, s2, amp[0], amp[1]);
    TangentVector4 a = random_tangent(g, s, 2, 1.0);
    TangentVector4 b = random_tangent(g, s + 10, 2, 1.0);
    std::array<int, 2> p{rng.uniform_int(0, sh.n[2] - 1), rng.uniform_int(0, sh.n[3] - 1)};
    std::array<int, 2> q{rng.uniform_int(0, sh.n[0] - 1), rng.uniform_int(0, sh.n[1] - 1)};
    xs.push_back(pullback_pair_sum(a, b, k, p, q, fc));
    ys.push_back(omega_y(a, b, k, p, q, fc));
    groups.push_back(t % 4);
  }
  double kappa = fit_ratio(xs, ys);
  r.fitted["kappa"] = kappa;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double d = std::fabs(ys[i] - kappa * xs[i]) / (1 + std::fabs(xs[i]) + std::fabs(ys[i]));
    r.max_defect = std::max(r.max_defect, d);
  }
  for (int gi = 0; gi < 4; ++gi) {
    std::vector<double> gx, gy;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (groups[i] == gi) {
        gx.push_back(xs[i]);
        gy.push_back(ys[i]);
      }
    if (!gx.empty())
      r.max_defect = std::max(r.max_defect, std::fabs(fit_ratio(gx, gy) - kappa));
  }
  r.max_defect = std::max(r.max_defect, std::fabs(kappa - 1.0));
  r.pass = r.max_defect < r.tolerance;
  return r;
}

InvariantRecord check_moment_identity(const Grid4& g, const FormConventions& fc,
                                      std::uint64_t seed, int trials) {
  InvariantRecord r{"moment_identity", trials, 0, 1e-6, false, {}, seed};
  Grid2 s1 = factor1(g), s2 = factor2(g);
  Weights4 wc = lift_weights(g, constant_kahler(s1, s2, 2.0, 3.0));
  Weights4 wh = lift_weights(g, harmonic_kahler(s1, s2, 0.25, 0.35));
  std::vector<double> ls, ds;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + 100 * static_cast<std::uint64_t>(t);
    const Weights4& w = t % 2 ? wh : wc;
    GaugeField4 A = random_smooth_gauge(g, s, 3, 0.8);
    SpinorField4 u = random_smooth_spinor(g, s + 1, 3, 0.9);
    ScalarField4 eps = random_smooth_field(g, s + 2, 3, 1.0);
    TangentVector4 b = random_tangent(g, s + 3, 2, 1.0);
    auto [lhs, dh] = moment_identity_sides(eps, b, A, u, w, fc);
    ls.push_back(lhs);
    ds.push_back(dh);
  }
  double km = fit_ratio(ds, ls);
  r.fitted["kappa_m"] = km;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    double d = std::fabs(ls[i] - km * ds[i]) / (1 + std::fabs(ls[i]) + std::fabs(ds[i]));
    r.max_defect = std::max(r.max_defect, d);
  }
  r.max_defect = std::max(r.max_defect, std::fabs(km - 1.0));
  r.pass = r.max_defect < r.tolerance;
  return r;
}

ConvergenceTable convergence_table(const std::vector<int>& sizes) {
  ConvergenceTable tab;
  const double tp = 2 * 3.14159265358979323846;
  for (int n : sizes) {
    Grid4 g{{n, n, n, n}, {1, 1, 1, 1}};
    GaugeField4 A(g);
    SpinorField4 u(g);
    for (std::size_t i = 0; i < u.w.size(); ++i) {
      auto c = g.coords(i);
      double x[4];
      for (int d = 0; d < 4; ++d) x[d] = c[static_cast<std::size_t>(d)] * g.spacing(d);
      for (int m = 0; m < 4; ++m)
        A.mu[static_cast<std::size_t>(m)].v[i] = std::sin(tp * x[(m + 1) % 4]);
      u.set_site(i, {std::cos(tp * x[0]), std::sin(tp * x[1]), std::cos(tp * x[2]),
                     std::sin(tp * x[3])});
    }
    ConvergenceRow row;
    row.n = n;
    row.h = 1.0 / n;
    for (Scheme sc : {Scheme::link, Scheme::central}) {
      Curvature4 C = curvature(A, sc);
      const ScalarField4* f[6] = {&C.f01, &C.f02, &C.f03, &C.f12, &C.f13, &C.f23};
      const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      double ec = 0;
      auto dA = [&](int m, int nu, const double* x) {
        // d A_nu / d x_m; A_nu depends on coordinate (nu + 1) % 4 only.
        return m == (nu + 1) % 4 ? tp * std::cos(tp * x[m]) : 0.0;
      };
      for (std::size_t i = 0; i < u.w.size(); ++i) {
        auto c = g.coords(i);
        double x[4];
        for (int d = 0; d < 4; ++d) x[d] = c[static_cast<std::size_t>(d)] * g.spacing(d);
        for (int k = 0; k < 6; ++k) {
          double exact = dA(pairs[k][0], pairs[k][1], x) - dA(pairs[k][1], pairs[k][0], x);
          ec = std::max(ec, std::fabs(f[k]->v[i] - exact));
        }
      }
      auto D = covariant_deriv(A, u, sc);
      double ed = 0;
      for (std::size_t i = 0; i < u.w.size(); ++i) {
        auto c = g.coords(i);
        double x[4];
        for (int d = 0; d < 4; ++d) x[d] = c[static_cast<std::size_t>(d)] * g.spacing(d);
        Quat us = u.site(i);
        Quat du[4] = {{-tp * std::sin(tp * x[0]), 0, 0, 0},
                      {0, tp * std::cos(tp * x[1]), 0, 0},
                      {0, 0, -tp * std::sin(tp * x[2]), 0},
                      {0, 0, 0, tp * std::cos(tp * x[3])}};
        for (int m = 0; m < 4; ++m) {
          Quat exact = du[m] + A.mu[static_cast<std::size_t>(m)].v[i] * left_i(us);
          ed = std::max(ed, norm(D[static_cast<std::size_t>(m)].site(i) - exact));
        }
      }
      if (sc == Scheme::link) {
        row.curv_link = ec;
        row.dirac_link = ed;
      } else {
        row.curv_central = ec;
        row.dirac_central = ed;
      }
    }
    tab.rows.push_back(row);
  }
  std::vector<double> lh, cl, dl, cc, dc;
  for (const ConvergenceRow& row : tab.rows) {
    lh.push_back(std::log2(row.h));
    cl.push_back(std::log2(row.curv_link));
    dl.push_back(std::log2(row.dirac_link));
    cc.push_back(std::log2(row.curv_central));
    dc.push_back(std::log2(row.dirac_central));
  }
  tab.order_curv_link = fit_slope(lh, cl);
  tab.order_dirac_link = fit_slope(lh, dl);
  tab.order_curv_central = fit_slope(lh, cc);
  tab.order_dirac_central = fit_slope(lh, dc);
  return tab;
}

InvariantRecord check_convergence_orders(std::uint64_t seed, const std::vector<int>& sizes) {
  InvariantRecord r{"convergence_orders", static_cast<int>(sizes.size()), 0, 0.2, false, {}, seed};
  ConvergenceTable tab = convergence_table(sizes);
  r.fitted["order_curv_link"] = tab.order_curv_link;
  r.fitted["order_dirac_link"] = tab.order_dirac_link;
  r.fitted["order_curv_central"] = tab.order_curv_central;
  r.fitted["order_dirac_central"] = tab.order_dirac_central;
  r.max_defect = std::max({std::fabs(tab.order_curv_link - 1.0),
                           std::fabs(tab.order_dirac_link - 1.0),
                           std::fabs(tab.order_curv_central - 2.0),
                           std::fabs(tab.order_dirac_central - 2.0)});
  r.pass = r.max_defect < r.tolerance;
  return r;
}

std::vector<InvariantRecord> run_all_checks(const VerifyOptions& o) {
  validate(o.forms);
  std::vector<InvariantRecord> rec;
  rec.push_back(check_moment_closed_form(o.seed + 1));
  rec.push_back(check_hamiltonian_identity(o.seed + 2));
  rec.push_back(check_gauge_exactness(o.grid, o.convention, o.seed + 3));
  rec.push_back(check_lift_commutation(o.seed + 4));
  rec.push_back(check_solve_lift(o.seed + 5));
  rec.push_back(check_cross_terms(o.grid, o.forms, o.conformal, o.seed + 6));
  rec.push_back(check_omega_structure(o.grid, o.forms, o.conformal, o.seed + 7));
  rec.push_back(check_nondegeneracy(o.forms, o.seed + 8));
  rec.push_back(check_slice_identity(o.forms, o.seed + 9));
  rec.push_back(check_moment_identity(o.grid, o.forms, o.seed + 10));
  rec.push_back(check_convergence_orders(o.seed + 11));
  return rec;
}

}  // namespace sw
