// Gauge-theory operators: curvature, self-dual projections, Dirac components,
// residuals, the gauge action, and the dimensional-reduction lift.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sw/lattice.hpp>
#include <sw/random.hpp>
#include <sw/sw_ops.hpp>

#include <cmath>

using namespace sw;

namespace {

double max_abs(const ScalarField4& f) {
  double m = 0;
  for (double e : f.v) m = std::max(m, std::fabs(e));
  return m;
}

double max_abs2(const ScalarField2& f) {
  double m = 0;
  for (double e : f.v) m = std::max(m, std::fabs(e));
  return m;
}

double max_diff(const ScalarField4& a, const ScalarField4& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::fabs(a.v[i] - b.v[i]));
  return m;
}

double max_diff_sp(const SpinorField4& a, const SpinorField4& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.w.size(); ++i) m = std::max(m, norm(a.site(i) - b.site(i)));
  return m;
}

double max_diff_sp2(const SpinorField2& a, const SpinorField2& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.w.size(); ++i) m = std::max(m, norm(a.site(i) - b.site(i)));
  return m;
}

}  // namespace

TEST_CASE("curvature: zero field, pure gauge, and component wiring") {
  Grid4 g{{5, 4, 4, 6}, {1, 1, 1, 1}};
  GaugeField4 zero(g);
  Curvature4 f0 = curvature(zero);
  CHECK(max_abs(f0.f01) == 0.0);
  CHECK(max_abs(f0.f23) == 0.0);

  // Pure gauge: mixed forward differences commute up to roundoff.
  ScalarField4 theta = random_smooth_field(g, 7, 4, 1.0);
  GaugeField4 pg(g);
  for (int mu = 0; mu < 4; ++mu) pg.mu[static_cast<std::size_t>(mu)] = fwd_diff(theta, mu);
  Curvature4 fp = curvature(pg);
  const double scale = 1e-12 * (1 + max_abs(pg.mu[0]) / g.spacing(0));
  for (const ScalarField4* c : {&fp.f01, &fp.f02, &fp.f03, &fp.f12, &fp.f13, &fp.f23})
    CHECK(max_abs(*c) < scale);

  // Only A2 = f(x0) nonzero: F02 = fwd0 A2 bitwise, F12 = fwd1 A2 = 0, F23 = 0.
  GaugeField4 A(g);
  for (int i = 0; i < g.size(); ++i)
    A.mu[2].v[static_cast<std::size_t>(i)] = std::sin(2 * M_PI * g.coords(i)[0] / g.n[0]);
  Curvature4 F = curvature(A);
  CHECK(max_diff(F.f02, fwd_diff(A.mu[2], 0)) == 0.0);
  CHECK(max_abs(F.f12) == 0.0);
  CHECK(max_abs(F.f23) == 0.0);
  CHECK(max_abs(F.f01) == 0.0);
}

TEST_CASE("fhat: convention wiring and the 2F23 difference") {
  Grid4 g{{4, 4, 5, 4}, {1, 1, 1, 1}};
  // A2 depending on x3 only: F23 = -fwd3 A2; k1 differs by convention.
  GaugeField4 A(g);
  for (int i = 0; i < g.size(); ++i)
    A.mu[2].v[static_cast<std::size_t>(i)] = std::cos(2 * M_PI * g.coords(i)[3] / g.n[3]);
  SelfDual4 kp = fhat(A, Convention::paper);
  SelfDual4 ks = fhat(A, Convention::standard);
  ScalarField4 d3 = fwd_diff(A.mu[2], 3);
  // paper: k1 = F01 - F23 = +fwd3 A2 ; standard: k1 = -fwd3 A2.
  CHECK(max_diff(kp.k1, d3) < 1e-14);
  double m = 0;
  for (std::size_t i = 0; i < d3.v.size(); ++i)
    m = std::max(m, std::fabs(ks.k1.v[i] + d3.v[i]));
  CHECK(m < 1e-14);
  CHECK(max_diff(kp.k2, ks.k2) == 0.0);
  CHECK(max_diff(kp.k3, ks.k3) == 0.0);

  GaugeField4 R = random_smooth_gauge(g, 8, 3, 1.0);
  Curvature4 FR = curvature(R);
  SelfDual4 rp = fhat(R, Convention::paper), rs = fhat(R, Convention::standard);
  double worst = 0;
  for (std::size_t i = 0; i < FR.f23.v.size(); ++i)
    worst = std::max(worst, std::fabs((rs.k1.v[i] - rp.k1.v[i]) - 2 * FR.f23.v[i]));
  CHECK(worst < 1e-13);
}

TEST_CASE("dirac components: trivial zeros and prefix wiring") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 zero(g);
  SpinorField4 cu(g);
  for (std::size_t i = 0; i < cu.w.size(); ++i) cu.set_site(i, {0.3, -1.1, 0.7, 2.0});
  for (Scheme s : {Scheme::link, Scheme::central}) {
    auto D = dirac(zero, cu, s);
    for (const auto& c : D) CHECK(max_diff_sp(c, SpinorField4(g)) == 0.0);
  }

  // u varying along one axis at A = 0: component mu is prefix * fwd/central diff.
  SpinorField4 u(g);
  for (int i = 0; i < g.size(); ++i) {
    auto c = g.coords(i);
    double t0 = std::cos(2 * M_PI * c[0] / g.n[0]);
    double t1 = std::sin(2 * M_PI * c[1] / g.n[1]);
    double t2 = std::cos(2 * M_PI * c[2] / g.n[2] + 0.3);
    double t3 = std::sin(2 * M_PI * c[3] / g.n[3] + 0.7);
    u.set_site(static_cast<std::size_t>(i), {t0 + t2, t1 - t3, t0 * t1, t2 + 0.5 * t3});
  }
  auto D = dirac(zero, u, Scheme::link);
  auto fd = [&](int mu) {
    SpinorField4 r(g);
    ScalarField4 t(g);
    t.v = u.w; r.w = fwd_diff(t, mu).v;
    t.v = u.x; r.x = fwd_diff(t, mu).v;
    t.v = u.y; r.y = fwd_diff(t, mu).v;
    t.v = u.z; r.z = fwd_diff(t, mu).v;
    return r;
  };
  SpinorField4 f0 = fd(0), f1 = fd(1), f2 = fd(2), f3 = fd(3);
  double worst = 0;
  for (std::size_t i = 0; i < u.w.size(); ++i) {
    worst = std::max(worst, norm(D[0].site(i) - (-1.0) * f0.site(i)));
    worst = std::max(worst, norm(D[1].site(i) - left_i(f1.site(i))));
    worst = std::max(worst, norm(D[2].site(i) - left_j(f2.site(i))));
    worst = std::max(worst, norm(D[3].site(i) - left_k(f3.site(i))));
  }
  CHECK(worst == 0.0);
}

TEST_CASE("link scheme gauge covariance is exact; chi and curvature invariant") {
  Grid4 g{{4, 5, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 A = random_smooth_gauge(g, 21, 3, 0.8);
  SpinorField4 u = random_smooth_spinor(g, 22, 3, 0.9);
  ScalarField4 theta = random_smooth_field(g, 23, 3, 1.2);
  auto [Ag, ug] = gauge_transform(theta, A, u);

  auto D = covariant_deriv(A, u, Scheme::link);
  auto Dg = covariant_deriv(Ag, ug, Scheme::link);
  double worst = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (std::size_t i = 0; i < u.w.size(); ++i) {
      Quat want = u1_phase(-theta.v[i]) * D[static_cast<std::size_t>(mu)].site(i);
      worst = std::max(worst, norm(Dg[static_cast<std::size_t>(mu)].site(i) - want));
    }
  CHECK(worst < 1e-12);

  // Prefixed component norms are pointwise gauge-invariant.
  auto C = dirac(A, u, Scheme::link), Cg = dirac(Ag, ug, Scheme::link);
  worst = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (std::size_t i = 0; i < u.w.size(); ++i)
      worst = std::max(worst, std::fabs(norm2(Cg[static_cast<std::size_t>(mu)].site(i)) -
                                        norm2(C[static_cast<std::size_t>(mu)].site(i))));
  CHECK(worst < 1e-12);

  Curvature4 F = curvature(A), Fg = curvature(Ag);
  CHECK(max_diff(F.f01, Fg.f01) < 1e-12);
  CHECK(max_diff(F.f23, Fg.f23) < 1e-12);
  SelfDual4 X = residual_chi(A, u, Convention::paper), Xg = residual_chi(Ag, ug, Convention::paper);
  CHECK(max_diff(X.k1, Xg.k1) < 1e-12);
  CHECK(max_diff(X.k2, Xg.k2) < 1e-12);
  CHECK(max_diff(X.k3, Xg.k3) < 1e-12);
}

TEST_CASE("residual_chi frozen value and zero case") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 zero(g);
  SpinorField4 u0(g);
  SelfDual4 r0 = residual_chi(zero, u0, Convention::paper);
  CHECK(max_abs(r0.k1) == 0.0);

  // u = 1 + j constant: mu = (0,0,1), so chi = -(1/8)(0,0,1).
  SpinorField4 u(g);
  for (std::size_t i = 0; i < u.w.size(); ++i) u.set_site(i, {1, 0, 1, 0});
  SelfDual4 r = residual_chi(zero, u, Convention::paper);
  CHECK(max_abs(r.k1) == 0.0);
  CHECK(max_abs(r.k2) == 0.0);
  for (double e : r.k3.v) CHECK(e == -0.125);
}

TEST_CASE("gauge_transform: composition exact, constant theta invariants") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 A = random_smooth_gauge(g, 31, 3, 0.7);
  SpinorField4 u = random_smooth_spinor(g, 32, 3, 0.7);
  ScalarField4 t1 = random_smooth_field(g, 33, 3, 0.9);
  ScalarField4 t2 = random_smooth_field(g, 34, 3, 0.9);
  auto [A1, u1] = gauge_transform(t1, A, u);
  auto [A12, u12] = gauge_transform(t2, A1, u1);
  ScalarField4 ts(g);
  for (std::size_t i = 0; i < ts.v.size(); ++i) ts.v[i] = t1.v[i] + t2.v[i];
  auto [As, us] = gauge_transform(ts, A, u);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(max_diff(A12.mu[static_cast<std::size_t>(mu)], As.mu[static_cast<std::size_t>(mu)]) <
          1e-12);
  CHECK(max_diff_sp(u12, us) < 1e-12);

  ScalarField4 cth(g);
  for (auto& e : cth.v) e = 0.83;
  auto [Ac, uc] = gauge_transform(cth, A, u);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(max_diff(Ac.mu[static_cast<std::size_t>(mu)], A.mu[static_cast<std::size_t>(mu)]) == 0.0);
  SelfDual4 m0 = moment_of(u), m1 = moment_of(uc);
  CHECK(max_diff(m0.k1, m1.k1) < 1e-13);
  CHECK(max_diff(m0.k2, m1.k2) < 1e-13);
  CHECK(max_diff(m0.k3, m1.k3) < 1e-13);
}

TEST_CASE("gauge_tangent: finite-difference oracle and constant epsilon") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  SpinorField4 u = random_smooth_spinor(g, 41, 3, 0.8);
  GaugeField4 A = random_smooth_gauge(g, 42, 3, 0.8);
  ScalarField4 eps = random_smooth_field(g, 43, 3, 1.0);
  TangentVector4 v = gauge_tangent(eps, u);
  CHECK(max_diff(v.a0, fwd_diff(eps, 0)) == 0.0);
  CHECK(max_diff(v.c3, fwd_diff(eps, 3)) == 0.0);

  const double t = 1e-6;
  ScalarField4 te(g);
  for (std::size_t i = 0; i < te.v.size(); ++i) te.v[i] = t * eps.v[i];
  auto [At, ut] = gauge_transform(te, A, u);
  double worst = 0;
  for (std::size_t i = 0; i < u.w.size(); ++i) {
    Quat fd = (1.0 / t) * (ut.site(i) - u.site(i));
    worst = std::max(worst, norm(fd - v.zeta.site(i)));
  }
  CHECK(worst < 1e-5);
  for (int mu = 0; mu < 4; ++mu) {
    double w2 = 0;
    const auto& am = A.mu[static_cast<std::size_t>(mu)];
    const auto& atm = At.mu[static_cast<std::size_t>(mu)];
    const ScalarField4* vc[4] = {&v.a0, &v.a1, &v.c2, &v.c3};
    for (std::size_t i = 0; i < am.v.size(); ++i)
      w2 = std::max(w2, std::fabs((atm.v[i] - am.v[i]) / t - vc[mu]->v[i]));
    CHECK(w2 < 1e-9);
  }

  ScalarField4 ce(g);
  for (auto& e : ce.v) e = 1.7;
  TangentVector4 vc = gauge_tangent(ce, u);
  CHECK(max_abs(vc.a0) == 0.0);
  CHECK(max_abs(vc.c2) == 0.0);
  double wz = 0;
  for (std::size_t i = 0; i < u.w.size(); ++i)
    wz = std::max(wz, norm(vc.zeta.site(i) - (-1.7) * left_i(u.site(i))));
  CHECK(wz == 0.0);
}

TEST_CASE("reduced residual: frozen values and lift-commutation in both schemes") {
  Grid2 s{{6, 4}, {1, 1}};
  ReducedConfig z(s);
  ReducedResidual rz = reduced_residual(z, Scheme::link, Transverse{0.25, 0.25});
  CHECK(max_abs2(rz.curv.k1) == 0.0);
  CHECK(max_diff_sp2(rz.dirac, SpinorField2(s)) == 0.0);

  // Constant u = 1, a = 0: Dirac part 0, curvature part -mu(1) = -(1/2, 0, 0).
  ReducedConfig c1(s);
  for (std::size_t i = 0; i < c1.u.w.size(); ++i) c1.u.set_site(i, {1, 0, 0, 0});
  for (Scheme sc : {Scheme::link, Scheme::central}) {
    ReducedResidual r1 = reduced_residual(c1, sc, Transverse{0.25, 0.5});
    CHECK(max_diff_sp2(r1.dirac, SpinorField2(s)) == 0.0);
    for (double e : r1.curv.k1.v) CHECK(e == -0.5);
    CHECK(max_abs2(r1.curv.k2) == 0.0);
    CHECK(max_abs2(r1.curv.k3) == 0.0);
  }

  // Lift commutation: exact for random configs, non-unit transverse lengths too.
  for (int trial = 0; trial < 10; ++trial) {
    Grid2 s1{{6, 4}, {1.0, 1.0}};
    Grid2 s2{{4, 5}, {trial % 2 ? 1.0 : 0.5, 1.0}};
    Grid4 g = product_grid(s1, s2);
    auto seed = static_cast<std::uint64_t>(100 + trial);
    ReducedConfig c(s1);
    c.a0 = random_smooth_field2(s1, seed, 3, 0.8);
    c.a1 = random_smooth_field2(s1, seed + 1, 3, 0.8);
    c.phi1 = random_smooth_field2(s1, seed + 2, 3, 0.8);
    c.phi2 = random_smooth_field2(s1, seed + 3, 3, 0.8);
    c.u = random_smooth_spinor2(s1, seed + 4, 3, 0.8);
    auto [A, U] = lift_config(c, g);
    Transverse tv{g.spacing(2), g.spacing(3)};
    for (Scheme sc : {Scheme::link, Scheme::central}) {
      ReducedResidual r2 = reduced_residual(c, sc, tv);
      SelfDual4 chi = residual_chi(A, U, Convention::paper, sc);
      SpinorField4 ds = dirac_sum(A, U, sc);
      // curvature: (1/8) lift(K - mu) must equal chi of the lift.
      double worst = 0;
      const ScalarField2* rc[3] = {&r2.curv.k1, &r2.curv.k2, &r2.curv.k3};
      const ScalarField4* xc[3] = {&chi.k1, &chi.k2, &chi.k3};
      for (int comp = 0; comp < 3; ++comp) {
        ScalarField4 lifted = lift1(*rc[comp], g);
        for (std::size_t i = 0; i < lifted.v.size(); ++i)
          worst = std::max(worst, std::fabs(0.125 * lifted.v[i] - xc[comp]->v[i]));
      }
      SpinorField4 liftd = lift1(r2.dirac, g);
      for (std::size_t i = 0; i < liftd.w.size(); ++i)
        worst = std::max(worst, norm(liftd.site(i) - ds.site(i)));
      CHECK(worst < 1e-14);
    }
  }
}

TEST_CASE("lift_config rejects mismatched grids") {
  Grid2 s{{6, 4}, {1, 1}};
  ReducedConfig c(s);
  Grid4 bad{{4, 4, 4, 4}, {1, 1, 1, 1}};
  CHECK_THROWS(lift_config(c, bad));
}
