// Energy, gradients, and gradient-flow solvers, 4D and reduced.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sw/lattice.hpp>
#include <sw/random.hpp>
#include <sw/solver.hpp>
#include <sw/symplectic.hpp>

#include <cmath>

using namespace sw;

namespace {

SpinorField4 const_spinor(const Grid4& g, Quat q) {
  SpinorField4 u(g);
  for (std::size_t i = 0; i < u.w.size(); ++i) u.set_site(i, q);
  return u;
}

double inner4(const Grid4& g, const Gradient4& gr, const GaugeField4& dA, const SpinorField4& du) {
  double s = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (std::size_t i = 0; i < dA.mu[0].v.size(); ++i)
      s += gr.gA.mu[static_cast<std::size_t>(mu)].v[i] * dA.mu[static_cast<std::size_t>(mu)].v[i];
  for (std::size_t i = 0; i < du.w.size(); ++i) s += dot(gr.gu.site(i), du.site(i));
  return s * g.cell();
}

}  // namespace

TEST_CASE("energy: frozen trivial values") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 zero(g);
  SpinorField4 one = const_spinor(g, {1, 0, 0, 0});
  for (Scheme s : {Scheme::link, Scheme::central})
    for (Convention c : {Convention::paper, Convention::standard})
      CHECK(energy(zero, one, c, s) == 0.25);
  CHECK(energy(zero, SpinorField4(g), Convention::paper, Scheme::link) == 0.0);

  Grid2 s2{{4, 4}, {1, 1}};
  ReducedConfig rc(s2);
  for (std::size_t i = 0; i < rc.u.w.size(); ++i) rc.u.set_site(i, {1, 0, 0, 0});
  CHECK(energy2(rc, Scheme::link, Transverse{0.25, 0.25}) == 0.25);
}

TEST_CASE("energy is exactly gauge-invariant in the link scheme") {
  Grid4 g{{4, 5, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 A = random_smooth_gauge(g, 2001, 3, 0.8);
  SpinorField4 u = random_smooth_spinor(g, 2002, 3, 0.9);
  ScalarField4 theta = random_smooth_field(g, 2003, 3, 1.3);
  auto [Ag, ug] = gauge_transform(theta, A, u);
  for (Convention c : {Convention::paper, Convention::standard}) {
    double e0 = energy(A, u, c, Scheme::link);
    double e1 = energy(Ag, ug, c, Scheme::link);
    CHECK(std::fabs(e0 - e1) < 1e-12 * (1 + e0));
  }
}

TEST_CASE("gradient matches finite differences, 4D, all schemes and conventions") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 A = random_smooth_gauge(g, 2101, 3, 0.8);
  SpinorField4 u = random_smooth_spinor(g, 2102, 3, 0.8);
  GaugeField4 dA = random_smooth_gauge(g, 2103, 3, 1.0);
  SpinorField4 du = random_smooth_spinor(g, 2104, 3, 1.0);
  const double eps = 1e-5;
  for (Scheme s : {Scheme::link, Scheme::central})
    for (Convention c : {Convention::paper, Convention::standard}) {
      Gradient4 gr = gradient(A, u, c, s);
      double want = inner4(g, gr, dA, du);
      auto at = [&](double t) {
        GaugeField4 At = A;
        SpinorField4 ut = u;
        for (int mu = 0; mu < 4; ++mu)
          for (std::size_t i = 0; i < At.mu[0].v.size(); ++i)
            At.mu[static_cast<std::size_t>(mu)].v[i] +=
                t * dA.mu[static_cast<std::size_t>(mu)].v[i];
        for (std::size_t i = 0; i < ut.w.size(); ++i)
          ut.set_site(i, ut.site(i) + t * du.site(i));
        return energy(At, ut, c, s);
      };
      double fd = (at(eps) - at(-eps)) / (2 * eps);
      CHECK(std::fabs(fd - want) < 1e-6 * (1 + std::fabs(want)));
    }
}

TEST_CASE("gradient matches finite differences, reduced") {
  Grid2 g{{6, 4}, {1, 1}};
  Transverse tv{0.25, 0.5};
  ReducedConfig c(g);
  c.a0 = random_smooth_field2(g, 2201, 3, 0.8);
  c.a1 = random_smooth_field2(g, 2202, 3, 0.8);
  c.phi1 = random_smooth_field2(g, 2203, 3, 0.8);
  c.phi2 = random_smooth_field2(g, 2204, 3, 0.8);
  c.u = random_smooth_spinor2(g, 2205, 3, 0.8);
  ReducedConfig d(g);
  d.a0 = random_smooth_field2(g, 2211, 3, 1.0);
  d.a1 = random_smooth_field2(g, 2212, 3, 1.0);
  d.phi1 = random_smooth_field2(g, 2213, 3, 1.0);
  d.phi2 = random_smooth_field2(g, 2214, 3, 1.0);
  d.u = random_smooth_spinor2(g, 2215, 3, 1.0);
  const double eps = 1e-5;
  for (Scheme s : {Scheme::link, Scheme::central}) {
    Gradient2 gr = gradient2(c, s, tv);
    double want = 0;
    for (std::size_t i = 0; i < gr.a0.v.size(); ++i)
      want += gr.a0.v[i] * d.a0.v[i] + gr.a1.v[i] * d.a1.v[i] + gr.phi1.v[i] * d.phi1.v[i] +
              gr.phi2.v[i] * d.phi2.v[i] + dot(gr.u.site(i), d.u.site(i));
    want *= g.cell();
    auto at = [&](double t) {
      ReducedConfig ct = c;
      for (std::size_t i = 0; i < ct.a0.v.size(); ++i) {
        ct.a0.v[i] += t * d.a0.v[i];
        ct.a1.v[i] += t * d.a1.v[i];
        ct.phi1.v[i] += t * d.phi1.v[i];
        ct.phi2.v[i] += t * d.phi2.v[i];
        ct.u.set_site(i, ct.u.site(i) + t * d.u.site(i));
      }
      return energy2(ct, s, tv);
    };
    double fd = (at(eps) - at(-eps)) / (2 * eps);
    CHECK(std::fabs(fd - want) < 1e-6 * (1 + std::fabs(want)));
  }
}

TEST_CASE("gradient is orthogonal to gauge orbits in the link scheme") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  for (int t = 0; t < 5; ++t) {
    auto s = static_cast<std::uint64_t>(2300 + 10 * t);
    GaugeField4 A = random_smooth_gauge(g, s, 3, 0.8);
    SpinorField4 u = random_smooth_spinor(g, s + 1, 3, 0.9);
    ScalarField4 eps = random_smooth_field(g, s + 2, 3, 1.0);
    TangentVector4 v = gauge_tangent(eps, u);
    Gradient4 gr = gradient(A, u, Convention::paper, Scheme::link);
    GaugeField4 dA(g);
    dA.mu[0] = v.a0;
    dA.mu[1] = v.a1;
    dA.mu[2] = v.c2;
    dA.mu[3] = v.c3;
    double ip = inner4(g, gr, dA, v.zeta);
    double scale = 1 + std::sqrt(tangent_norm2(v));
    CHECK(std::fabs(ip) < 1e-10 * scale);
  }
}

TEST_CASE("descend: monotone energies and exact gauge equivariance of the trace") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  GaugeField4 A = random_smooth_gauge(g, 2401, 2, 0.3);
  SpinorField4 u = random_smooth_spinor(g, 2402, 2, 0.3);
  SolveSettings st;
  st.max_steps = 40;
  st.step_size = 2e-3;
  st.tol = 0.0;
  st.report_every = 1;
  DescendResult r = descend(A, u, st);
  REQUIRE(r.trace.size() >= 2);
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    CHECK(r.trace[i].energy <= r.trace[i - 1].energy * (1 + 1e-14));
  CHECK(r.final_energy == r.trace.back().energy);

  ScalarField4 theta = random_smooth_field(g, 2403, 2, 1.0);
  auto [Ag, ug] = gauge_transform(theta, A, u);
  DescendResult rg = descend(Ag, ug, st);
  REQUIRE(rg.trace.size() == r.trace.size());
  for (std::size_t i = 0; i < r.trace.size(); ++i)
    CHECK(std::fabs(r.trace[i].energy - rg.trace[i].energy) < 1e-10 * (1 + r.trace[i].energy));
  // Final configurations are related by the same fixed transform.
  auto [Af, uf] = gauge_transform(theta, r.A, r.u);
  double worst = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (std::size_t i = 0; i < Af.mu[0].v.size(); ++i)
      worst = std::max(worst, std::fabs(Af.mu[static_cast<std::size_t>(mu)].v[i] -
                                        rg.A.mu[static_cast<std::size_t>(mu)].v[i]));
  for (std::size_t i = 0; i < uf.w.size(); ++i)
    worst = std::max(worst, norm(uf.site(i) - rg.u.site(i)));
  CHECK(worst < 1e-8);
}

TEST_CASE("reduced solve reaches 1e-6 and lifts with identical residual") {
  Grid2 g{{16, 16}, {1, 1}};
  Grid4 g4{{16, 16, 4, 4}, {1, 1, 1, 1}};
  Transverse tv{g4.spacing(2), g4.spacing(3)};
  ReducedConfig c(g);
  c.a0 = random_smooth_field2(g, 2501, 2, 1e-4);
  c.a1 = random_smooth_field2(g, 2502, 2, 1e-4);
  c.phi1 = random_smooth_field2(g, 2503, 2, 1e-4);
  c.phi2 = random_smooth_field2(g, 2504, 2, 1e-4);
  c.u = random_smooth_spinor2(g, 2505, 2, 1e-4);
  SolveSettings st;
  st.max_steps = 20000;
  st.tol = 1e-6;
  st.report_every = 500;
  Solve2Result r = solve_reduced(c, st, tv);
  CHECK(r.converged);
  auto [c2, d2] = residual_norms2(r.c, Scheme::link, tv);
  double r2 = std::sqrt(c2 * c2 + d2 * d2);
  CHECK(r2 < 1e-6);

  auto [A, U] = lift_config(r.c, g4);
  auto [c4, d4] = residual_norms(A, U, Convention::paper, Scheme::link);
  double r4 = std::sqrt(c4 * c4 + d4 * d4);
  CHECK(r4 < 1e-6);
  CHECK(std::fabs(r4 - r2) < 1e-12 * (1 + r2));
  CHECK(std::fabs(c4 - c2) < 1e-12 * (1 + c2));
  CHECK(std::fabs(d4 - d2) < 1e-12 * (1 + d2));
}

TEST_CASE("trace rows: step zero first, final row matches result") {
  Grid2 g{{8, 8}, {1, 1}};
  ReducedConfig c(g);
  c.a0 = random_smooth_field2(g, 2601, 2, 0.01);
  c.u = random_smooth_spinor2(g, 2602, 2, 0.01);
  SolveSettings st;
  st.max_steps = 57;
  st.tol = 0.0;
  st.report_every = 10;
  Solve2Result r = solve_reduced(c, st, Transverse{0.25, 0.25});
  REQUIRE(!r.trace.empty());
  CHECK(r.trace.front().step == 0);
  CHECK(r.trace.back().step == r.steps);
  CHECK(r.trace.back().energy == r.final_energy);
  for (const TraceRow& row : r.trace) {
    double e = row.curvature_residual * row.curvature_residual +
               row.dirac_residual * row.dirac_residual;
    CHECK(std::fabs(e - row.energy) < 1e-12 * (1 + row.energy));
  }
}
