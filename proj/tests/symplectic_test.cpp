// The 2-form on configuration space, its slice restriction identity, the
// compatible twist, and the Hamiltonian property of the gauge action.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sw/lattice.hpp>
#include <sw/random.hpp>
#include <sw/symplectic.hpp>

#include <cmath>

using namespace sw;

namespace {

TangentVector4 spinor_only(const Grid4& g, Quat q) {
  TangentVector4 a(g);
  for (std::size_t i = 0; i < a.zeta.w.size(); ++i) a.zeta.set_site(i, q);
  return a;
}

double tangent_scale(const TangentVector4& a) { return std::sqrt(tangent_norm2(a)) + 1.0; }

TangentVector4 lincomb(double al, const TangentVector4& a, double be, const TangentVector4& b) {
  TangentVector4 r(a.a0.grid);
  for (std::size_t i = 0; i < r.a0.v.size(); ++i) {
    r.a0.v[i] = al * a.a0.v[i] + be * b.a0.v[i];
    r.a1.v[i] = al * a.a1.v[i] + be * b.a1.v[i];
    r.c2.v[i] = al * a.c2.v[i] + be * b.c2.v[i];
    r.c3.v[i] = al * a.c3.v[i] + be * b.c3.v[i];
    r.zeta.set_site(i, al * a.zeta.site(i) + be * b.zeta.site(i));
  }
  return r;
}

}  // namespace

TEST_CASE("omega: frozen pure-spinor value and antisymmetry") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  KahlerData k = constant_kahler(factor1(g), factor2(g));
  Weights4 w = lift_weights(g, k);
  FormConventions fc;

  TangentVector4 a = spinor_only(g, {1, 0, 0, 0});
  TangentVector4 b = spinor_only(g, {0, 1, 0, 0});
  CHECK(omega(a, b, w, fc) == 0.25);
  CHECK(omega(b, a, w, fc) == -0.25);

  for (int t = 0; t < 20; ++t) {
    auto s = static_cast<std::uint64_t>(900 + 10 * t);
    TangentVector4 p = random_tangent(g, s, 3, 0.8);
    TangentVector4 q = random_tangent(g, s + 5, 3, 0.8);
    double scale = tangent_scale(p) * tangent_scale(q);
    CHECK(std::fabs(omega(p, q, w, fc) + omega(q, p, w, fc)) < 1e-13 * scale);
  }
}

TEST_CASE("omega: bilinearity and gauge invariance of the spinor sector") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  KahlerData k = harmonic_kahler(factor1(g), factor2(g), 0.3, 0.4);
  Weights4 w = lift_weights(g, k);
  FormConventions fc;

  TangentVector4 a = random_tangent(g, 71, 3, 0.9);
  TangentVector4 b = random_tangent(g, 72, 3, 0.9);
  TangentVector4 c = random_tangent(g, 73, 3, 0.9);
  double al = -0.7, be = 1.3;
  double lhs = omega(lincomb(al, a, be, b), c, w, fc);
  double rhs = al * omega(a, c, w, fc) + be * omega(b, c, w, fc);
  CHECK(std::fabs(lhs - rhs) < 1e-12 * (1 + std::fabs(lhs)));

  ScalarField4 theta = random_smooth_field(g, 74, 3, 1.1);
  TangentVector4 ag = a, bg = b;
  for (std::size_t i = 0; i < theta.v.size(); ++i) {
    Quat ph = u1_phase(-theta.v[i]);
    ag.zeta.set_site(i, ph * a.zeta.site(i));
    bg.zeta.set_site(i, ph * b.zeta.site(i));
  }
  double o1 = omega(a, b, w, fc), o2 = omega(ag, bg, w, fc);
  CHECK(std::fabs(o1 - o2) < 1e-12 * (1 + std::fabs(o1)));
}

TEST_CASE("omega_at: value independent of the carried base point") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  Weights4 w = lift_weights(g, constant_kahler(factor1(g), factor2(g), 2.0, 0.5));
  FormConventions fc;
  TangentVector4 a = random_tangent(g, 81, 3, 0.8);
  TangentVector4 b = random_tangent(g, 82, 3, 0.8);
  double ref = omega(a, b, w, fc);
  for (int t = 0; t < 5; ++t) {
    GaugeField4 A = random_smooth_gauge(g, static_cast<std::uint64_t>(830 + t), 3, 1.0);
    SpinorField4 u = random_smooth_spinor(g, static_cast<std::uint64_t>(840 + t), 3, 1.0);
    CHECK(omega_at(A, u, a, b, w, fc) == ref);
  }
}

TEST_CASE("omega_cross_check: mixed wedge blocks contribute nothing") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  Weights4 w = lift_weights(g, harmonic_kahler(factor1(g), factor2(g), 0.25, 0.5));
  FormConventions fc;

  // Pure connection leg against pure Higgs leg: both routes vanish.
  TangentVector4 a(g), b(g);
  a.a0 = random_smooth_field(g, 91, 3, 0.8);
  a.a1 = random_smooth_field(g, 92, 3, 0.8);
  b.c2 = random_smooth_field(g, 93, 3, 0.8);
  b.c3 = random_smooth_field(g, 94, 3, 0.8);
  CHECK(omega(a, b, w, fc) == 0.0);
  CHECK(omega_cross_check(a, b, w, fc) == 0.0);

  for (int t = 0; t < 30; ++t) {
    auto s = static_cast<std::uint64_t>(950 + 10 * t);
    TangentVector4 p = random_tangent(g, s, 3, 0.8);
    TangentVector4 q = random_tangent(g, s + 5, 3, 0.8);
    double scale = tangent_scale(p) * tangent_scale(q);
    CHECK(std::fabs(omega(p, q, w, fc) - omega_cross_check(p, q, w, fc)) < 1e-13 * scale);
  }
}

TEST_CASE("twist: positivity, quarter-norm at unit weights, twist^2 = -1") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  Weights4 w = lift_weights(g, constant_kahler(factor1(g), factor2(g)));
  FormConventions fc;

  for (int t = 0; t < 50; ++t) {
    TangentVector4 a = random_tangent(g, static_cast<std::uint64_t>(1100 + 10 * t), 3, 0.8);
    double q = omega(a, twist(a, fc), w, fc);
    double n2 = tangent_norm2(a);
    CHECK(q > 0.0);
    CHECK(std::fabs(q - 0.25 * n2) < 1e-13 * n2);
  }

  TangentVector4 a = random_tangent(g, 1301, 3, 0.8);
  TangentVector4 tt = twist(twist(a, fc), fc);
  double worst = 0;
  for (std::size_t i = 0; i < a.a0.v.size(); ++i) {
    worst = std::max(worst, std::fabs(tt.a0.v[i] + a.a0.v[i]));
    worst = std::max(worst, std::fabs(tt.c3.v[i] + a.c3.v[i]));
    worst = std::max(worst, norm(tt.zeta.site(i) + a.zeta.site(i)));
  }
  CHECK(worst == 0.0);

  // Corrupting the wedge sign destroys definiteness but not the cross-check.
  FormConventions bad = fc;
  bad.wedge_sign = 1.0;
  TangentVector4 p(g);
  p.a0 = random_smooth_field(g, 1401, 3, 0.8);
  CHECK(omega(p, twist(p, bad), w, bad) < 0.0);
  CHECK(std::fabs(omega(p, twist(p, bad), w, bad) - omega_cross_check(p, twist(p, bad), w, bad)) <
        1e-13 * tangent_norm2(p));
}

TEST_CASE("form conventions validate to sign entries") {
  FormConventions fc;
  validate(fc);
  fc.twist_form = 0.5;
  CHECK_THROWS(validate(fc));
}

TEST_CASE("omega1_sigma and gc_metric: frozen values and positivity") {
  Grid2 s{{4, 4}, {1, 1}};
  ScalarField2 f(s);
  for (auto& e : f.v) e = 1.0;
  FormConventions fc;

  ReducedTangent X(s), Y(s);
  for (std::size_t i = 0; i < X.xi.w.size(); ++i) X.xi.set_site(i, {1, 0, 0, 0});
  for (std::size_t i = 0; i < Y.xi.w.size(); ++i) Y.xi.set_site(i, {0, 1, 0, 0});
  CHECK(omega1_sigma(X, Y, f, fc) == 0.25);
  CHECK(gc_metric(X, X, f) == 0.25);

  ReducedTangent Z(s);
  Z.a0 = random_smooth_field2(s, 1501, 3, 0.8);
  Z.a1 = random_smooth_field2(s, 1502, 3, 0.8);
  Z.e0 = random_smooth_field2(s, 1503, 3, 0.8);
  Z.e1 = random_smooth_field2(s, 1504, 3, 0.8);
  Z.xi = random_smooth_spinor2(s, 1505, 3, 0.8);
  CHECK(gc_metric(Z, Z, f) > 0.0);
}

TEST_CASE("slice restriction identity: omega_y equals the pullback sum, kappa = 1") {
  Grid4 g{{6, 4, 4, 6}, {1, 1, 0.5, 2}};
  KahlerData k = harmonic_kahler(factor1(g), factor2(g), 0.3, 0.4);
  FormConventions fc;

  double sxy = 0, sxx = 0, worst = 0;
  for (int t = 0; t < 20; ++t) {
    auto s = static_cast<std::uint64_t>(1600 + 10 * t);
    TangentVector4 a = random_tangent(g, s, 3, 0.9);
    TangentVector4 b = random_tangent(g, s + 5, 3, 0.9);
    std::array<int, 2> p{t % g.n[2], (3 * t) % g.n[3]};
    std::array<int, 2> q{(t + 1) % g.n[0], (2 * t) % g.n[1]};
    double oy = omega_y(a, b, k, p, q, fc);
    double ps = pullback_pair_sum(a, b, k, p, q, fc);
    sxy += ps * oy;
    sxx += ps * ps;
    double scale = tangent_scale(a) * tangent_scale(b);
    worst = std::max(worst, pullback_identity_defect(a, b, k, p, q, 1.0, fc) / scale);
  }
  CHECK(worst < 1e-12);
  CHECK(std::fabs(sxy / sxx - 1.0) < 1e-12);
}

TEST_CASE("pushforward wiring: slices land in the right slots") {
  Grid4 g{{6, 4, 4, 6}, {1, 1, 1, 1}};
  TangentVector4 a = random_tangent(g, 1701, 3, 0.9);
  ReducedTangent r1 = pushforward_psi1(a, 2, 5);
  CHECK(r1.a0.v == slice1(a.a0, 2, 5).v);
  CHECK(r1.e1.v == slice1(a.c3, 2, 5).v);
  CHECK(r1.xi.w == slice1(a.zeta, 2, 5).w);
  ReducedTangent r2 = pushforward_psi2(a, 3, 1);
  CHECK(r2.a0.v == slice2(a.c2, 3, 1).v);
  CHECK(r2.e0.v == slice2(a.a0, 3, 1).v);
  CHECK(r2.xi.z == slice2(a.zeta, 3, 1).z);
}

TEST_CASE("moment pairing: frozen values") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  Weights4 w = lift_weights(g, constant_kahler(factor1(g), factor2(g)));
  GaugeField4 A(g);
  SpinorField4 u(g);
  for (std::size_t i = 0; i < u.w.size(); ++i) u.set_site(i, {1, 0, 0, 0});
  ScalarField4 one(g);
  for (auto& e : one.v) e = 1.0;
  CHECK(moment_pairing(one, A, u, w, Convention::paper, Scheme::link) == -0.125);
  FormConventions fc;
  CHECK(gauge_hamiltonian(one, A, u, w, fc) == 0.125);
}

TEST_CASE("gauge action is Hamiltonian for omega with kappa_m = 1") {
  Grid4 g{{4, 4, 4, 4}, {1, 1, 1, 1}};
  FormConventions fc;
  for (int t = 0; t < 8; ++t) {
    auto s = static_cast<std::uint64_t>(1800 + 20 * t);
    KahlerData k = (t % 2 == 0) ? harmonic_kahler(factor1(g), factor2(g), 0.25, 0.35)
                                : constant_kahler(factor1(g), factor2(g), 2.0, 3.0);
    Weights4 w = lift_weights(g, k);
    GaugeField4 A = random_smooth_gauge(g, s, 3, 0.8);
    SpinorField4 u = random_smooth_spinor(g, s + 4, 3, 0.8);
    ScalarField4 eps = random_smooth_field(g, s + 5, 3, 1.0);
    TangentVector4 b = random_tangent(g, s + 6, 3, 0.8);
    auto [lhs, dh] = moment_identity_sides(eps, b, A, u, w, fc);
    double scale = 1 + std::fabs(lhs) + std::fabs(dh);
    CHECK(std::fabs(lhs - dh) < 1e-9 * scale);
    CHECK(moment_identity_defect(eps, b, A, u, w, fc, 1.0) < 1e-9 * scale);
  }
}
