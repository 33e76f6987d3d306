#include <sw/symplectic.hpp>

#include <sw/kernels.hpp>
#include <sw/random.hpp>

#include <cmath>
#include <stdexcept>

namespace sw {
namespace {

void pcross(std::vector<double>& out, const std::vector<double>& p, const std::vector<double>& q,
            const std::vector<double>& r, const std::vector<double>& s) {
  kernels::parallel_for(out.size(), [&](std::size_t b, std::size_t e) {
    kernels::cross(out.data() + b, p.data() + b, q.data() + b, r.data() + b, s.data() + b, e - b);
  });
}

template <class SF>
void pkahler(std::vector<double>& out, const SF& a, const SF& b) {
  kernels::parallel_for(out.size(), [&](std::size_t be, std::size_t en) {
    kernels::kahler_dot(out.data() + be, a.w.data() + be, a.x.data() + be, a.y.data() + be,
                        a.z.data() + be, b.w.data() + be, b.x.data() + be, b.y.data() + be,
                        b.z.data() + be, en - be);
  });
}

void pmul(std::vector<double>& out, const std::vector<double>& a, const std::vector<double>& b) {
  kernels::parallel_for(out.size(), [&](std::size_t be, std::size_t en) {
    for (std::size_t i = be; i < en; ++i) out[i] = a[i] * b[i];
  });
}

void paxpy(std::vector<double>& y, double a, const std::vector<double>& x) {
  kernels::parallel_for(y.size(), [&](std::size_t b, std::size_t e) {
    kernels::axpy(y.data() + b, a, x.data() + b, e - b);
  });
}

// Spinor sector of omega: (1/4) Int <i z1, z2> f1 f2.
double spinor_sector(const SpinorField4& z1, const SpinorField4& z2, const Weights4& w) {
  const std::size_t n = z1.w.size();
  std::vector<double> t(n), tf(n);
  pkahler(t, z1, z2);
  pmul(tf, t, w.f1.v);
  return 0.25 * kernels::dot_sum(tf.data(), w.f2.v.data(), n);
}

}  // namespace

void validate(const FormConventions& fc) {
  for (double s : {fc.wedge_sign, fc.twist_form, fc.twist_spinor, fc.orientation})
    if (s != 1.0 && s != -1.0)
      throw std::invalid_argument("form convention entries must be +1 or -1");
}

double omega(const TangentVector4& a, const TangentVector4& b, const Weights4& w,
             const FormConventions& fc) {
  const std::size_t n = a.a0.v.size();
  const double cell = a.a0.grid.cell();
  std::vector<double> t(n);
  pcross(t, a.a0.v, b.a1.v, a.a1.v, b.a0.v);
  double form = kernels::dot_sum(t.data(), w.f2.v.data(), n);
  pcross(t, a.c2.v, b.c3.v, a.c3.v, b.c2.v);
  form += kernels::dot_sum(t.data(), w.f1.v.data(), n);
  double spin = spinor_sector(a.zeta, b.zeta, w);
  return fc.orientation * cell * (0.25 * fc.wedge_sign * form + spin);
}

double omega_cross_check(const TangentVector4& a, const TangentVector4& b, const Weights4& w,
                         const FormConventions& fc) {
  const std::size_t n = a.a0.v.size();
  const double cell = a.a0.grid.cell();
  const std::vector<double>* pa[4] = {&a.a0.v, &a.a1.v, &a.c2.v, &a.c3.v};
  const std::vector<double>* pb[4] = {&b.a0.v, &b.a1.v, &b.c2.v, &b.c3.v};
  std::vector<double> zero(n, 0.0);
  // Kahler 2-form components in coordinate slots; only 01 and 23 are nonzero.
  const std::vector<double>* om[4][4] = {};
  om[0][1] = &w.f1.v;
  om[2][3] = &w.f2.v;
  om[0][2] = om[0][3] = om[1][2] = om[1][3] = &zero;
  // (P ^ Q)_{0123} for 2-forms P, Q.
  struct Pairing {
    int i, j, k, l;
    double s;
  };
  static constexpr Pairing terms[6] = {{0, 1, 2, 3, 1.0}, {2, 3, 0, 1, 1.0},  {0, 2, 1, 3, -1.0},
                                       {1, 3, 0, 2, -1.0}, {0, 3, 1, 2, 1.0}, {1, 2, 0, 3, 1.0}};
  std::vector<double> t(n);
  double form = 0;
  for (const Pairing& p : terms) {
    int i = p.i < p.j ? p.i : p.j, j = p.i < p.j ? p.j : p.i;
    double flip = p.i < p.j ? 1.0 : -1.0;
    pcross(t, *pa[i], *pb[j], *pa[j], *pb[i]);
    form += p.s * flip * kernels::dot_sum(t.data(), om[p.k][p.l]->data(), n);
  }
  double spin = spinor_sector(a.zeta, b.zeta, w);
  return fc.orientation * cell * (0.25 * fc.wedge_sign * form + spin);
}

double omega_at(const GaugeField4&, const SpinorField4&, const TangentVector4& a,
                const TangentVector4& b, const Weights4& w, const FormConventions& fc) {
  return omega(a, b, w, fc);
}

double omega1_sigma(const ReducedTangent& X, const ReducedTangent& Y, const ScalarField2& f,
                    const FormConventions& fc) {
  const std::size_t n = X.a0.v.size();
  const double cell = X.a0.grid.cell();
  std::vector<double> t(n);
  pcross(t, X.a0.v, Y.a1.v, X.a1.v, Y.a0.v);
  double form = kernels::sum(t.data(), n);
  pcross(t, X.e0.v, Y.e1.v, X.e1.v, Y.e0.v);
  form += kernels::sum(t.data(), n);
  pkahler(t, X.xi, Y.xi);
  double spin = kernels::dot_sum(t.data(), f.v.data(), n);
  return fc.orientation * cell * (0.5 * fc.wedge_sign * form + 0.25 * spin);
}

double gc_metric(const ReducedTangent& X, const ReducedTangent& Y, const ScalarField2& f) {
  const std::size_t n = X.a0.v.size();
  const double cell = X.a0.grid.cell();
  double form = kernels::dot_sum(X.a0.v.data(), Y.a0.v.data(), n) +
                kernels::dot_sum(X.a1.v.data(), Y.a1.v.data(), n) +
                kernels::dot_sum(X.e0.v.data(), Y.e0.v.data(), n) +
                kernels::dot_sum(X.e1.v.data(), Y.e1.v.data(), n);
  std::vector<double> t(n);
  kernels::parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      t[i] = X.xi.w[i] * Y.xi.w[i] + X.xi.x[i] * Y.xi.x[i] + X.xi.y[i] * Y.xi.y[i] +
             X.xi.z[i] * Y.xi.z[i];
  });
  double spin = kernels::dot_sum(t.data(), f.v.data(), n);
  return cell * (0.5 * form + 0.25 * spin);
}

ReducedTangent pushforward_psi1(const TangentVector4& a, int p2, int p3) {
  ReducedTangent r;
  r.a0 = slice1(a.a0, p2, p3);
  r.a1 = slice1(a.a1, p2, p3);
  r.xi = slice1(a.zeta, p2, p3);
  r.e0 = slice1(a.c2, p2, p3);
  r.e1 = slice1(a.c3, p2, p3);
  return r;
}

ReducedTangent pushforward_psi2(const TangentVector4& a, int q0, int q1) {
  ReducedTangent r;
  r.a0 = slice2(a.c2, q0, q1);
  r.a1 = slice2(a.c3, q0, q1);
  r.xi = slice2(a.zeta, q0, q1);
  r.e0 = slice2(a.a0, q0, q1);
  r.e1 = slice2(a.a1, q0, q1);
  return r;
}

double omega_y(const TangentVector4& a, const TangentVector4& b, const KahlerData& k,
               std::array<int, 2> p, std::array<int, 2> q, const FormConventions& fc) {
  const Grid4& g = a.a0.grid;
  const Grid2 s1 = factor1(g), s2 = factor2(g);
  // First slice: the first factor with the second frozen at p.
  double form1 = 0, spin1 = 0;
  for (int x0 = 0; x0 < s1.n[0]; ++x0)
    for (int x1 = 0; x1 < s1.n[1]; ++x1) {
      auto i = static_cast<std::size_t>(g.index({x0, x1, p[0], p[1]}));
      form1 += a.a0.v[i] * b.a1.v[i] - a.a1.v[i] * b.a0.v[i] + a.c2.v[i] * b.c3.v[i] -
               a.c3.v[i] * b.c2.v[i];
      spin1 += kahler_pairing(a.zeta.site(i), b.zeta.site(i)) *
               k.f1.v[static_cast<std::size_t>(s1.index({x0, x1}))];
    }
  // Second slice: the second factor with the first frozen at q.
  double form2 = 0, spin2 = 0;
  for (int x2 = 0; x2 < s2.n[0]; ++x2)
    for (int x3 = 0; x3 < s2.n[1]; ++x3) {
      auto i = static_cast<std::size_t>(g.index({q[0], q[1], x2, x3}));
      form2 += a.c2.v[i] * b.c3.v[i] - a.c3.v[i] * b.c2.v[i] + a.a0.v[i] * b.a1.v[i] -
               a.a1.v[i] * b.a0.v[i];
      spin2 += kahler_pairing(a.zeta.site(i), b.zeta.site(i)) *
               k.f2.v[static_cast<std::size_t>(s2.index({x2, x3}))];
    }
  return fc.orientation * (s1.cell() * (0.5 * fc.wedge_sign * form1 + 0.25 * spin1) +
                           s2.cell() * (0.5 * fc.wedge_sign * form2 + 0.25 * spin2));
}

double pullback_pair_sum(const TangentVector4& a, const TangentVector4& b, const KahlerData& k,
                         std::array<int, 2> p, std::array<int, 2> q, const FormConventions& fc) {
  return omega1_sigma(pushforward_psi1(a, p[0], p[1]), pushforward_psi1(b, p[0], p[1]), k.f1, fc) +
         omega1_sigma(pushforward_psi2(a, q[0], q[1]), pushforward_psi2(b, q[0], q[1]), k.f2, fc);
}

double pullback_identity_defect(const TangentVector4& a, const TangentVector4& b,
                                const KahlerData& k, std::array<int, 2> p, std::array<int, 2> q,
                                double kappa, const FormConventions& fc) {
  return std::fabs(omega_y(a, b, k, p, q, fc) - kappa * pullback_pair_sum(a, b, k, p, q, fc));
}

TangentVector4 twist(const TangentVector4& a, const FormConventions& fc) {
  TangentVector4 r(a.a0.grid);
  const double s1 = fc.twist_form, s2 = fc.twist_spinor;
  kernels::parallel_for(r.a0.v.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      r.a0.v[i] = s1 * (-a.a1.v[i]);
      r.a1.v[i] = s1 * a.a0.v[i];
      r.c2.v[i] = s1 * (-a.c3.v[i]);
      r.c3.v[i] = s1 * a.c2.v[i];
      // i zeta = (-x, w, -z, y)
      r.zeta.w[i] = s2 * (-a.zeta.x[i]);
      r.zeta.x[i] = s2 * a.zeta.w[i];
      r.zeta.y[i] = s2 * (-a.zeta.z[i]);
      r.zeta.z[i] = s2 * a.zeta.y[i];
    }
  });
  return r;
}

double tangent_norm2(const TangentVector4& a) {
  return l2norm2(a.a0) + l2norm2(a.a1) + l2norm2(a.c2) + l2norm2(a.c3) + l2norm2(a.zeta);
}

double moment_pairing(const ScalarField4& eps, const GaugeField4& A, const SpinorField4& u,
                      const Weights4& w, Convention conv, Scheme scheme) {
  SelfDual4 chi = residual_chi(A, u, conv, scheme);
  ScalarField4 prod(eps.grid);
  pmul(prod.v, eps.v, chi.k1.v);
  return integrate_wedge(prod, w);
}

double gauge_hamiltonian(const ScalarField4& eps, const GaugeField4& A, const SpinorField4& u,
                         const Weights4& w, const FormConventions& fc) {
  const std::size_t n = eps.v.size();
  const double cell = eps.grid.cell();
  ScalarField4 d01 = bwd_diff(A.mu[1], 0), d10 = bwd_diff(A.mu[0], 1);
  ScalarField4 d23 = bwd_diff(A.mu[3], 2), d32 = bwd_diff(A.mu[2], 3);
  std::vector<double> t(n), et(n);
  kernels::parallel_for(n, [&](std::size_t b, std::size_t e) {
    kernels::diff(t.data() + b, d01.v.data() + b, d10.v.data() + b, 1.0, e - b);
  });
  pmul(et, eps.v, t);
  double form = kernels::dot_sum(et.data(), w.f2.v.data(), n);
  kernels::parallel_for(n, [&](std::size_t b, std::size_t e) {
    kernels::diff(t.data() + b, d23.v.data() + b, d32.v.data() + b, 1.0, e - b);
  });
  pmul(et, eps.v, t);
  form += kernels::dot_sum(et.data(), w.f1.v.data(), n);
  std::vector<double> nr(n), ef(n);
  kernels::parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      nr[i] = u.w[i] * u.w[i] + u.x[i] * u.x[i] + u.y[i] * u.y[i] + u.z[i] * u.z[i];
      nr[i] *= eps.v[i];
    }
  });
  pmul(ef, nr, w.f1.v);
  double spin = kernels::dot_sum(ef.data(), w.f2.v.data(), n);
  return fc.orientation * cell * (-fc.wedge_sign * 0.25 * form + 0.125 * spin);
}

std::pair<double, double> moment_identity_sides(const ScalarField4& eps, const TangentVector4& b,
                                                const GaugeField4& A, const SpinorField4& u,
                                                const Weights4& w, const FormConventions& fc,
                                                double step) {
  double lhs = omega(gauge_tangent(eps, u), b, w, fc);
  auto at = [&](double t) {
    GaugeField4 At = A;
    paxpy(At.mu[0].v, t, b.a0.v);
    paxpy(At.mu[1].v, t, b.a1.v);
    paxpy(At.mu[2].v, t, b.c2.v);
    paxpy(At.mu[3].v, t, b.c3.v);
    SpinorField4 ut = u;
    paxpy(ut.w, t, b.zeta.w);
    paxpy(ut.x, t, b.zeta.x);
    paxpy(ut.y, t, b.zeta.y);
    paxpy(ut.z, t, b.zeta.z);
    return gauge_hamiltonian(eps, At, ut, w, fc);
  };
  double dh = (at(step) - at(-step)) / (2 * step);
  return {lhs, dh};
}

double moment_identity_defect(const ScalarField4& eps, const TangentVector4& b,
                              const GaugeField4& A, const SpinorField4& u, const Weights4& w,
                              const FormConventions& fc, double kappa_m, double step) {
  auto [lhs, dh] = moment_identity_sides(eps, b, A, u, w, fc, step);
  return std::fabs(lhs - kappa_m * dh);
}

TangentVector4 random_tangent(const Grid4& g, std::uint64_t seed, int modes, double amp) {
  TangentVector4 a(g);
  a.a0 = random_smooth_field(g, seed, modes, amp);
  a.a1 = random_smooth_field(g, seed + 1, modes, amp);
  a.c2 = random_smooth_field(g, seed + 2, modes, amp);
  a.c3 = random_smooth_field(g, seed + 3, modes, amp);
  a.zeta = random_smooth_spinor(g, seed + 4, modes, amp);
  return a;
}

}  // namespace sw
