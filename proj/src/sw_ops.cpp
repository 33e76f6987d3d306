#include <sw/sw_ops.hpp>

#include <sw/kernels.hpp>

#include <cmath>
#include <stdexcept>

namespace sw {
namespace {

// Elementwise wrappers driving the site kernels over fixed chunks.
void pdiff(std::vector<double>& out, const std::vector<double>& p, const std::vector<double>& q,
           double s) {
  kernels::parallel_for(out.size(), [&](std::size_t b, std::size_t e) {
    kernels::diff(out.data() + b, p.data() + b, q.data() + b, s, e - b);
  });
}

void paxpy(std::vector<double>& y, double a, const std::vector<double>& x) {
  kernels::parallel_for(y.size(), [&](std::size_t b, std::size_t e) {
    kernels::axpy(y.data() + b, a, x.data() + b, e - b);
  });
}

// c = cos(h a), s = sin(h a) per site.
void phase_arrays(const std::vector<double>& a, double h, std::vector<double>& c,
                  std::vector<double>& s) {
  c.resize(a.size());
  s.resize(a.size());
  kernels::parallel_for(a.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      double t = h * a[i];
      c[i] = std::cos(t);
      s[i] = std::sin(t);
    }
  });
}

template <class SF>
void u1_rotate(SF& out, const std::vector<double>& c, const std::vector<double>& s, const SF& in) {
  kernels::parallel_for(out.w.size(), [&](std::size_t b, std::size_t e) {
    kernels::u1_apply(out.w.data() + b, out.x.data() + b, out.y.data() + b, out.z.data() + b,
                      c.data() + b, s.data() + b, in.w.data() + b, in.x.data() + b,
                      in.y.data() + b, in.z.data() + b, e - b);
  });
}

// acc += prefix_mu * d with prefixes (-1, i, j, k), left multiplication.
template <class SF>
void add_prefixed(SF& acc, const SF& d, int mu) {
  switch (mu) {
    case 0:
      paxpy(acc.w, -1.0, d.w); paxpy(acc.x, -1.0, d.x);
      paxpy(acc.y, -1.0, d.y); paxpy(acc.z, -1.0, d.z);
      break;
    case 1:  // i d = (-x, w, -z, y)
      paxpy(acc.w, -1.0, d.x); paxpy(acc.x, 1.0, d.w);
      paxpy(acc.y, -1.0, d.z); paxpy(acc.z, 1.0, d.y);
      break;
    case 2:  // j d = (-y, z, w, -x)
      paxpy(acc.w, -1.0, d.y); paxpy(acc.x, 1.0, d.z);
      paxpy(acc.y, 1.0, d.w); paxpy(acc.z, -1.0, d.x);
      break;
    default:  // k d = (-z, -y, x, w)
      paxpy(acc.w, -1.0, d.z); paxpy(acc.x, -1.0, d.y);
      paxpy(acc.y, 1.0, d.x); paxpy(acc.z, 1.0, d.w);
  }
}

template <class SF>
SF prefixed(const SF& d, int mu) {
  SF r(d.grid);
  add_prefixed(r, d, mu);
  return r;
}

// out += a * (i u) per site, i u = (-x, w, -z, y).
template <class SF>
void add_ia_u(SF& out, const std::vector<double>& a, const SF& u) {
  kernels::parallel_for(out.w.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      out.w[i] += a[i] * (-u.x[i]);
      out.x[i] += a[i] * u.w[i];
      out.y[i] += a[i] * (-u.z[i]);
      out.z[i] += a[i] * u.y[i];
    }
  });
}

ScalarField4 dm(const ScalarField4& f, int mu, Scheme s) {
  return s == Scheme::link ? fwd_diff(f, mu) : central_diff(f, mu);
}
ScalarField2 dm(const ScalarField2& f, int mu, Scheme s) {
  return s == Scheme::link ? fwd_diff(f, mu) : central_diff(f, mu);
}

// Link-scheme covariant derivative along mu: (exp(i h a) u(x+e) - u(x)) / h.
template <class SF>
SF link_deriv(const std::vector<double>& a, const SF& u, int mu, double h) {
  SF sh = shift(u, mu, +1);
  std::vector<double> c, s;
  phase_arrays(a, h, c, s);
  SF tmp(u.grid);
  u1_rotate(tmp, c, s, sh);
  SF out(u.grid);
  const double inv = 1.0 / h;
  pdiff(out.w, tmp.w, u.w, inv);
  pdiff(out.x, tmp.x, u.x, inv);
  pdiff(out.y, tmp.y, u.y, inv);
  pdiff(out.z, tmp.z, u.z, inv);
  return out;
}

// Central-scheme derivative along mu plus i a u.
template <class SF>
SF central_deriv(const std::vector<double>& a, const SF& u, int mu, double h) {
  SF up = shift(u, mu, +1), um = shift(u, mu, -1);
  SF out(u.grid);
  const double sc = 0.5 / h;
  pdiff(out.w, up.w, um.w, sc);
  pdiff(out.x, up.x, um.x, sc);
  pdiff(out.y, up.y, um.y, sc);
  pdiff(out.z, up.z, um.z, sc);
  add_ia_u(out, a, u);
  return out;
}

// Higgs-direction derivative with spacing h: link (exp(i h phi) - 1) u / h,
// central i phi u exactly.
SpinorField2 higgs_deriv(const std::vector<double>& phi, const SpinorField2& u, double h,
                         Scheme scheme) {
  SpinorField2 out(u.grid);
  if (scheme == Scheme::link) {
    std::vector<double> c, s;
    phase_arrays(phi, h, c, s);
    SpinorField2 tmp(u.grid);
    u1_rotate(tmp, c, s, u);
    const double inv = 1.0 / h;
    pdiff(out.w, tmp.w, u.w, inv);
    pdiff(out.x, tmp.x, u.x, inv);
    pdiff(out.y, tmp.y, u.y, inv);
    pdiff(out.z, tmp.z, u.z, inv);
  } else {
    add_ia_u(out, phi, u);
  }
  return out;
}

template <class KF, class SF>
void moment_fields(KF& m, const SF& u) {
  kernels::parallel_for(u.w.size(), [&](std::size_t b, std::size_t e) {
    kernels::moment(m.k1.v.data() + b, m.k2.v.data() + b, m.k3.v.data() + b, u.w.data() + b,
                    u.x.data() + b, u.y.data() + b, u.z.data() + b, e - b);
  });
}

}  // namespace

Curvature4 curvature(const GaugeField4& A, Scheme scheme) {
  const Grid4& g = A.grid;
  auto comp = [&](int mu, int nu) {
    ScalarField4 f(g);
    ScalarField4 a = dm(A.mu[static_cast<std::size_t>(nu)], mu, scheme);
    ScalarField4 b = dm(A.mu[static_cast<std::size_t>(mu)], nu, scheme);
    pdiff(f.v, a.v, b.v, 1.0);
    return f;
  };
  Curvature4 F;
  F.f01 = comp(0, 1);
  F.f02 = comp(0, 2);
  F.f03 = comp(0, 3);
  F.f12 = comp(1, 2);
  F.f13 = comp(1, 3);
  F.f23 = comp(2, 3);
  return F;
}

SelfDual4 fhat(const GaugeField4& A, Convention conv, Scheme scheme) {
  Curvature4 F = curvature(A, scheme);
  const Grid4& g = A.grid;
  SelfDual4 k{ScalarField4(g), ScalarField4(g), ScalarField4(g)};
  if (conv == Convention::paper) {
    pdiff(k.k1.v, F.f01.v, F.f23.v, 1.0);
  } else {
    k.k1.v = F.f01.v;
    paxpy(k.k1.v, 1.0, F.f23.v);
  }
  pdiff(k.k2.v, F.f02.v, F.f13.v, 1.0);
  k.k3.v = F.f03.v;
  paxpy(k.k3.v, 1.0, F.f12.v);
  return k;
}

SelfDual4 moment_of(const SpinorField4& u) {
  SelfDual4 m{ScalarField4(u.grid), ScalarField4(u.grid), ScalarField4(u.grid)};
  moment_fields(m, u);
  return m;
}

SelfDual2 moment_of2(const SpinorField2& u) {
  SelfDual2 m{ScalarField2(u.grid), ScalarField2(u.grid), ScalarField2(u.grid)};
  moment_fields(m, u);
  return m;
}

SelfDual4 residual_chi(const GaugeField4& A, const SpinorField4& u, Convention conv,
                       Scheme scheme) {
  SelfDual4 k = fhat(A, conv, scheme);
  SelfDual4 m = moment_of(u);
  SelfDual4 r{ScalarField4(A.grid), ScalarField4(A.grid), ScalarField4(A.grid)};
  pdiff(r.k1.v, k.k1.v, m.k1.v, 0.125);
  pdiff(r.k2.v, k.k2.v, m.k2.v, 0.125);
  pdiff(r.k3.v, k.k3.v, m.k3.v, 0.125);
  return r;
}

std::array<SpinorField4, 4> covariant_deriv(const GaugeField4& A, const SpinorField4& u,
                                            Scheme scheme) {
  std::array<SpinorField4, 4> D;
  for (int mu = 0; mu < 4; ++mu) {
    const double h = u.grid.spacing(mu);
    const auto& a = A.mu[static_cast<std::size_t>(mu)].v;
    D[static_cast<std::size_t>(mu)] =
        scheme == Scheme::link ? link_deriv(a, u, mu, h) : central_deriv(a, u, mu, h);
  }
  return D;
}

std::array<SpinorField4, 4> dirac(const GaugeField4& A, const SpinorField4& u, Scheme scheme) {
  auto D = covariant_deriv(A, u, scheme);
  std::array<SpinorField4, 4> c;
  for (int mu = 0; mu < 4; ++mu)
    c[static_cast<std::size_t>(mu)] = prefixed(D[static_cast<std::size_t>(mu)], mu);
  return c;
}

SpinorField4 dirac_sum(const GaugeField4& A, const SpinorField4& u, Scheme scheme) {
  auto D = covariant_deriv(A, u, scheme);
  SpinorField4 s(u.grid);
  for (int mu = 0; mu < 4; ++mu) add_prefixed(s, D[static_cast<std::size_t>(mu)], mu);
  return s;
}

std::pair<GaugeField4, SpinorField4> gauge_transform(const ScalarField4& theta,
                                                     const GaugeField4& A, const SpinorField4& u) {
  GaugeField4 Ag = A;
  for (int mu = 0; mu < 4; ++mu) {
    ScalarField4 d = fwd_diff(theta, mu);
    paxpy(Ag.mu[static_cast<std::size_t>(mu)].v, 1.0, d.v);
  }
  std::vector<double> c(theta.v.size()), s(theta.v.size());
  kernels::parallel_for(theta.v.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      c[i] = std::cos(theta.v[i]);
      s[i] = -std::sin(theta.v[i]);
    }
  });
  SpinorField4 ug(u.grid);
  u1_rotate(ug, c, s, u);
  return {std::move(Ag), std::move(ug)};
}

TangentVector4 gauge_tangent(const ScalarField4& eps, const SpinorField4& u) {
  TangentVector4 v(u.grid);
  v.a0 = fwd_diff(eps, 0);
  v.a1 = fwd_diff(eps, 1);
  v.c2 = fwd_diff(eps, 2);
  v.c3 = fwd_diff(eps, 3);
  // zeta = -i eps u = eps (x, -w, z, -y)
  kernels::parallel_for(u.w.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      v.zeta.w[i] = eps.v[i] * u.x[i];
      v.zeta.x[i] = eps.v[i] * (-u.w[i]);
      v.zeta.y[i] = eps.v[i] * u.z[i];
      v.zeta.z[i] = eps.v[i] * (-u.y[i]);
    }
  });
  return v;
}

std::array<SpinorField2, 4> reduced_covariant_deriv(const ReducedConfig& c, Scheme scheme,
                                                    Transverse t) {
  std::array<SpinorField2, 4> D;
  for (int mu = 0; mu < 2; ++mu) {
    const double h = c.u.grid.spacing(mu);
    const auto& a = (mu == 0 ? c.a0 : c.a1).v;
    D[static_cast<std::size_t>(mu)] =
        scheme == Scheme::link ? link_deriv(a, c.u, mu, h) : central_deriv(a, c.u, mu, h);
  }
  D[2] = higgs_deriv(c.phi1.v, c.u, t.h2, scheme);
  D[3] = higgs_deriv(c.phi2.v, c.u, t.h3, scheme);
  return D;
}

ReducedResidual reduced_residual(const ReducedConfig& c, Scheme scheme, Transverse t) {
  const Grid2& g = c.u.grid;
  ReducedResidual r;
  ScalarField2 d0a1 = dm(c.a1, 0, scheme), d1a0 = dm(c.a0, 1, scheme);
  ScalarField2 d0p1 = dm(c.phi1, 0, scheme), d1p2 = dm(c.phi2, 1, scheme);
  ScalarField2 d0p2 = dm(c.phi2, 0, scheme), d1p1 = dm(c.phi1, 1, scheme);
  ScalarField2 K1(g), K2(g), K3(g);
  pdiff(K1.v, d0a1.v, d1a0.v, 1.0);
  pdiff(K2.v, d0p1.v, d1p2.v, 1.0);
  K3.v = d0p2.v;
  paxpy(K3.v, 1.0, d1p1.v);
  SelfDual2 m = moment_of2(c.u);
  r.curv = SelfDual2{ScalarField2(g), ScalarField2(g), ScalarField2(g)};
  pdiff(r.curv.k1.v, K1.v, m.k1.v, 1.0);
  pdiff(r.curv.k2.v, K2.v, m.k2.v, 1.0);
  pdiff(r.curv.k3.v, K3.v, m.k3.v, 1.0);
  auto D = reduced_covariant_deriv(c, scheme, t);
  r.dirac = SpinorField2(g);
  for (int mu = 0; mu < 4; ++mu) add_prefixed(r.dirac, D[static_cast<std::size_t>(mu)], mu);
  return r;
}

std::pair<GaugeField4, SpinorField4> lift_config(const ReducedConfig& c, const Grid4& g) {
  if (!(factor1(g) == c.u.grid)) throw std::invalid_argument("lift_config: grid mismatch");
  GaugeField4 A(g);
  A.mu[0] = lift1(c.a0, g);
  A.mu[1] = lift1(c.a1, g);
  A.mu[2] = lift1(c.phi1, g);
  A.mu[3] = lift1(c.phi2, g);
  return {std::move(A), lift1(c.u, g)};
}

}  // namespace sw
