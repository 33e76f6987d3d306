#include <sw/solver.hpp>

#include <sw/kernels.hpp>
#include <sw/lattice.hpp>

#include <cmath>
#include <utility>

namespace sw {
namespace {

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

// out += 2 <i v, t> per site, accumulated into a scalar leg.
template <class SF>
void add_pairing(std::vector<double>& out, const SF& v, const SF& t) {
  kernels::parallel_for(out.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      out[i] += 2.0 * (-v.x[i] * t.w[i] + v.w[i] * t.x[i] - v.z[i] * t.y[i] + v.y[i] * t.z[i]);
  });
}

// gu -= sum_c r_c grad mu_c(u); the three moment gradients at u are
// (w, x, -y, -z), (-z, y, x, -w), (y, z, w, x).
template <class SF>
void sub_moment_grad(SF& gu, const std::vector<double>& r1, const std::vector<double>& r2,
                     const std::vector<double>& r3, const SF& u) {
  kernels::parallel_for(gu.w.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      gu.w[i] -= r1[i] * u.w[i] - r2[i] * u.z[i] + r3[i] * u.y[i];
      gu.x[i] -= r1[i] * u.x[i] + r2[i] * u.y[i] + r3[i] * u.z[i];
      gu.y[i] -= -r1[i] * u.y[i] + r2[i] * u.x[i] + r3[i] * u.w[i];
      gu.z[i] -= -r1[i] * u.z[i] - r2[i] * u.w[i] + r3[i] * u.x[i];
    }
  });
}

// gu += s * a * (i t) per site.
template <class SF>
void add_a_it(SF& gu, double s, const std::vector<double>& a, const SF& t) {
  kernels::parallel_for(gu.w.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      gu.w[i] += s * a[i] * (-t.x[i]);
      gu.x[i] += s * a[i] * t.w[i];
      gu.y[i] += s * a[i] * (-t.z[i]);
      gu.z[i] += s * a[i] * t.y[i];
    }
  });
}

// Adjoint pieces of a link derivative along axis mu with connection a:
// gleg += 2 <i P u(x+e), T>, gu += (2/h)(shift(conj(P) T, -e) - T).
template <class SF>
void link_adjoint(std::vector<double>& gleg, SF& gu, const std::vector<double>& a, const SF& u,
                  const SF& T, int mu, double h) {
  std::vector<double> c, s;
  phase_arrays(a, h, c, s);
  SF W(u.grid);
  u1_rotate(W, c, s, shift(u, mu, +1));
  add_pairing(gleg, W, T);
  for (auto& v : s) v = -v;
  SF R(u.grid);
  u1_rotate(R, c, s, T);
  SF S = shift(R, mu, -1);
  const double inv = 2.0 / h;
  paxpy(gu.w, inv, S.w); paxpy(gu.w, -inv, T.w);
  paxpy(gu.x, inv, S.x); paxpy(gu.x, -inv, T.x);
  paxpy(gu.y, inv, S.y); paxpy(gu.y, -inv, T.y);
  paxpy(gu.z, inv, S.z); paxpy(gu.z, -inv, T.z);
}

// Central-scheme counterpart: gleg += 2 <i u, T>,
// gu += -2 central_mu(T) - 2 a (i T).
template <class SF>
void central_adjoint(std::vector<double>& gleg, SF& gu, const std::vector<double>& a, const SF& u,
                     const SF& T, int mu, double h) {
  add_pairing(gleg, u, T);
  SF tp = shift(T, mu, +1), tm = shift(T, mu, -1);
  const double inv = 1.0 / h;
  paxpy(gu.w, -inv, tp.w); paxpy(gu.w, inv, tm.w);
  paxpy(gu.x, -inv, tp.x); paxpy(gu.x, inv, tm.x);
  paxpy(gu.y, -inv, tp.y); paxpy(gu.y, inv, tm.y);
  paxpy(gu.z, -inv, tp.z); paxpy(gu.z, inv, tm.z);
  add_a_it(gu, -2.0, a, T);
}

// Higgs legs carry no shift: the link form is (exp(i h phi) u - u)/h at a
// fixed site, the central form is i phi u.
template <class SF>
void higgs_adjoint(std::vector<double>& gleg, SF& gu, const std::vector<double>& phi, const SF& u,
                   const SF& T, double h, Scheme scheme) {
  if (scheme == Scheme::link) {
    std::vector<double> c, s;
    phase_arrays(phi, h, c, s);
    SF W(u.grid);
    u1_rotate(W, c, s, u);
    add_pairing(gleg, W, T);
    for (auto& v : s) v = -v;
    SF R(u.grid);
    u1_rotate(R, c, s, T);
    const double inv = 2.0 / h;
    paxpy(gu.w, inv, R.w); paxpy(gu.w, -inv, T.w);
    paxpy(gu.x, inv, R.x); paxpy(gu.x, -inv, T.x);
    paxpy(gu.y, inv, R.y); paxpy(gu.y, -inv, T.y);
    paxpy(gu.z, inv, R.z); paxpy(gu.z, -inv, T.z);
  } else {
    add_pairing(gleg, u, T);
    add_a_it(gu, -2.0, phi, T);
  }
}

// K_c += sign * d_mu A_nu term table for the self-dual curvature.
struct CurvTerm {
  int c, nu, mu;
  double sign;
};

std::vector<CurvTerm> curv_terms4(Convention conv) {
  std::vector<CurvTerm> t = {
      {0, 1, 0, 1}, {0, 0, 1, -1},
      {1, 2, 0, 1}, {1, 0, 2, -1}, {1, 3, 1, -1}, {1, 1, 3, 1},
      {2, 3, 0, 1}, {2, 0, 3, -1}, {2, 2, 1, 1}, {2, 1, 2, -1},
  };
  const double sp = conv == Convention::paper ? -1.0 : 1.0;
  t.push_back({0, 3, 2, sp});
  t.push_back({0, 2, 3, -sp});
  return t;
}

// Reduced table: fields indexed 0..3 = a0, a1, phi1, phi2.
std::vector<CurvTerm> curv_terms2() {
  return {
      {0, 1, 0, 1}, {0, 0, 1, -1},
      {1, 2, 0, 1}, {1, 3, 1, -1},
      {2, 3, 0, 1}, {2, 2, 1, 1},
  };
}

struct Parts {
  double curv = 0, dirac = 0;
};

Parts energy_parts4(const GaugeField4& A, const SpinorField4& u, Convention conv, Scheme scheme) {
  Parts p;
  SelfDual4 K = fhat(A, conv, scheme);
  SelfDual4 M = moment_of(u);
  ScalarField4 r(A.grid);
  pdiff(r.v, K.k1.v, M.k1.v, 1.0);
  p.curv += l2norm2(r);
  pdiff(r.v, K.k2.v, M.k2.v, 1.0);
  p.curv += l2norm2(r);
  pdiff(r.v, K.k3.v, M.k3.v, 1.0);
  p.curv += l2norm2(r);
  auto D = covariant_deriv(A, u, scheme);
  for (const SpinorField4& d : D) p.dirac += l2norm2(d);
  return p;
}

Parts energy_parts2(const ReducedConfig& c, Scheme scheme, Transverse t) {
  Parts p;
  ReducedResidual rr = reduced_residual(c, scheme, t);
  p.curv = l2norm2(rr.curv.k1) + l2norm2(rr.curv.k2) + l2norm2(rr.curv.k3);
  p.dirac = l2norm2(rr.dirac);
  return p;
}

double grad_norm4(const Gradient4& g) {
  double s = l2norm2(g.gu);
  for (const ScalarField4& f : g.gA.mu) s += l2norm2(f);
  return std::sqrt(s);
}

double grad_norm2(const Gradient2& g) {
  return std::sqrt(l2norm2(g.a0) + l2norm2(g.a1) + l2norm2(g.phi1) + l2norm2(g.phi2) +
                   l2norm2(g.u));
}

// T_mu = conj(prefix_mu) S with prefixes (-1, i, j, k).
SpinorField2 conj_prefixed(const SpinorField2& S, int mu) {
  SpinorField2 t(S.grid);
  switch (mu) {
    case 0:
      paxpy(t.w, -1.0, S.w); paxpy(t.x, -1.0, S.x);
      paxpy(t.y, -1.0, S.y); paxpy(t.z, -1.0, S.z);
      break;
    case 1:  // -i S = (x, -w, z, -y)
      paxpy(t.w, 1.0, S.x); paxpy(t.x, -1.0, S.w);
      paxpy(t.y, 1.0, S.z); paxpy(t.z, -1.0, S.y);
      break;
    case 2:  // -j S = (y, -z, -w, x)
      paxpy(t.w, 1.0, S.y); paxpy(t.x, -1.0, S.z);
      paxpy(t.y, -1.0, S.w); paxpy(t.z, 1.0, S.x);
      break;
    default:  // -k S = (z, y, -x, -w)
      paxpy(t.w, 1.0, S.z); paxpy(t.x, 1.0, S.y);
      paxpy(t.y, -1.0, S.x); paxpy(t.z, -1.0, S.w);
  }
  return t;
}

}  // namespace

double energy(const GaugeField4& A, const SpinorField4& u, Convention conv, Scheme scheme) {
  Parts p = energy_parts4(A, u, conv, scheme);
  return p.curv + p.dirac;
}

double energy2(const ReducedConfig& c, Scheme scheme, Transverse t) {
  Parts p = energy_parts2(c, scheme, t);
  return p.curv + p.dirac;
}

Gradient4 gradient(const GaugeField4& A, const SpinorField4& u, Convention conv, Scheme scheme) {
  const Grid4& g = A.grid;
  Gradient4 out(g);
  SelfDual4 K = fhat(A, conv, scheme);
  SelfDual4 M = moment_of(u);
  ScalarField4 r1(g), r2(g), r3(g);
  pdiff(r1.v, K.k1.v, M.k1.v, 2.0);
  pdiff(r2.v, K.k2.v, M.k2.v, 2.0);
  pdiff(r3.v, K.k3.v, M.k3.v, 2.0);
  const ScalarField4* r[3] = {&r1, &r2, &r3};
  for (const CurvTerm& t : curv_terms4(conv)) {
    ScalarField4 d = scheme == Scheme::link ? bwd_diff(*r[t.c], t.mu)
                                            : central_diff(*r[t.c], t.mu);
    paxpy(out.gA.mu[static_cast<std::size_t>(t.nu)].v, -t.sign, d.v);
  }
  sub_moment_grad(out.gu, r1.v, r2.v, r3.v, u);
  auto D = covariant_deriv(A, u, scheme);
  for (int mu = 0; mu < 4; ++mu) {
    auto m = static_cast<std::size_t>(mu);
    if (scheme == Scheme::link)
      link_adjoint(out.gA.mu[m].v, out.gu, A.mu[m].v, u, D[m], mu, g.spacing(mu));
    else
      central_adjoint(out.gA.mu[m].v, out.gu, A.mu[m].v, u, D[m], mu, g.spacing(mu));
  }
  return out;
}

Gradient2 gradient2(const ReducedConfig& c, Scheme scheme, Transverse t) {
  const Grid2& g = c.a0.grid;
  Gradient2 out(g);
  ReducedResidual rr = reduced_residual(c, scheme, t);
  ScalarField2 r1(g), r2(g), r3(g);
  paxpy(r1.v, 2.0, rr.curv.k1.v);
  paxpy(r2.v, 2.0, rr.curv.k2.v);
  paxpy(r3.v, 2.0, rr.curv.k3.v);
  const ScalarField2* r[3] = {&r1, &r2, &r3};
  std::vector<double>* legs[4] = {&out.a0.v, &out.a1.v, &out.phi1.v, &out.phi2.v};
  for (const CurvTerm& tm : curv_terms2()) {
    ScalarField2 d = scheme == Scheme::link ? bwd_diff(*r[tm.c], tm.mu)
                                            : central_diff(*r[tm.c], tm.mu);
    paxpy(*legs[tm.nu], -tm.sign, d.v);
  }
  sub_moment_grad(out.u, r1.v, r2.v, r3.v, c.u);
  const std::vector<double>* conn[4] = {&c.a0.v, &c.a1.v, &c.phi1.v, &c.phi2.v};
  const double hs[4] = {g.spacing(0), g.spacing(1), t.h2, t.h3};
  for (int mu = 0; mu < 4; ++mu) {
    SpinorField2 T = conj_prefixed(rr.dirac, mu);
    auto m = static_cast<std::size_t>(mu);
    if (mu < 2) {
      if (scheme == Scheme::link)
        link_adjoint(*legs[m], out.u, *conn[m], c.u, T, mu, hs[m]);
      else
        central_adjoint(*legs[m], out.u, *conn[m], c.u, T, mu, hs[m]);
    } else {
      higgs_adjoint(*legs[m], out.u, *conn[m], c.u, T, hs[m], scheme);
    }
  }
  return out;
}

std::pair<double, double> residual_norms(const GaugeField4& A, const SpinorField4& u,
                                         Convention conv, Scheme scheme) {
  SelfDual4 K = fhat(A, conv, scheme);
  SelfDual4 M = moment_of(u);
  ScalarField4 r(A.grid);
  double curv = 0;
  pdiff(r.v, K.k1.v, M.k1.v, 1.0);
  curv += l2norm2(r);
  pdiff(r.v, K.k2.v, M.k2.v, 1.0);
  curv += l2norm2(r);
  pdiff(r.v, K.k3.v, M.k3.v, 1.0);
  curv += l2norm2(r);
  SpinorField4 S = dirac_sum(A, u, scheme);
  return {std::sqrt(curv), std::sqrt(l2norm2(S))};
}

std::pair<double, double> residual_norms2(const ReducedConfig& c, Scheme scheme, Transverse t) {
  ReducedResidual rr = reduced_residual(c, scheme, t);
  double curv = l2norm2(rr.curv.k1) + l2norm2(rr.curv.k2) + l2norm2(rr.curv.k3);
  return {std::sqrt(curv), std::sqrt(l2norm2(rr.dirac))};
}

DescendResult descend(GaugeField4 A, SpinorField4 u, const SolveSettings& st) {
  const Grid4 g = A.grid;
  DescendResult out{std::move(A), std::move(u), {}, 0, 0, false};
  Parts p = energy_parts4(out.A, out.u, st.convention, st.scheme);
  double E = p.curv + p.dirac;
  Gradient4 gr = gradient(out.A, out.u, st.convention, st.scheme);
  out.trace.push_back({0, E, std::sqrt(p.curv), std::sqrt(p.dirac), grad_norm4(gr)});
  out.converged = std::sqrt(E) <= st.tol;
  double step = st.step_size;
  for (int it = 1; it <= st.max_steps && !out.converged; ++it) {
    bool stuck = false;
    while (true) {
      GaugeField4 At = out.A;
      SpinorField4 ut = out.u;
      for (int mu = 0; mu < 4; ++mu) {
        auto m = static_cast<std::size_t>(mu);
        paxpy(At.mu[m].v, -step, gr.gA.mu[m].v);
      }
      paxpy(ut.w, -step, gr.gu.w);
      paxpy(ut.x, -step, gr.gu.x);
      paxpy(ut.y, -step, gr.gu.y);
      paxpy(ut.z, -step, gr.gu.z);
      Parts pt = energy_parts4(At, ut, st.convention, st.scheme);
      double Et = pt.curv + pt.dirac;
      if (Et <= E) {
        out.A = std::move(At);
        out.u = std::move(ut);
        E = Et;
        p = pt;
        break;
      }
      if (step < 1e-14) {
        stuck = true;
        break;
      }
      step *= 0.5;
    }
    out.steps = it;
    if (!stuck) gr = gradient(out.A, out.u, st.convention, st.scheme);
    out.converged = std::sqrt(E) <= st.tol;
    bool last = out.converged || stuck || it == st.max_steps;
    if (last || it % st.report_every == 0)
      out.trace.push_back({it, E, std::sqrt(p.curv), std::sqrt(p.dirac), grad_norm4(gr)});
    if (stuck) break;
  }
  out.final_energy = E;
  return out;
}

Solve2Result solve_reduced(ReducedConfig c, const SolveSettings& st, Transverse t) {
  Solve2Result out{std::move(c), {}, 0, 0, false};
  Parts p = energy_parts2(out.c, st.scheme, t);
  double E = p.curv + p.dirac;
  Gradient2 gr = gradient2(out.c, st.scheme, t);
  out.trace.push_back({0, E, std::sqrt(p.curv), std::sqrt(p.dirac), grad_norm2(gr)});
  out.converged = std::sqrt(E) <= st.tol;
  double step = st.step_size;
  for (int it = 1; it <= st.max_steps && !out.converged; ++it) {
    bool stuck = false;
    while (true) {
      ReducedConfig ct = out.c;
      paxpy(ct.a0.v, -step, gr.a0.v);
      paxpy(ct.a1.v, -step, gr.a1.v);
      paxpy(ct.phi1.v, -step, gr.phi1.v);
      paxpy(ct.phi2.v, -step, gr.phi2.v);
      paxpy(ct.u.w, -step, gr.u.w);
      paxpy(ct.u.x, -step, gr.u.x);
      paxpy(ct.u.y, -step, gr.u.y);
      paxpy(ct.u.z, -step, gr.u.z);
      Parts pt = energy_parts2(ct, st.scheme, t);
      double Et = pt.curv + pt.dirac;
      if (Et <= E) {
        out.c = std::move(ct);
        E = Et;
        p = pt;
        break;
      }
      if (step < 1e-14) {
        stuck = true;
        break;
      }
      step *= 0.5;
    }
    out.steps = it;
    if (!stuck) gr = gradient2(out.c, st.scheme, t);
    out.converged = std::sqrt(E) <= st.tol;
    bool last = out.converged || stuck || it == st.max_steps;
    if (last || it % st.report_every == 0)
      out.trace.push_back({it, E, std::sqrt(p.curv), std::sqrt(p.dirac), grad_norm2(gr)});
    if (stuck) break;
  }
  out.final_energy = E;
  return out;
}

}  // namespace sw
