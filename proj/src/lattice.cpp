#include <sw/lattice.hpp>

#include <sw/kernels.hpp>

#include <cmath>
#include <stdexcept>

namespace sw {

namespace {

// Every axis decomposes the flat array into contiguous "panels" of extent
// B = n_mu * stride(mu). Within a panel, the +1 neighbor sits at offset
// +stride except for the last stride-sized run, which wraps by stride - B;
// mirrored for -1. This yields two contiguous kernel calls per panel.
struct AxisLayout {
  std::size_t stride, panel, total;
};

template <class G>
AxisLayout layout(const G& g, int mu) {
  auto s = static_cast<std::size_t>(g.stride(mu));
  return {s, s * static_cast<std::size_t>(g.n[static_cast<std::size_t>(mu)]),
          static_cast<std::size_t>(g.size())};
}

void shift_flat(double* out, const double* f, AxisLayout L, int step) {
  const std::size_t body = L.panel - L.stride;
  if (step == +1) {
    for (std::size_t p = 0; p < L.total; p += L.panel) {
      kernels::parallel_for(body, [&, p](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[p + i] = f[p + i + L.stride];
      });
      for (std::size_t i = body; i < L.panel; ++i) out[p + i] = f[p + i + L.stride - L.panel];
    }
  } else {
    for (std::size_t p = 0; p < L.total; p += L.panel) {
      for (std::size_t i = 0; i < L.stride; ++i) out[p + i] = f[p + i + body];
      kernels::parallel_for(body, [&, p](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[p + L.stride + i] = f[p + i];
      });
    }
  }
}

// out = (f(x + e_mu) - f(x)) / h
void fwd_flat(double* out, const double* f, AxisLayout L, double invh) {
  const std::size_t body = L.panel - L.stride;
  for (std::size_t p = 0; p < L.total; p += L.panel) {
    kernels::parallel_for(body, [&, p](std::size_t b, std::size_t e) {
      kernels::diff(out + p + b, f + p + b + L.stride, f + p + b, invh, e - b);
    });
    kernels::diff(out + p + body, f + p + body + L.stride - L.panel, f + p + body, invh,
                  L.stride);
  }
}

// out = (f(x) - f(x - e_mu)) / h
void bwd_flat(double* out, const double* f, AxisLayout L, double invh) {
  const std::size_t body = L.panel - L.stride;
  for (std::size_t p = 0; p < L.total; p += L.panel) {
    kernels::diff(out + p, f + p, f + p + body, invh, L.stride);
    kernels::parallel_for(body, [&, p](std::size_t b, std::size_t e) {
      kernels::diff(out + p + L.stride + b, f + p + L.stride + b, f + p + b, invh, e - b);
    });
  }
}

// out = (f(x + e_mu) - f(x - e_mu)) / (2h); n_mu >= 2 keeps the regions valid.
void central_flat(double* out, const double* f, AxisLayout L, double inv2h) {
  const std::size_t body = L.panel - L.stride;
  for (std::size_t p = 0; p < L.total; p += L.panel) {
    kernels::diff(out + p, f + p + L.stride, f + p + body, inv2h, L.stride);
    if (body > L.stride)
      kernels::parallel_for(body - L.stride, [&, p](std::size_t b, std::size_t e) {
        kernels::diff(out + p + L.stride + b, f + p + 2 * L.stride + b, f + p + b, inv2h, e - b);
      });
    kernels::diff(out + p + body, f + p + body + L.stride - L.panel, f + p + body - L.stride,
                  inv2h, L.stride);
  }
}

template <class F>
F stencil(const F& f, int mu, int kind) {
  F out(f.grid);
  AxisLayout L = layout(f.grid, mu);
  const double h = f.grid.spacing(mu);
  switch (kind) {
    case 0: fwd_flat(out.v.data(), f.v.data(), L, 1.0 / h); break;
    case 1: bwd_flat(out.v.data(), f.v.data(), L, 1.0 / h); break;
    default: central_flat(out.v.data(), f.v.data(), L, 0.5 / h); break;
  }
  return out;
}

template <class F>
F shift_scalar(const F& f, int mu, int step) {
  F out(f.grid);
  shift_flat(out.v.data(), f.v.data(), layout(f.grid, mu), step);
  return out;
}

template <class F>
F shift_spinor(const F& f, int mu, int step) {
  F out(f.grid);
  AxisLayout L = layout(f.grid, mu);
  shift_flat(out.w.data(), f.w.data(), L, step);
  shift_flat(out.x.data(), f.x.data(), L, step);
  shift_flat(out.y.data(), f.y.data(), L, step);
  shift_flat(out.z.data(), f.z.data(), L, step);
  return out;
}

}  // namespace

ScalarField4 shift(const ScalarField4& f, int mu, int step) { return shift_scalar(f, mu, step); }
ScalarField2 shift(const ScalarField2& f, int mu, int step) { return shift_scalar(f, mu, step); }
SpinorField4 shift(const SpinorField4& f, int mu, int step) { return shift_spinor(f, mu, step); }
SpinorField2 shift(const SpinorField2& f, int mu, int step) { return shift_spinor(f, mu, step); }

ScalarField4 fwd_diff(const ScalarField4& f, int mu) { return stencil(f, mu, 0); }
ScalarField4 bwd_diff(const ScalarField4& f, int mu) { return stencil(f, mu, 1); }
ScalarField4 central_diff(const ScalarField4& f, int mu) { return stencil(f, mu, 2); }
ScalarField2 fwd_diff(const ScalarField2& f, int mu) { return stencil(f, mu, 0); }
ScalarField2 bwd_diff(const ScalarField2& f, int mu) { return stencil(f, mu, 1); }
ScalarField2 central_diff(const ScalarField2& f, int mu) { return stencil(f, mu, 2); }

KahlerData constant_kahler(const Grid2& s1, const Grid2& s2, double c1, double c2) {
  KahlerData k{ScalarField2(s1), ScalarField2(s2)};
  for (auto& e : k.f1.v) e = c1;
  for (auto& e : k.f2.v) e = c2;
  return k;
}

KahlerData harmonic_kahler(const Grid2& s1, const Grid2& s2, double amp1, double amp2) {
  if (std::fabs(amp1) >= 1.0 || std::fabs(amp2) >= 1.0)
    throw std::runtime_error("harmonic_kahler: |amp| must be < 1 to keep factors positive");
  KahlerData k{ScalarField2(s1), ScalarField2(s2)};
  auto fill = [](ScalarField2& f, double amp) {
    const Grid2& g = f.grid;
    for (int i = 0; i < g.size(); ++i) {
      auto c = g.coords(i);
      f.v[static_cast<std::size_t>(i)] =
          1.0 + amp * std::cos(2 * M_PI * c[0] / g.n[0]) * std::cos(2 * M_PI * c[1] / g.n[1]);
    }
  };
  fill(k.f1, amp1);
  fill(k.f2, amp2);
  return k;
}

Weights4 lift_weights(const Grid4& g, const KahlerData& k) {
  if (!(factor1(g) == k.f1.grid) || !(factor2(g) == k.f2.grid))
    throw std::runtime_error("lift_weights: factor grids do not match");
  Weights4 w{ScalarField4(g), ScalarField4(g)};
  const int n23 = g.n[2] * g.n[3];
  for (int i1 = 0; i1 < k.f1.grid.size(); ++i1) {
    double val = k.f1.v[static_cast<std::size_t>(i1)];
    double* base = w.f1.v.data() + static_cast<std::size_t>(i1) * static_cast<std::size_t>(n23);
    for (int j = 0; j < n23; ++j) base[j] = val;
  }
  for (int i1 = 0; i1 < k.f1.grid.size(); ++i1) {
    double* base = w.f2.v.data() + static_cast<std::size_t>(i1) * static_cast<std::size_t>(n23);
    for (int j = 0; j < n23; ++j) base[j] = k.f2.v[static_cast<std::size_t>(j)];
  }
  return w;
}

double integrate(const ScalarField4& f) {
  return kernels::sum(f.v.data(), f.v.size()) * f.grid.cell();
}

double integrate(const ScalarField2& f) {
  return kernels::sum(f.v.data(), f.v.size()) * f.grid.cell();
}

double integrate_wedge(const ScalarField4& f, const Weights4& w) {
  std::vector<double> tmp(f.v.size());
  kernels::parallel_for(f.v.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) tmp[i] = f.v[i] * w.f1.v[i] * w.f2.v[i];
  });
  return 2.0 * kernels::sum(tmp.data(), tmp.size()) * f.grid.cell();
}

double l2norm2(const ScalarField4& f) {
  return kernels::dot_sum(f.v.data(), f.v.data(), f.v.size()) * f.grid.cell();
}

double l2norm2(const ScalarField2& f) {
  return kernels::dot_sum(f.v.data(), f.v.data(), f.v.size()) * f.grid.cell();
}

double l2norm2(const SpinorField4& f) {
  return (kernels::dot_sum(f.w.data(), f.w.data(), f.w.size()) +
          kernels::dot_sum(f.x.data(), f.x.data(), f.x.size()) +
          kernels::dot_sum(f.y.data(), f.y.data(), f.y.size()) +
          kernels::dot_sum(f.z.data(), f.z.data(), f.z.size())) *
         f.grid.cell();
}

double l2norm2(const SpinorField2& f) {
  return (kernels::dot_sum(f.w.data(), f.w.data(), f.w.size()) +
          kernels::dot_sum(f.x.data(), f.x.data(), f.x.size()) +
          kernels::dot_sum(f.y.data(), f.y.data(), f.y.size()) +
          kernels::dot_sum(f.z.data(), f.z.data(), f.z.size())) *
         f.grid.cell();
}

ScalarField2 slice1(const ScalarField4& f, int q2, int q3) {
  ScalarField2 out(factor1(f.grid));
  const Grid4& g = f.grid;
  for (int a = 0; a < g.n[0]; ++a)
    for (int b = 0; b < g.n[1]; ++b)
      out.v[static_cast<std::size_t>(out.grid.index({a, b}))] =
          f.v[static_cast<std::size_t>(g.index({a, b, q2, q3}))];
  return out;
}

SpinorField2 slice1(const SpinorField4& f, int q2, int q3) {
  SpinorField2 out(factor1(f.grid));
  const Grid4& g = f.grid;
  for (int a = 0; a < g.n[0]; ++a)
    for (int b = 0; b < g.n[1]; ++b) {
      auto o = static_cast<std::size_t>(out.grid.index({a, b}));
      auto i = static_cast<std::size_t>(g.index({a, b, q2, q3}));
      out.w[o] = f.w[i];
      out.x[o] = f.x[i];
      out.y[o] = f.y[i];
      out.z[o] = f.z[i];
    }
  return out;
}

ScalarField2 slice2(const ScalarField4& f, int p0, int p1) {
  ScalarField2 out(factor2(f.grid));
  const Grid4& g = f.grid;
  for (int a = 0; a < g.n[2]; ++a)
    for (int b = 0; b < g.n[3]; ++b)
      out.v[static_cast<std::size_t>(out.grid.index({a, b}))] =
          f.v[static_cast<std::size_t>(g.index({p0, p1, a, b}))];
  return out;
}

SpinorField2 slice2(const SpinorField4& f, int p0, int p1) {
  SpinorField2 out(factor2(f.grid));
  const Grid4& g = f.grid;
  for (int a = 0; a < g.n[2]; ++a)
    for (int b = 0; b < g.n[3]; ++b) {
      auto o = static_cast<std::size_t>(out.grid.index({a, b}));
      auto i = static_cast<std::size_t>(g.index({p0, p1, a, b}));
      out.w[o] = f.w[i];
      out.x[o] = f.x[i];
      out.y[o] = f.y[i];
      out.z[o] = f.z[i];
    }
  return out;
}

ScalarField4 lift1(const ScalarField2& f, const Grid4& g) {
  if (!(factor1(g) == f.grid)) throw std::runtime_error("lift1: factor grid mismatch");
  ScalarField4 out(g);
  const int n23 = g.n[2] * g.n[3];
  for (int i = 0; i < f.grid.size(); ++i) {
    double* base = out.v.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n23);
    for (int j = 0; j < n23; ++j) base[j] = f.v[static_cast<std::size_t>(i)];
  }
  return out;
}

SpinorField4 lift1(const SpinorField2& f, const Grid4& g) {
  if (!(factor1(g) == f.grid)) throw std::runtime_error("lift1: factor grid mismatch");
  SpinorField4 out(g);
  const int n23 = g.n[2] * g.n[3];
  auto fill = [&](std::vector<double>& dst, const std::vector<double>& src) {
    for (int i = 0; i < f.grid.size(); ++i) {
      double* base = dst.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n23);
      for (int j = 0; j < n23; ++j) base[j] = src[static_cast<std::size_t>(i)];
    }
  };
  fill(out.w, f.w);
  fill(out.x, f.x);
  fill(out.y, f.y);
  fill(out.z, f.z);
  return out;
}

}  // namespace sw
