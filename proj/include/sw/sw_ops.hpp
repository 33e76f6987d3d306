#pragma once
// Gauge-theory operators on the 4-torus and on its first factor: curvature,
// twisted self-dual parts, moment map of a spinor, Dirac coefficient fields,
// residuals, the U(1) gauge action, and the dimensional-reduction lift.
//
// Conventions, fixed across the repo:
//  * A = i (A0 dx0 + ... + A3 dx3) with real components A_mu.
//  * "paper" self-dual part: (F01 - F23, F02 - F13, F03 + F12).
//    "standard":             (F01 + F23, F02 - F13, F03 + F12).
//  * link scheme: D_mu u (x) = (exp(i h A_mu(x)) u(x + e_mu) - u(x)) / h,
//    exactly covariant under lattice gauge transforms.
//    central scheme: D_mu u = central difference + i A_mu u, second order.
//  * Dirac coefficient fields carry left prefixes (-1, i, j, k) on D_mu u.

#include <sw/field.hpp>
#include <sw/lattice.hpp>

#include <array>
#include <utility>

namespace sw {

enum class Convention { paper, standard };
enum class Scheme { link, central };

inline const char* convention_name(Convention c) { return c == Convention::paper ? "paper" : "standard"; }
inline const char* scheme_name(Scheme s) { return s == Scheme::link ? "link" : "central"; }

struct Curvature4 {
  ScalarField4 f01, f02, f03, f12, f13, f23;
};

struct SelfDual4 {
  ScalarField4 k1, k2, k3;
};

struct SelfDual2 {
  ScalarField2 k1, k2, k3;
};

Curvature4 curvature(const GaugeField4& A, Scheme scheme = Scheme::link);
SelfDual4 fhat(const GaugeField4& A, Convention conv, Scheme scheme = Scheme::link);

// Pointwise moment map of a spinor field, as a self-dual triple.
SelfDual4 moment_of(const SpinorField4& u);
SelfDual2 moment_of2(const SpinorField2& u);

// chi = (1/8)(fhat(A) - mu(u)).
SelfDual4 residual_chi(const GaugeField4& A, const SpinorField4& u, Convention conv,
                       Scheme scheme = Scheme::link);

// Covariant derivatives D_mu u, one spinor field per axis, no prefixes.
std::array<SpinorField4, 4> covariant_deriv(const GaugeField4& A, const SpinorField4& u,
                                            Scheme scheme);
// Dirac coefficient fields: (-1) D_0 u, i D_1 u, j D_2 u, k D_3 u.
std::array<SpinorField4, 4> dirac(const GaugeField4& A, const SpinorField4& u, Scheme scheme);
// Contracted operator: sum of the four prefixed components.
SpinorField4 dirac_sum(const GaugeField4& A, const SpinorField4& u, Scheme scheme);

// A_mu += d_mu theta (forward difference), u <- exp(-i theta) u.
std::pair<GaugeField4, SpinorField4> gauge_transform(const ScalarField4& theta,
                                                     const GaugeField4& A, const SpinorField4& u);

// Tangent vector to configuration space: connection legs (a0, a1), Higgs legs
// stored as real coefficients (c2, c3), and a spinor direction zeta.
struct TangentVector4 {
  ScalarField4 a0, a1, c2, c3;
  SpinorField4 zeta;
  TangentVector4() = default;
  explicit TangentVector4(const Grid4& g) : a0(g), a1(g), c2(g), c3(g), zeta(g) {}
};

// Infinitesimal gauge action at (A, u): form legs d_mu epsilon, spinor leg
// -i epsilon u.
TangentVector4 gauge_tangent(const ScalarField4& eps, const SpinorField4& u);

// Configuration on the first factor: connection (a0, a1), Higgs pair
// (phi1, phi2), spinor u.
struct ReducedConfig {
  ScalarField2 a0, a1, phi1, phi2;
  SpinorField2 u;
  ReducedConfig() = default;
  explicit ReducedConfig(const Grid2& g) : a0(g), a1(g), phi1(g), phi2(g), u(g) {}
};

// Transverse spacings of the lift target; the reduced link ops use them so the
// reduction commutes with the lift exactly.
struct Transverse {
  double h2 = 0.25, h3 = 0.25;
};

struct ReducedResidual {
  SelfDual2 curv;    // (K1, K2, K3) - mu(u), unscaled
  SpinorField2 dirac;  // contracted: -D0 + i D1 + j D2 + k D3
};

// Reduced covariant derivatives: axes 0,1 act on the base, axes 2,3 are the
// Higgs directions (central scheme there is exactly i phi u).
std::array<SpinorField2, 4> reduced_covariant_deriv(const ReducedConfig& c, Scheme scheme,
                                                    Transverse t);
ReducedResidual reduced_residual(const ReducedConfig& c, Scheme scheme, Transverse t);

// Constant extension along the second factor; throws if factor1(g) != c.grid.
std::pair<GaugeField4, SpinorField4> lift_config(const ReducedConfig& c, const Grid4& g);

}  // namespace sw
