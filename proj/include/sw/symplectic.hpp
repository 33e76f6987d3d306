#pragma once
// The 2-form Omega on configuration-space tangents, its restriction to the
// two Poincare-dual slice families, the factor form Omega_1 with its metric
// g^C, the compatible twist, and the Hamiltonian generating the gauge action.
//
// Omega(a, b) = (1/4) s_w Int [ (a1_0 a2_1 - a1_1 a2_0) f2
//                             + (c1_2 c2_3 - c1_3 c2_2) f1 ] d^4x
//             + (1/8) Int <i z1, z2> 2 f1 f2 d^4x
// with tangents a = (a0, a1, c2, c3, zeta) and s_w the wedge sign for pairs
// of iR-valued form legs.

#include <sw/field.hpp>
#include <sw/lattice.hpp>
#include <sw/sw_ops.hpp>

#include <array>
#include <cstdint>
#include <utility>

namespace sw {

// Sign ledger; every entry is +1 or -1. The defaults make
// omega(a, twist(a)) = (1/4) ||a||^2 at unit weights.
struct FormConventions {
  double wedge_sign = -1.0;    // s_w, multiplies wedge products of iR-valued legs
  double twist_form = -1.0;    // s1, form part of the twist
  double twist_spinor = 1.0;   // s2, spinor part of the twist
  double orientation = 1.0;    // global sign of volume integrals
};

// Throws std::invalid_argument unless every entry is +1 or -1.
void validate(const FormConventions& fc);

// Tangent to the reduced configuration space on one factor: connection legs
// (a0, a1), spinor xi, Higgs legs (e0, e1) read in the slice coframe.
struct ReducedTangent {
  ScalarField2 a0, a1;
  SpinorField2 xi;
  ScalarField2 e0, e1;
  ReducedTangent() = default;
  explicit ReducedTangent(const Grid2& g) : a0(g), a1(g), xi(g), e0(g), e1(g) {}
};

double omega(const TangentVector4& a, const TangentVector4& b, const Weights4& w,
             const FormConventions& fc);
// Same value computed through the full six-component wedge expansion against
// the Kahler form, mixed blocks included.
double omega_cross_check(const TangentVector4& a, const TangentVector4& b, const Weights4& w,
                         const FormConventions& fc);
// Omega evaluated carrying an explicit base configuration; the bundle metric
// is flat, so the value cannot depend on it.
double omega_at(const GaugeField4& A, const SpinorField4& u, const TangentVector4& a,
                const TangentVector4& b, const Weights4& w, const FormConventions& fc);

// Factor 2-form and metric; f is the conformal factor on that factor.
double omega1_sigma(const ReducedTangent& X, const ReducedTangent& Y, const ScalarField2& f,
                    const FormConventions& fc);
double gc_metric(const ReducedTangent& X, const ReducedTangent& Y, const ScalarField2& f);

// Restriction maps. psi1 slices over the first factor with the second frozen
// at p = (p2, p3); psi2 slices over the second factor with the first frozen
// at q = (q0, q1) and swaps the connection/Higgs roles.
ReducedTangent pushforward_psi1(const TangentVector4& a, int p2, int p3);
ReducedTangent pushforward_psi2(const TangentVector4& a, int q0, int q1);

// Slice restriction of Omega: both wedge sectors and the spinor sector summed
// over the two slices, computed directly on the 4D fields.
double omega_y(const TangentVector4& a, const TangentVector4& b, const KahlerData& k,
               std::array<int, 2> p, std::array<int, 2> q, const FormConventions& fc);
double pullback_pair_sum(const TangentVector4& a, const TangentVector4& b, const KahlerData& k,
                         std::array<int, 2> p, std::array<int, 2> q, const FormConventions& fc);
// | omega_y - kappa (psi1^* Omega1 + psi2^* Omega1) |
double pullback_identity_defect(const TangentVector4& a, const TangentVector4& b,
                                const KahlerData& k, std::array<int, 2> p, std::array<int, 2> q,
                                double kappa, const FormConventions& fc);

// Compatible twist: a -> (s1 * alpha, s1 * eta, s2 i zeta), star per factor.
TangentVector4 twist(const TangentVector4& a, const FormConventions& fc);

// Plain L2 norm squared of all five legs.
double tangent_norm2(const TangentVector4& a);

// Integral of eps times the first chi component against the wedge volume.
double moment_pairing(const ScalarField4& eps, const GaugeField4& A, const SpinorField4& u,
                      const Weights4& w, Convention conv, Scheme scheme);

// Hamiltonian of the gauge vector field of eps: backward-difference curvature
// pairing plus (1/8) Int eps |u|^2 against f1 f2. Its directional derivative
// reproduces omega(gauge_tangent(eps, u), .) exactly on the lattice.
double gauge_hamiltonian(const ScalarField4& eps, const GaugeField4& A, const SpinorField4& u,
                         const Weights4& w, const FormConventions& fc);

// lhs = omega(gauge_tangent(eps, u), b); rhs = central-difference directional
// derivative of the Hamiltonian along b (exact for a quadratic functional).
std::pair<double, double> moment_identity_sides(const ScalarField4& eps, const TangentVector4& b,
                                                const GaugeField4& A, const SpinorField4& u,
                                                const Weights4& w, const FormConventions& fc,
                                                double step = 1e-4);
double moment_identity_defect(const ScalarField4& eps, const TangentVector4& b,
                              const GaugeField4& A, const SpinorField4& u, const Weights4& w,
                              const FormConventions& fc, double kappa_m, double step = 1e-4);

// Seeded tangent with five independent smooth legs.
TangentVector4 random_tangent(const Grid4& g, std::uint64_t seed, int modes, double amp);

}  // namespace sw
