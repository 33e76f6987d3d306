#pragma once
// Periodic stencils, integration, conformal weights, and the maps between the
// 4-torus and its two factor tori. Forward/backward differences are exact
// summation-by-parts partners; central differences are second order.

#include <sw/field.hpp>

namespace sw {

// out(x) = f(x + step * e_mu), step in {-1, +1}, periodic.
ScalarField4 shift(const ScalarField4& f, int mu, int step);
SpinorField4 shift(const SpinorField4& f, int mu, int step);
ScalarField2 shift(const ScalarField2& f, int mu, int step);
SpinorField2 shift(const SpinorField2& f, int mu, int step);

ScalarField4 fwd_diff(const ScalarField4& f, int mu);
ScalarField4 bwd_diff(const ScalarField4& f, int mu);
ScalarField4 central_diff(const ScalarField4& f, int mu);
ScalarField2 fwd_diff(const ScalarField2& f, int mu);
ScalarField2 bwd_diff(const ScalarField2& f, int mu);
ScalarField2 central_diff(const ScalarField2& f, int mu);

// Conformal factors: f1 lives on the first factor, f2 on the second.
struct KahlerData {
  ScalarField2 f1, f2;
};

// Both factors lifted to the product grid (constant along the other factor).
struct Weights4 {
  ScalarField4 f1, f2;
};

KahlerData constant_kahler(const Grid2& s1, const Grid2& s2, double c1 = 1.0, double c2 = 1.0);
// f_i = 1 + amp_i cos(2 pi x_a / L_a) cos(2 pi x_b / L_b); |amp| < 1 keeps f positive.
KahlerData harmonic_kahler(const Grid2& s1, const Grid2& s2, double amp1, double amp2);
Weights4 lift_weights(const Grid4& g, const KahlerData& k);

// Plain Lebesgue integral, sum * cell.
double integrate(const ScalarField4& f);
double integrate(const ScalarField2& f);
// Integral against the wedge volume 2 f1 f2 d^4x.
double integrate_wedge(const ScalarField4& f, const Weights4& w);

double l2norm2(const ScalarField4& f);
double l2norm2(const SpinorField4& f);
double l2norm2(const ScalarField2& f);
double l2norm2(const SpinorField2& f);

// Slices: slice1 fixes the second factor at (q2, q3), slice2 fixes the first
// at (p0, p1). lift1 extends a first-factor field constantly along the second.
ScalarField2 slice1(const ScalarField4& f, int q2, int q3);
SpinorField2 slice1(const SpinorField4& f, int q2, int q3);
ScalarField2 slice2(const ScalarField4& f, int p0, int p1);
SpinorField2 slice2(const SpinorField4& f, int p0, int p1);
ScalarField4 lift1(const ScalarField2& f, const Grid4& g);
SpinorField4 lift1(const SpinorField2& f, const Grid4& g);

}  // namespace sw
