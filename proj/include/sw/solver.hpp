#pragma once
// Energy functional, L2 gradients, and deterministic gradient descent for
// the full 4D equations and their dimensional reduction.
//
// Energy: |Fhat - mu(u)|^2 summed over the three components plus the
// component norm of the covariant derivative (4D) or the norm of the
// contracted operator (reduced).  Gradients are pointwise densities: the
// directional derivative of the energy equals the cell-weighted L2 inner
// product of the gradient with the direction.

#include <sw/sw_ops.hpp>

#include <utility>
#include <vector>

namespace sw {

struct SolveSettings {
  int max_steps = 5000;
  double step_size = 1e-2;  // halved on any energy increase, never regrown
  double tol = 1e-8;        // stop once sqrt(energy) drops below this
  Scheme scheme = Scheme::link;
  Convention convention = Convention::paper;
  int report_every = 100;
};

struct TraceRow {
  int step = 0;
  double energy = 0;
  double curvature_residual = 0;  // sqrt of the |Fhat - mu|^2 part
  double dirac_residual = 0;      // sqrt of the Dirac part
  double grad_norm = 0;
};

struct Gradient4 {
  GaugeField4 gA;
  SpinorField4 gu;
  explicit Gradient4(const Grid4& g) : gA(g), gu(g) {}
};

struct Gradient2 {
  ScalarField2 a0, a1, phi1, phi2;
  SpinorField2 u;
  explicit Gradient2(const Grid2& g) : a0(g), a1(g), phi1(g), phi2(g), u(g) {}
};

double energy(const GaugeField4& A, const SpinorField4& u, Convention conv, Scheme scheme);
Gradient4 gradient(const GaugeField4& A, const SpinorField4& u, Convention conv, Scheme scheme);

double energy2(const ReducedConfig& c, Scheme scheme, Transverse t);
Gradient2 gradient2(const ReducedConfig& c, Scheme scheme, Transverse t);

// (curvature part, Dirac part) as L2 norms.  The 4D Dirac part uses the
// contracted operator so that lifted reduced configurations report the
// same pair as residual_norms2 on the base.
std::pair<double, double> residual_norms(const GaugeField4& A, const SpinorField4& u,
                                         Convention conv, Scheme scheme);
std::pair<double, double> residual_norms2(const ReducedConfig& c, Scheme scheme, Transverse t);

struct DescendResult {
  GaugeField4 A;
  SpinorField4 u;
  std::vector<TraceRow> trace;
  int steps = 0;
  double final_energy = 0;
  bool converged = false;
};

struct Solve2Result {
  ReducedConfig c;
  std::vector<TraceRow> trace;
  int steps = 0;
  double final_energy = 0;
  bool converged = false;
};

DescendResult descend(GaugeField4 A, SpinorField4 u, const SolveSettings& s);
Solve2Result solve_reduced(ReducedConfig c, const SolveSettings& s, Transverse t);

}  // namespace sw
