#pragma once
// Invariant suites: each check runs a seeded batch of trials against one of
// the toolkit's exact identities and reports the worst relative defect, the
// tolerance it was judged at, and any constants fitted along the way.

#include <sw/solver.hpp>
#include <sw/symplectic.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sw {

struct InvariantRecord {
  std::string name;
  int trials = 0;
  double max_defect = 0;
  double tolerance = 0;
  bool pass = false;
  std::map<std::string, double> fitted;  // empty when nothing is fitted
  std::uint64_t seed = 0;
};

// Pointwise quaternion identities.
InvariantRecord check_moment_closed_form(std::uint64_t seed, int trials = 10000);
InvariantRecord check_hamiltonian_identity(std::uint64_t seed, int trials = 10000);

// Exact lattice gauge covariance in the link scheme: curvature, the self-dual
// projection, the residual, covariant derivatives, and component norms.
InvariantRecord check_gauge_exactness(const Grid4& g, Convention conv, std::uint64_t seed,
                                      int trials = 100);

// Reduction commutes with the lift to machine precision, over a matrix of
// grids, transverse lengths, and schemes; plus a reduced solve whose lift
// reports the same residual pair.
InvariantRecord check_lift_commutation(std::uint64_t seed, int trials = 50);
InvariantRecord check_solve_lift(std::uint64_t seed);

// The 2-form against its full wedge expansion, its structural properties,
// and positivity of the twist pairing.
InvariantRecord check_cross_terms(const Grid4& g, const FormConventions& fc, double conformal,
                                  std::uint64_t seed, int pairs = 1000);
InvariantRecord check_omega_structure(const Grid4& g, const FormConventions& fc, double conformal,
                                      std::uint64_t seed, int trials = 100);
InvariantRecord check_nondegeneracy(const FormConventions& fc, std::uint64_t seed,
                                    int trials = 1000);

// Slice restriction identity with a globally fitted kappa, and the moment map
// property of the gauge action with a globally fitted kappa_m.
InvariantRecord check_slice_identity(const FormConventions& fc, std::uint64_t seed,
                                     int trials = 100);
InvariantRecord check_moment_identity(const Grid4& g, const FormConventions& fc,
                                      std::uint64_t seed, int trials = 100);

// Discretization orders on an analytic single-harmonic configuration.
struct ConvergenceRow {
  int n = 0;
  double h = 0;
  double curv_link = 0, dirac_link = 0, curv_central = 0, dirac_central = 0;
};
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double order_curv_link = 0, order_dirac_link = 0;
  double order_curv_central = 0, order_dirac_central = 0;
};
ConvergenceTable convergence_table(const std::vector<int>& sizes);
InvariantRecord check_convergence_orders(std::uint64_t seed, const std::vector<int>& sizes = {4, 8, 16});

struct VerifyOptions {
  std::uint64_t seed = 1;
  Grid4 grid{{6, 6, 6, 6}, {1, 1, 1, 1}};
  Convention convention = Convention::paper;
  FormConventions forms{};
  double conformal = 0.3;
};

// All suites in report order, seeded from o.seed.
std::vector<InvariantRecord> run_all_checks(const VerifyOptions& o);

}  // namespace sw
