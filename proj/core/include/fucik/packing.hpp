#pragma once

#include <array>
#include <vector>

#include "fucik/geometry.hpp"

namespace fucik {

// Knobs of the derivative-free solvers. The defaults give reproducible
// results: the multistart sequence is low-discrepancy (seed shifts it), local
// searches are deterministic, and the reduction over starts is ordered, so a
// fixed seed yields identical output for any worker count.
struct SolverOptions {
  int starts = 64;        // multistart local searches beyond the grid seeds
  unsigned seed = 12345;  // offsets the low-discrepancy start sequence
  int seed_grid = 32;     // per-axis resolution of the seeding sweep
  long max_evals_per_start = 40000;  // local-search budget, objective evals
  std::vector<std::array<double, 4>> warm_starts;  // extra center pairs (c1, c2)
};

struct InradiusSolution {
  double radius = 0.0;
  Point2 center;
  long iterations = 0;       // objective evaluations spent
  double certified_gap = 0;  // practical bound on |reported - true|
};

// Thrown by inradius when the evaluation budget runs out before the mesh
// reaches the requested tolerance; carries the best solution found.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(InradiusSolution best_so_far)
      : std::runtime_error("optimizer budget exceeded"), best(best_so_far) {}
  InradiusSolution best;
};

struct TwoBallSolution {
  double rho = 0.0;  // optimal value of the weighted max-min problem
  double t = 1.0;
  std::array<Point2, 2> centers;
  std::array<double, 2> radii;  // {t * rho, rho}
  // The three competing quantities at the optimum:
  // clearance(c1)/t, clearance(c2), |c1 - c2|/(1 + t).
  std::array<double, 3> objective_terms{};
  long iterations = 0;
  double certified_gap = 0.0;
  bool budget_exhausted = false;
};

// Default solver tolerance: 1e-4 times the domain diameter.
double default_tol(const Domain& domain);

// Largest inscribed ball: maximizes the clearance over the domain with a
// seeded multistart (grid sweep + low-discrepancy starts), Nelder-Mead
// descent and a compass-search polish whose final mesh certifies the gap.
InradiusSolution inradius(const Domain& domain, double tol,
                          const SolverOptions& options = {});

// Weighted two-ball packing value
//   rho*(t) = max over center pairs of
//             min{clearance(c1)/t, clearance(c2), |c1 - c2|/(1 + t)},
// the largest rho such that disjoint balls of radii t*rho and rho fit in the
// domain. 1/rho*(t) is the spectrum value c_infinity(t). Deterministic for a
// fixed seed; equal-value optima are resolved to the lexicographically
// smallest center pair.
TwoBallSolution two_ball_rho(const Domain& domain, double t, double tol,
                             const SolverOptions& options = {});

// Largest common radius of two disjoint inscribed balls: rho*(1).
double max_twin_radius(const Domain& domain, double tol,
                       const SolverOptions& options = {});

}  // namespace fucik
