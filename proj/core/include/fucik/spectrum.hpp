#pragma once

#include <optional>
#include <vector>

#include "fucik/packing.hpp"

namespace fucik {

enum class SampleSource { optimizer, oracle, failed };

struct CurveSample {
  double t = 0.0;
  double alpha = 0.0;  // c_infinity(t) / t
  double beta = 0.0;   // c_infinity(t); beta = t * alpha by construction
  SampleSource source = SampleSource::optimizer;
  std::optional<TwoBallSolution> witness;
};

// The first nontrivial spectrum curve, sampled over a weight range.
struct SpectrumCurve {
  std::vector<CurveSample> samples;
};

enum class DomainKind { TypeI, TypeIIA, TypeIIB };

// Geometric classification of a domain by how its first nontrivial curve
// relates to the trivial lines: asymptotic (balls only), crossing, or
// contained (inradius equal to twin radius).
struct SpectrumClassification {
  DomainKind kind = DomainKind::TypeIIA;
  double inradius = 0.0;
  double twin_radius = 0.0;
  double trivial_level = 0.0;  // 1 / inradius
  double lambda2 = 0.0;        // 1 / twin_radius
  // Points where the curve meets the trivial lines; empty for TypeI,
  // the (degenerate) detachment corner for TypeIIB.
  std::vector<std::array<double, 2>> intersections;
};

// c_infinity(t) = 1 / rho*(t), the value whose ray parametrization
// (c/t, c) traces the first nontrivial curve. tol <= 0 uses default_tol.
double c_infinity(const Domain& domain, double t, double tol = 0.0,
                  const SolverOptions& options = {});

// Level of the two trivial lines, 1 / inradius.
double trivial_level(const Domain& domain, double tol = 0.0,
                     const SolverOptions& options = {});

// Samples the first nontrivial curve at n log-spaced weights in
// [t_min, t_max]. Samples are independent (computed concurrently); a failing
// sample is flagged rather than aborting the sweep.
SpectrumCurve curve_c2(const Domain& domain, double t_min, double t_max,
                       int n_samples, double tol = 0.0,
                       const SolverOptions& options = {});

// Classifies the domain and, for TypeIIA, locates the detachment weight by
// bisection on alpha(t) - trivial_level. tol <= 0 uses 1e-3 * diameter.
SpectrumClassification classify(const Domain& domain, double tol = 0.0,
                                const SolverOptions& options = {});

// Closed-form curve points for the worked example domains.
enum class OracleBranch { curve, trivial_extension };
struct OraclePoint {
  double alpha = 0.0;
  double beta = 0.0;
  OracleBranch branch = OracleBranch::curve;  // trivial_extension marks points
                                              // lying on a trivial line
};

OraclePoint oracle_ball(double radius, double t);
OraclePoint oracle_square(double t);  // unit square
OraclePoint oracle_linked(double r1, double r2, double t);

}  // namespace fucik
