#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fucik/geometry.hpp"  // ValidationError, DomainError

namespace fucik {

// Half-period of the generalized sine: pi_p = 2 (p-1)^(1/p) * I(p) with
// I(p) the improper integral of (1 - s^p)^(-1/p) over (0, 1), evaluated by
// tanh-sinh quadrature to absolute error <= 1e-10 (for p >= 1.1).
// pi_2 = pi and pi_p -> 2 as p grows.
double pi_p(double p);

// k-th Dirichlet eigenvalue of the 1D p-Laplacian, lambda = (k pi_p)^p,
// carried in root/log space so large p cannot overflow.
struct Lambda1D {
  double root = 0.0;       // lambda^(1/p) = k * pi_p
  double log_value = 0.0;  // p * log(root)
  bool linear_representable = false;
  double linear() const;   // exp(log_value); +inf when not representable
};
Lambda1D lambda_kp(int k, double p);

// Generalized sine, 2*pi_p-periodic and odd, normalized so that
// sin_p(pi_p/2) = 1 and u(x) = sin_p(pi_p x) solves the 1D p-Laplacian
// eigenproblem on (0,1) with lambda = pi_p^p. On [0, pi_p/2] it inverts
// y -> 2 (p-1)^(1/p) * integral_0^y (1-s^p)^(-1/p) ds (argument doubled);
// the rest follows by the quarter-wave symmetry sin_p(pi_p - x) = sin_p(x).
class SinP {
 public:
  explicit SinP(double p);
  double exponent() const { return p_; }
  double pi() const { return pi_p_; }
  double operator()(double x) const;

 private:
  double invert_quarter(double target) const;  // F(y) = target on [0, 1]
  double p_;
  double pi_p_;
  double scale_;  // 2 (p-1)^(1/p)
};

// One-shot convenience; construct a SinP for repeated evaluation.
double sin_p(double p, double x);

enum class Branch1D { even, odd_plus, odd_minus };

// One member of the family of 1D spectrum curves: index k, branch (even for
// k even, odd_plus/odd_minus for k odd), exponent p (may be infinity).
struct CurveFamily1D {
  int k = 1;
  Branch1D branch = Branch1D::odd_plus;
  double p = 2.0;
};

struct FucikPair {
  double alpha = 0.0;
  double beta = 0.0;
};

// Point of the finite-p curve in root coordinates (alpha^(1/p), beta^(1/p)),
// parametrized by the slope s of the ray beta = s^p alpha. At s = 1 every
// branch passes through (k pi_p, k pi_p).
FucikPair curve_1d_finite(const CurveFamily1D& family, double s);

// Closed-form limit curves: even k gives (k(1+1/s), k(1+s)); odd k gives
// (k-1 + (k+1)/s, k+1 + s(k-1)) and the coefficient swap for the minus
// branch. At s = 1 all branches pass through (2k, 2k).
FucikPair curve_1d_infinity(int k, Branch1D branch, double s);

struct ConvergenceRow {
  double p = 0.0;
  double alpha_root = 0.0;
  double beta_root = 0.0;
  double distance = 0.0;  // Euclidean distance to the limit pair
};
struct ConvergenceReport {
  FucikPair limit;
  std::vector<ConvergenceRow> rows;
  bool tail_monotone = false;      // distances strictly decreasing on the tail
  double extrapolated_limit = 0.0; // Richardson estimate of the residual limit
};
ConvergenceReport converge_check(int k, Branch1D branch, double s,
                                 std::span<const double> p_list);

// Limit eigenfunction on (0,1) with nodal point at ell: the piecewise-linear
// profile with slopes +-1, positive on (0, ell) and negative on (ell, 1).
double eigenfunction_infinity(double ell, double x);

// Its eigenvalue pair (2/ell, 2/(1-ell)).
FucikPair eigenpair_infinity(double ell);

// Finite-p profile with the same nodal point: a sin_p half-wave of amplitude
// 1 on (0, ell) and a negative half-wave on (ell, 1) scaled by (1-ell)/ell so
// the flux is continuous across the node.
class EigenfunctionP {
 public:
  EigenfunctionP(double ell, double p);
  double operator()(double x) const;
  double ell() const { return ell_; }

 private:
  double ell_;
  SinP trig_;
};
double eigenfunction_p(double ell, double p, double x);

// Uniform-grid samples of a candidate eigenfunction on (0,1) with zero
// boundary values; x_i = i/n for i = 0..n.
struct GridFunction1D {
  int n = 0;
  std::vector<double> values;
  double delta_kink = 1e-6;  // one-sided slope gap that flags a kink

  static GridFunction1D sample(const std::function<double(double)>& f, int n,
                               double delta_kink = 1e-6);
};

struct ViscosityOptions {
  double curvature = 1e3;         // |phi''|/2 of the kink test parabolas
  int slope_samples = 33;         // test slopes spanning the one-sided slopes
  double zero_tol = 1e-12;        // |u| below this counts as the null set
  double report_threshold = 1e-9; // violations below this are not listed
};

enum class Region1D { positive, negative, zero };

struct ViscosityViolation {
  double x = 0.0;
  double violation = 0.0;
  Region1D region = Region1D::zero;
  bool at_kink = false;
};

struct ViscosityReport {
  double max_violation = 0.0;
  std::vector<ViscosityViolation> violating_points;
};

// Checks how far a grid function is from being a viscosity solution of the
// limit eigenvalue equation for the given pair. At smooth grid points the
// min/max expressions are evaluated with centered differences
// (the 1D infinity-Laplacian is (u')^2 u''). At kinks, quadratic test
// functions with slopes between the one-sided slopes probe the one-sided
// (sub- or supersolution) inequality that admits test functions there.
ViscosityReport viscosity_residual(const GridFunction1D& u, FucikPair pair,
                                   const ViscosityOptions& options = {});

}  // namespace fucik
