#include "fucik/one_dim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fucik/quadrature.hpp"

namespace fucik {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw DomainError("exponent p must be finite and > 1");
}

// (1 - s^p)^(-1/p) with the cancellation near s = 1 routed through expm1;
// evaluated from the distance to the singular endpoint.
double integrand(double one_minus_s, double p) {
  const double one_minus_sp = -std::expm1(p * std::log1p(-one_minus_s));
  return std::pow(one_minus_sp, -1.0 / p);
}

void require_branch(int k, Branch1D branch) {
  if (k < 1) throw ValidationError("curve index k must be >= 1");
  const bool even = (k % 2 == 0);
  if (even != (branch == Branch1D::even))
    throw ValidationError("branch parity does not match k");
}

void require_slope(double s) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw ValidationError("slope parameter s must be finite and > 0");
}

void require_ell(double ell) {
  if (!(ell > 0.0) || !(ell < 1.0))
    throw ValidationError("nodal point ell must lie in (0, 1)");
}

}  // namespace

double pi_p(double p) {
  require_exponent(p);
  const double integral = tanh_sinh_quadrature(
      [p](double, double one_minus_s) { return integrand(one_minus_s, p); },
      0.0, 1.0, 1e-12);
  return 2.0 * std::pow(p - 1.0, 1.0 / p) * integral;
}

double Lambda1D::linear() const { return linear_representable ? std::exp(log_value) : kInf; }

Lambda1D lambda_kp(int k, double p) {
  if (k < 1) throw ValidationError("eigenvalue index k must be >= 1");
  require_exponent(p);
  Lambda1D out;
  out.root = k * pi_p(p);
  out.log_value = p * std::log(out.root);
  out.linear_representable = out.log_value < 709.0;
  return out;
}

SinP::SinP(double p) : p_(p) {
  require_exponent(p);
  scale_ = 2.0 * std::pow(p - 1.0, 1.0 / p);
  pi_p_ = scale_ * tanh_sinh_quadrature(
                       [p](double, double oms) { return integrand(oms, p); },
                       0.0, 1.0, 1e-12);
}

double SinP::invert_quarter(double target) const {
  // Solve F(y) = target with F(y) = scale * integral_0^y (1-s^p)^(-1/p) ds,
  // F increasing and convex on [0, 1], F(1) = pi_p. Safeguarded Newton.
  if (target <= 0.0) return 0.0;
  if (target >= pi_p_) return 1.0;
  double lo = 0.0, hi = 1.0;
  double y = std::sin(target / pi_p_ * (std::numbers::pi / 2));
  y = std::clamp(y, 1e-12, 1.0 - 1e-12);
  for (int iter = 0; iter < 80; ++iter) {
    // The quadrature reports the distance to the upper endpoint y; rebuild
    // the distance to 1 without cancellation as (1 - y) + (y - s).
    const double one_minus_y = 1.0 - y;
    const double F = scale_ * tanh_sinh_quadrature(
                                  [this, one_minus_y](double, double yms) {
                                    return integrand(one_minus_y + yms, p_);
                                  },
                                  0.0, y, 1e-13);
    const double resid = F - target;
    if (std::abs(resid) < 1e-13 * pi_p_) break;
    if (resid > 0.0)
      hi = y;
    else
      lo = y;
    const double one_minus_yp = -std::expm1(p_ * std::log1p(-(1.0 - y)));
    const double deriv = scale_ * std::pow(one_minus_yp, -1.0 / p_);
    double next = y - resid / deriv;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (next == y) break;
    y = next;
  }
  return y;
}

double SinP::operator()(double x) const {
  const double period = 2.0 * pi_p_;
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  double sign = 1.0;
  if (r >= pi_p_) {
    sign = -1.0;
    r -= pi_p_;
  }
  if (r > 0.5 * pi_p_) r = pi_p_ - r;
  return sign * invert_quarter(2.0 * r);
}

double sin_p(double p, double x) { return SinP(p)(x); }

FucikPair curve_1d_finite(const CurveFamily1D& family, double s) {
  require_branch(family.k, family.branch);
  require_slope(s);
  if (!std::isfinite(family.p))
    throw ValidationError("curve_1d_finite requires a finite exponent");
  const double pp = pi_p(family.p);
  const double k = family.k;
  double alpha_root = 0.0;
  switch (family.branch) {
    case Branch1D::even:
      alpha_root = 0.5 * k * pp * (1.0 + 1.0 / s);
      break;
    case Branch1D::odd_plus:
      alpha_root = 0.5 * ((k - 1.0) + (k + 1.0) / s) * pp;
      break;
    case Branch1D::odd_minus:
      alpha_root = 0.5 * ((k + 1.0) + (k - 1.0) / s) * pp;
      break;
  }
  return {alpha_root, s * alpha_root};
}

FucikPair curve_1d_infinity(int k, Branch1D branch, double s) {
  require_branch(k, branch);
  require_slope(s);
  const double kd = k;
  switch (branch) {
    case Branch1D::even:
      return {kd * (1.0 + 1.0 / s), kd * (1.0 + s)};
    case Branch1D::odd_plus:
      return {kd - 1.0 + (kd + 1.0) / s, kd + 1.0 + s * (kd - 1.0)};
    case Branch1D::odd_minus:
      return {kd + 1.0 + (kd - 1.0) / s, kd - 1.0 + s * (kd + 1.0)};
  }
  throw ValidationError("unknown branch");
}

ConvergenceReport converge_check(int k, Branch1D branch, double s,
                                 std::span<const double> p_list) {
  require_branch(k, branch);
  require_slope(s);
  if (p_list.empty()) throw ValidationError("p_list must not be empty");
  for (size_t i = 0; i < p_list.size(); ++i) {
    require_exponent(p_list[i]);
    if (i > 0 && !(p_list[i] > p_list[i - 1]))
      throw ValidationError("p_list must be strictly increasing");
  }

  ConvergenceReport report;
  report.limit = curve_1d_infinity(k, branch, s);
  for (const double p : p_list) {
    const FucikPair fp = curve_1d_finite({k, branch, p}, s);
    const double dist =
        std::hypot(fp.alpha - report.limit.alpha, fp.beta - report.limit.beta);
    report.rows.push_back({p, fp.alpha, fp.beta, dist});
  }

  const size_t n = report.rows.size();
  report.tail_monotone = true;
  for (size_t i = std::max<size_t>(1, n / 2); i < n; ++i)
    if (!(report.rows[i].distance < report.rows[i - 1].distance))
      report.tail_monotone = false;

  if (n >= 3) {
    const double d1 = report.rows[n - 3].distance;
    const double d2 = report.rows[n - 2].distance;
    const double d3 = report.rows[n - 1].distance;
    const double den = d1 - 2.0 * d2 + d3;
    report.extrapolated_limit =
        std::abs(den) > 1e-300 ? (d1 * d3 - d2 * d2) / den : d3;
  } else {
    report.extrapolated_limit = report.rows.back().distance;
  }
  return report;
}

double eigenfunction_infinity(double ell, double x) {
  require_ell(ell);
  if (!(x >= 0.0) || !(x <= 1.0))
    throw DomainError("eigenfunction argument must lie in [0, 1]");
  if (x <= 0.5 * ell) return x;
  if (x <= 0.5 * (ell + 1.0)) return ell - x;
  return x - 1.0;
}

FucikPair eigenpair_infinity(double ell) {
  require_ell(ell);
  return {2.0 / ell, 2.0 / (1.0 - ell)};
}

EigenfunctionP::EigenfunctionP(double ell, double p) : ell_(ell), trig_(p) {
  require_ell(ell);
}

double EigenfunctionP::operator()(double x) const {
  if (!(x >= 0.0) || !(x <= 1.0))
    throw DomainError("eigenfunction argument must lie in [0, 1]");
  if (x <= ell_) return trig_(trig_.pi() * x / ell_);
  const double scale = (1.0 - ell_) / ell_;
  return -scale * trig_(trig_.pi() * (x - ell_) / (1.0 - ell_));
}

double eigenfunction_p(double ell, double p, double x) {
  return EigenfunctionP(ell, p)(x);
}

GridFunction1D GridFunction1D::sample(const std::function<double(double)>& f,
                                      int n, double delta_kink) {
  if (n < 1) throw ValidationError("grid size must be >= 1");
  GridFunction1D g;
  g.n = n;
  g.delta_kink = delta_kink;
  g.values.resize(n + 1);
  for (int i = 0; i <= n; ++i) g.values[i] = f(static_cast<double>(i) / n);
  return g;
}

ViscosityReport viscosity_residual(const GridFunction1D& u, FucikPair pair,
                                   const ViscosityOptions& options) {
  if (u.n < 16) throw ValidationError("grid too coarse: need n >= 16");
  if (static_cast<int>(u.values.size()) != u.n + 1)
    throw ValidationError("grid value count does not match n");
  if (!(pair.alpha > 0.0) || !(pair.beta > 0.0))
    throw ValidationError("eigenvalue pair must be positive");
  double umax = 0.0;
  for (const double v : u.values) {
    if (!std::isfinite(v)) throw ValidationError("grid values must be finite");
    umax = std::max(umax, std::abs(v));
  }
  const double dirichlet_tol = 1e-9 * std::max(1.0, umax);
  if (std::abs(u.values.front()) > dirichlet_tol ||
      std::abs(u.values.back()) > dirichlet_tol)
    throw ValidationError("grid function must vanish at both endpoints");

  ViscosityReport report;
  const double h = 1.0 / u.n;
  const double M = options.curvature;

  auto record = [&](double x, double viol, Region1D region, bool kink) {
    report.max_violation = std::max(report.max_violation, viol);
    if (viol > options.report_threshold)
      report.violating_points.push_back({x, viol, region, kink});
  };

  // Residual of the region's equation for a C^2 test object with slope q and
  // second derivative upp at value u0: returns the signed expression whose
  // vanishing defines the equation.
  auto expression = [&](Region1D region, double q, double upp, double u0) {
    const double inf_lap = q * q * upp;
    switch (region) {
      case Region1D::positive:
        return std::min(-inf_lap, std::abs(q) - pair.alpha * u0);
      case Region1D::negative:
        return std::max(-inf_lap, -std::abs(q) + pair.beta * (-u0));
      case Region1D::zero:
        return -inf_lap;
    }
    return 0.0;
  };

  for (int i = 1; i < u.n; ++i) {
    const double x = static_cast<double>(i) / u.n;
    const double u0 = u.values[i];
    const double s_minus = (u.values[i] - u.values[i - 1]) / h;
    const double s_plus = (u.values[i + 1] - u.values[i]) / h;
    const Region1D region = u0 > options.zero_tol    ? Region1D::positive
                            : u0 < -options.zero_tol ? Region1D::negative
                                                     : Region1D::zero;

    if (std::abs(s_plus - s_minus) <= u.delta_kink) {
      const double up = 0.5 * (s_minus + s_plus);
      const double upp = (u.values[i + 1] - 2.0 * u.values[i] + u.values[i - 1]) / (h * h);
      record(x, std::abs(expression(region, up, upp, u0)), region, false);
      continue;
    }

    // Kink. A concave corner (slope drops) admits C^2 test functions only
    // from above, so only the subsolution inequality (expression <= 0) is
    // testable; a convex corner admits them only from below (expression >= 0).
    // Slopes strictly between the one-sided slopes admit both curvature
    // signs; the extreme slopes admit only the curvature that keeps the
    // parabola on the correct side.
    const bool concave = s_minus > s_plus;
    const double q_lo = std::min(s_minus, s_plus);
    const double q_hi = std::max(s_minus, s_plus);
    const int m = std::max(3, options.slope_samples);
    for (int j = 0; j < m; ++j) {
      const double q = q_lo + (q_hi - q_lo) * j / (m - 1);
      const bool extreme = (j == 0 || j == m - 1);
      for (const double a : {M, -M}) {
        if (extreme && ((concave && a < 0.0) || (!concave && a > 0.0))) continue;
        const double e = expression(region, q, 2.0 * a, u0);
        const double viol = concave ? std::max(0.0, e) : std::max(0.0, -e);
        record(x, viol, region, true);
      }
    }
  }
  return report;
}

}  // namespace fucik
