#include "fucik/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fucik/parallel.hpp"

namespace fucik {
namespace {

double resolve_tol(const Domain& domain, double tol) {
  return tol > 0.0 ? tol : default_tol(domain);
}

void require_weight(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw ValidationError("weight t must be finite and > 0");
}

}  // namespace

double c_infinity(const Domain& domain, double t, double tol,
                  const SolverOptions& options) {
  require_weight(t);
  return 1.0 / two_ball_rho(domain, t, resolve_tol(domain, tol), options).rho;
}

double trivial_level(const Domain& domain, double tol,
                     const SolverOptions& options) {
  return 1.0 / inradius(domain, resolve_tol(domain, tol), options).radius;
}

SpectrumCurve curve_c2(const Domain& domain, double t_min, double t_max,
                       int n_samples, double tol, const SolverOptions& options) {
  if (!(t_min > 0.0) || !(t_min < t_max))
    throw ValidationError("curve_c2: need 0 < t_min < t_max");
  if (n_samples < 2) throw ValidationError("curve_c2: need at least 2 samples");
  const double solver_tol = resolve_tol(domain, tol);

  SpectrumCurve curve;
  curve.samples.resize(n_samples);
  const double log_lo = std::log(t_min);
  const double log_hi = std::log(t_max);
  parallel_for(n_samples, [&](int i) {
    const double t =
        std::exp(log_lo + (log_hi - log_lo) * i / (n_samples - 1.0));
    CurveSample& s = curve.samples[i];
    s.t = t;
    try {
      TwoBallSolution sol = two_ball_rho(domain, t, solver_tol, options);
      s.beta = 1.0 / sol.rho;
      s.alpha = s.beta / t;
      s.source = SampleSource::optimizer;
      s.witness = std::move(sol);
    } catch (const std::exception&) {
      s.source = SampleSource::failed;
      s.alpha = s.beta = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return curve;
}

SpectrumClassification classify(const Domain& domain, double tol,
                                const SolverOptions& options) {
  const double cls_tol = tol > 0.0 ? tol : 1e-3 * domain.diameter();
  const double solver_tol = std::min(default_tol(domain), 0.25 * cls_tol);

  SpectrumClassification out;
  const InradiusSolution inr = inradius(domain, solver_tol, options);
  const TwoBallSolution twin = two_ball_rho(domain, 1.0, solver_tol, options);
  out.inradius = inr.radius;
  out.twin_radius = twin.rho;
  out.trivial_level = 1.0 / inr.radius;
  out.lambda2 = 1.0 / twin.rho;

  // A ball is the one domain whose curve never reaches the trivial lines:
  // detect it as "every boundary point lies on the inscribed ball".
  bool is_ball = true;
  for (const Point2& q : domain.boundary_samples(256)) {
    if (distance(q, inr.center) > inr.radius + cls_tol) {
      is_ball = false;
      break;
    }
  }
  if (is_ball) {
    out.kind = DomainKind::TypeI;
    return out;
  }

  if (out.inradius - out.twin_radius <= cls_tol) {
    out.kind = DomainKind::TypeIIB;
    out.intersections.push_back({out.lambda2, out.trivial_level});
    out.intersections.push_back({out.trivial_level, out.lambda2});
    return out;
  }

  out.kind = DomainKind::TypeIIA;

  // The curve joins the vertical trivial line where alpha(t) descends to the
  // trivial level. alpha is non-increasing in t, so the junction is found by
  // bisection; the matching point on the horizontal line is its mirror.
  const double level = out.trivial_level;
  const double delta = 1.25e-4 * level;
  const double bisect_tol = std::min(solver_tol, 7e-6 * domain.diameter());
  SolverOptions bisect_options = options;
  auto alpha_at = [&](double t) {
    const TwoBallSolution sol = two_ball_rho(domain, t, bisect_tol, bisect_options);
    bisect_options.warm_starts = {
        {sol.centers[0].x, sol.centers[0].y, sol.centers[1].x, sol.centers[1].y}};
    return 1.0 / (sol.rho * t);
  };

  double t_lo = 1.0;
  double t_hi = 2.0;
  bool bracketed = false;
  for (int i = 0; i < 24; ++i) {
    if (alpha_at(t_hi) <= level + delta) {
      bracketed = true;
      break;
    }
    t_lo = t_hi;
    t_hi *= 2.0;
  }
  if (!bracketed) return out;  // no junction located in range; leave empty

  while (t_hi - t_lo > 2e-3 * t_hi) {
    const double mid = 0.5 * (t_lo + t_hi);
    if (alpha_at(mid) <= level + delta)
      t_hi = mid;
    else
      t_lo = mid;
  }
  const double t_star = 0.5 * (t_lo + t_hi);
  const double beta_star =
      1.0 / two_ball_rho(domain, t_star, bisect_tol, bisect_options).rho;
  out.intersections.push_back({beta_star, level});
  out.intersections.push_back({level, beta_star});
  return out;
}

OraclePoint oracle_ball(double radius, double t) {
  if (!(radius > 0.0)) throw ValidationError("oracle_ball: radius must be > 0");
  require_weight(t);
  const double c = (1.0 + t) / radius;
  return {c / t, c, OracleBranch::curve};
}

OraclePoint oracle_square(double t) {
  require_weight(t);
  const double t_star = 3.0 - 2.0 * std::numbers::sqrt2;  // branch weight
  const double tau = 1.0 + std::numbers::sqrt2 / 2.0;
  if (t < t_star) return {2.0 / t, 2.0, OracleBranch::trivial_extension};
  if (t > 1.0 / t_star) return {2.0, 2.0 * t, OracleBranch::trivial_extension};
  const double c = tau * (t + 1.0);
  return {c / t, c, OracleBranch::curve};
}

OraclePoint oracle_linked(double r1, double r2, double t) {
  if (!(r1 > 0.0) || !(r2 >= r1))
    throw ValidationError("oracle_linked: need 0 < r1 <= r2");
  require_weight(t);
  if (t < r1 / r2)
    return {1.0 / (t * r2), 1.0 / r2, OracleBranch::trivial_extension};
  if (t <= 1.0) return {1.0 / r1, t / r1, OracleBranch::curve};
  if (t <= r2 / r1) return {1.0 / (t * r1), 1.0 / r1, OracleBranch::curve};
  return {1.0 / r2, t / r2, OracleBranch::trivial_extension};
}

}  // namespace fucik
