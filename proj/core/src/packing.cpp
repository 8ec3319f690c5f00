#include "fucik/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fucik/parallel.hpp"

namespace fucik {
namespace {

constexpr double kLowest = std::numeric_limits<double>::lowest();

using Coords = std::array<double, 4>;

double radical_inverse(unsigned long long i, int base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

// Poll directions: coordinate moves plus all two-coordinate diagonals, which
// keep the search from stalling on the ridges of a min-structured objective.
std::vector<Coords> poll_directions(int dim) {
  std::vector<Coords> dirs;
  for (int i = 0; i < dim; ++i) {
    for (const double s : {1.0, -1.0}) {
      Coords d{};
      d[i] = s;
      dirs.push_back(d);
    }
  }
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (const double si : {1.0, -1.0}) {
        for (const double sj : {1.0, -1.0}) {
          Coords d{};
          d[i] = si * inv_sqrt2;
          d[j] = sj * inv_sqrt2;
          dirs.push_back(d);
        }
      }
    }
  }
  return dirs;
}

struct LocalResult {
  Coords x{};
  double value = kLowest;
  long evals = 0;
  bool converged = false;
};

template <typename F>
LocalResult nelder_mead(const F& f, Coords x0, int dim, double step,
                        double stop_size, long max_evals, long& evals) {
  const int m = dim + 1;
  std::vector<Coords> xs(m, x0);
  std::vector<double> vs(m);
  for (int i = 1; i < m; ++i) xs[i][i - 1] += step;
  for (int i = 0; i < m; ++i) {
    vs[i] = f(xs[i]);
    ++evals;
  }

  auto centroid_except = [&](int skip) {
    Coords c{};
    for (int i = 0; i < m; ++i) {
      if (i == skip) continue;
      for (int d = 0; d < dim; ++d) c[d] += xs[i][d];
    }
    for (int d = 0; d < dim; ++d) c[d] /= (m - 1);
    return c;
  };
  auto blend = [&](const Coords& c, const Coords& w, double coef) {
    Coords y{};
    for (int d = 0; d < dim; ++d) y[d] = c[d] + coef * (c[d] - w[d]);
    return y;
  };

  while (evals < max_evals) {
    int best = 0, worst = 0, second_worst = 0;
    for (int i = 1; i < m; ++i) {
      if (vs[i] > vs[best]) best = i;
      if (vs[i] < vs[worst]) worst = i;
    }
    second_worst = best;
    for (int i = 0; i < m; ++i)
      if (i != worst && vs[i] < vs[second_worst]) second_worst = i;

    double size = 0.0;
    for (int i = 0; i < m; ++i)
      for (int d = 0; d < dim; ++d)
        size = std::max(size, std::abs(xs[i][d] - xs[best][d]));
    if (size < stop_size) break;

    const Coords c = centroid_except(worst);
    const Coords xr = blend(c, xs[worst], 1.0);
    const double vr = f(xr);
    ++evals;
    if (vr > vs[best]) {
      const Coords xe = blend(c, xs[worst], 2.0);
      const double ve = f(xe);
      ++evals;
      xs[worst] = ve > vr ? xe : xr;
      vs[worst] = std::max(ve, vr);
      continue;
    }
    if (vr > vs[second_worst]) {
      xs[worst] = xr;
      vs[worst] = vr;
      continue;
    }
    const Coords xc = blend(c, xs[worst], -0.5);
    const double vc = f(xc);
    ++evals;
    if (vc > vs[worst]) {
      xs[worst] = xc;
      vs[worst] = vc;
      continue;
    }
    for (int i = 0; i < m; ++i) {
      if (i == best) continue;
      for (int d = 0; d < dim; ++d)
        xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
      vs[i] = f(xs[i]);
      ++evals;
    }
  }

  int best = 0;
  for (int i = 1; i < m; ++i)
    if (vs[i] > vs[best]) best = i;
  return {xs[best], vs[best], evals, true};
}

template <typename F>
LocalResult compass_search(const F& f, Coords x0, double v0, int dim,
                           double step, double mesh_target, long max_evals,
                           long& evals, const std::vector<Coords>& dirs) {
  Coords x = x0;
  double fx = v0;
  bool converged = false;
  while (evals + static_cast<long>(dirs.size()) <= max_evals) {
    double best_v = fx;
    Coords best_x = x;
    for (const Coords& d : dirs) {
      Coords y = x;
      for (int k = 0; k < dim; ++k) y[k] += step * d[k];
      const double vy = f(y);
      ++evals;
      if (vy > best_v) {
        best_v = vy;
        best_x = y;
      }
    }
    if (best_v > fx) {
      fx = best_v;
      x = best_x;
      continue;
    }
    step *= 0.5;
    if (step < mesh_target) {
      converged = true;
      break;
    }
  }
  return {x, fx, evals, converged};
}

struct Seeded {
  Point2 point;
  double clearance = 0.0;
};

// Interior grid points with precomputed clearance, used both to seed the
// local searches and as the grid half of the certified gap.
std::vector<Seeded> seed_points(const Domain& domain, int per_axis) {
  std::vector<Seeded> pts;
  if (domain.is_interval()) {
    const auto& iv = domain.interval();
    const int n = per_axis * per_axis;
    for (int i = 0; i < n; ++i) {
      const double x = iv.a + (iv.b - iv.a) * (i + 0.5) / n;
      pts.push_back({{x, 0.0}, std::min(x - iv.a, iv.b - x)});
    }
    return pts;
  }
  const auto [lo, hi] = domain.bounding_box();
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      const Point2 p{lo.x + (hi.x - lo.x) * (i + 0.5) / per_axis,
                     lo.y + (hi.y - lo.y) * (j + 0.5) / per_axis};
      if (domain.contains(p)) pts.push_back({p, domain.clearance(p)});
    }
  }
  return pts;
}

struct GridPair {
  Coords x{};
  double value = kLowest;
};

bool distinct_pair(const Coords& a, const Coords& b, double min_sep) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d += std::abs(a[k] - b[k]);
  return d > min_sep;
}

}  // namespace

double default_tol(const Domain& domain) { return 1e-4 * domain.diameter(); }

InradiusSolution inradius(const Domain& domain, double tol,
                          const SolverOptions& options) {
  if (!(tol > 0.0)) throw ValidationError("inradius: tol must be positive");
  const bool interval = domain.is_interval();
  const int dim = interval ? 1 : 2;
  const double diam = domain.diameter();
  const double mesh_target = std::max(tol / 8.0, 1e-13 * diam);
  const auto [lo, hi] = domain.bounding_box();

  auto objective = [&](const Coords& x) {
    return domain.signed_clearance({x[0], interval ? 0.0 : x[1]});
  };

  const std::vector<Seeded> grid = seed_points(domain, 48);
  if (grid.empty()) throw DomainError("inradius: no interior points found");
  double grid_best = kLowest;
  std::vector<std::pair<double, Point2>> ranked;
  ranked.reserve(grid.size());
  for (const Seeded& s : grid) {
    grid_best = std::max(grid_best, s.clearance);
    ranked.push_back({s.clearance, s.point});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<Coords> starts;
  const size_t top = std::min<size_t>(8, ranked.size());
  for (size_t i = 0; i < top; ++i)
    starts.push_back({ranked[i].second.x, ranked[i].second.y, 0, 0});
  const unsigned long long offset =
      1 + static_cast<unsigned long long>(options.seed % 100000) * 64;
  const int extra = std::max(0, options.starts / 2);
  for (int i = 0, kept = 0; kept < extra && i < 64 * (extra + 1); ++i) {
    const unsigned long long idx = offset + i;
    const Point2 p{lo.x + (hi.x - lo.x) * radical_inverse(idx, 2),
                   lo.y + (hi.y - lo.y) * radical_inverse(idx, 3)};
    if (!domain.contains(interval ? Point2{p.x, 0.0} : p)) continue;
    starts.push_back({p.x, interval ? 0.0 : p.y, 0, 0});
    ++kept;
  }

  const std::vector<Coords> dirs = poll_directions(dim);
  std::vector<LocalResult> results(starts.size());
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    long evals = 0;
    const long budget = options.max_evals_per_start;
    LocalResult nm = nelder_mead(objective, starts[i], dim, 0.08 * diam,
                                 4 * mesh_target, budget / 4, evals);
    results[i] = compass_search(objective, nm.x, nm.value, dim, 0.02 * diam,
                                mesh_target, budget, evals, dirs);
  });

  long total_evals = 0;
  double best_v = kLowest;
  for (const LocalResult& r : results) {
    total_evals += r.evals;
    best_v = std::max(best_v, r.value);
  }
  const LocalResult* winner = nullptr;
  for (const LocalResult& r : results) {
    if (r.value < best_v - 0.25 * tol) continue;
    if (!winner || r.x < winner->x) winner = &r;
  }

  InradiusSolution out;
  out.center = {winner->x[0], interval ? 0.0 : winner->x[1]};
  out.radius = winner->value;
  out.iterations = total_evals;
  out.certified_gap = 2.0 * mesh_target + std::max(0.0, grid_best - out.radius);
  if (!(out.radius > 0.0)) throw DomainError("inradius: domain has empty interior");
  if (!winner->converged) throw BudgetExceededError(out);
  return out;
}

TwoBallSolution two_ball_rho(const Domain& domain, double t, double tol,
                             const SolverOptions& options) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw ValidationError("two_ball_rho: weight t must be finite and > 0");
  if (!(tol > 0.0)) throw ValidationError("two_ball_rho: tol must be positive");
  const bool interval = domain.is_interval();
  const int dim = interval ? 2 : 4;
  const double diam = domain.diameter();
  const double sensitivity = std::max(1.0, 1.0 / t);
  const double mesh_target = std::max(tol / (8.0 * sensitivity), 1e-13 * diam);
  const auto [lo, hi] = domain.bounding_box();

  auto center1 = [&](const Coords& x) -> Point2 {
    return interval ? Point2{x[0], 0.0} : Point2{x[0], x[1]};
  };
  auto center2 = [&](const Coords& x) -> Point2 {
    return interval ? Point2{x[1], 0.0} : Point2{x[2], x[3]};
  };
  auto objective = [&](const Coords& x) {
    const Point2 c1 = center1(x), c2 = center2(x);
    const double sc1 = domain.signed_clearance(c1);
    const double sc2 = domain.signed_clearance(c2);
    return std::min({sc1 / t, sc2, distance(c1, c2) / (1.0 + t)});
  };
  auto pack = [&](Point2 c1, Point2 c2) -> Coords {
    if (interval) return {c1.x, c2.x, 0, 0};
    return {c1.x, c1.y, c2.x, c2.y};
  };

  // Seeding sweep: rank all ordered grid pairs, keep the best of each basin.
  const std::vector<Seeded> grid = seed_points(domain, options.seed_grid);
  if (grid.size() < 2) throw DomainError("two_ball_rho: domain too small to seed");
  std::vector<GridPair> top_pairs;
  double grid_best = kLowest;
  {
    std::vector<GridPair> heap;
    const size_t heap_cap = 64;
    auto cmp = [](const GridPair& a, const GridPair& b) { return a.value > b.value; };
    for (size_t i = 0; i < grid.size(); ++i) {
      for (size_t j = 0; j < grid.size(); ++j) {
        if (i == j) continue;
        const double v =
            std::min({grid[i].clearance / t, grid[j].clearance,
                      distance(grid[i].point, grid[j].point) / (1.0 + t)});
        grid_best = std::max(grid_best, v);
        if (heap.size() < heap_cap) {
          heap.push_back({pack(grid[i].point, grid[j].point), v});
          std::push_heap(heap.begin(), heap.end(), cmp);
        } else if (v > heap.front().value) {
          std::pop_heap(heap.begin(), heap.end(), cmp);
          heap.back() = {pack(grid[i].point, grid[j].point), v};
          std::push_heap(heap.begin(), heap.end(), cmp);
        }
      }
    }
    std::sort(heap.begin(), heap.end(),
              [](const GridPair& a, const GridPair& b) { return a.value > b.value; });
    for (const GridPair& cand : heap) {
      bool fresh = true;
      for (const GridPair& kept : top_pairs)
        if (!distinct_pair(cand.x, kept.x, diam / 8.0)) fresh = false;
      if (fresh) top_pairs.push_back(cand);
      if (top_pairs.size() >= 8) break;
    }
  }

  std::vector<Coords> starts;
  // Warm starts are always given as (c1x, c1y, c2x, c2y).
  for (const auto& ws : options.warm_starts)
    starts.push_back(pack({ws[0], ws[1]}, {ws[2], ws[3]}));
  for (const GridPair& gp : top_pairs) starts.push_back(gp.x);
  const unsigned long long offset =
      1 + static_cast<unsigned long long>(options.seed % 100000) * 64;
  for (int i = 0, kept = 0; kept < options.starts && i < 64 * (options.starts + 1);
       ++i) {
    const unsigned long long idx = offset + i;
    Point2 c1{lo.x + (hi.x - lo.x) * radical_inverse(idx, 2),
              lo.y + (hi.y - lo.y) * radical_inverse(idx, 3)};
    Point2 c2{lo.x + (hi.x - lo.x) * radical_inverse(idx, 5),
              lo.y + (hi.y - lo.y) * radical_inverse(idx, 7)};
    if (interval) {
      c1.y = 0.0;
      c2.y = 0.0;
    }
    if (!domain.contains(c1) || !domain.contains(c2)) continue;
    starts.push_back(pack(c1, c2));
    ++kept;
  }

  const std::vector<Coords> dirs = poll_directions(dim);
  std::vector<LocalResult> results(starts.size());
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    long evals = 0;
    const long budget = options.max_evals_per_start;
    LocalResult nm = nelder_mead(objective, starts[i], dim, 0.08 * diam,
                                 4 * mesh_target, budget / 4, evals);
    results[i] = compass_search(objective, nm.x, nm.value, dim, 0.02 * diam,
                                mesh_target, budget, evals, dirs);
  });

  long total_evals = 0;
  double best_v = kLowest;
  for (const LocalResult& r : results) {
    total_evals += r.evals;
    best_v = std::max(best_v, r.value);
  }

  auto canonical = [&](Coords x) {
    // At t = 1 the two roles are interchangeable; order the centers so ties
    // resolve reproducibly.
    if (t == 1.0) {
      const Coords swapped = pack(center2(x), center1(x));
      if (swapped < x) return swapped;
    }
    return x;
  };

  Coords win{};
  bool have_winner = false;
  bool winner_converged = true;
  for (const LocalResult& r : results) {
    if (r.value < best_v - 0.25 * tol) continue;
    const Coords c = canonical(r.x);
    if (!have_winner || c < win) {
      win = c;
      have_winner = true;
      winner_converged = r.converged;
    }
  }

  // Re-polish the winner so the canonical representative itself is
  // mesh-converged.
  long polish_evals = 0;
  const LocalResult polished =
      compass_search(objective, win, objective(win), dim, 8 * mesh_target,
                     mesh_target, options.max_evals_per_start, polish_evals, dirs);
  total_evals += polish_evals + 1;
  win = canonical(polished.x);

  TwoBallSolution out;
  out.t = t;
  out.centers = {center1(win), center2(win)};
  const double sc1 = domain.signed_clearance(out.centers[0]);
  const double sc2 = domain.signed_clearance(out.centers[1]);
  out.objective_terms = {sc1 / t, sc2,
                         distance(out.centers[0], out.centers[1]) / (1.0 + t)};
  out.rho = std::min({out.objective_terms[0], out.objective_terms[1],
                      out.objective_terms[2]});
  out.radii = {t * out.rho, out.rho};
  out.iterations = total_evals;
  out.certified_gap =
      mesh_target * (1.0 + sensitivity) + std::max(0.0, grid_best - out.rho);
  out.budget_exhausted = !winner_converged || !polished.converged;
  if (!(out.rho > 0.0))
    throw DomainError("two_ball_rho: domain cannot host two disjoint balls");
  return out;
}

double max_twin_radius(const Domain& domain, double tol,
                       const SolverOptions& options) {
  return two_ball_rho(domain, 1.0, tol, options).rho;
}

}  // namespace fucik
