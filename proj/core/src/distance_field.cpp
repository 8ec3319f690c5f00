#include "fucik/distance_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fucik {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1D squared-distance transform (lower envelope of parabolas), tracking the
// argmin so the 2D pass can recover nearest-site coordinates. Infinite
// parabolas never enter the envelope.
void edt_1d(const std::vector<double>& f, const std::vector<int>& fa,
            std::vector<double>& d, std::vector<int>& da) {
  const int n = static_cast<int>(f.size());
  std::vector<int> cand;
  cand.reserve(n);
  for (int q = 0; q < n; ++q)
    if (f[q] < kInf) cand.push_back(q);
  if (cand.empty()) {
    std::fill(d.begin(), d.end(), kInf);
    std::fill(da.begin(), da.end(), -1);
    return;
  }

  std::vector<int> v(cand.size());
  std::vector<double> z(cand.size() + 1);
  int k = 0;
  v[0] = cand[0];
  z[0] = -kInf;
  z[1] = kInf;
  for (size_t c = 1; c < cand.size(); ++c) {
    const int q = cand[c];
    double s = ((f[q] + static_cast<double>(q) * q) -
                (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
               (2.0 * q - 2.0 * v[k]);
    while (k > 0 && s <= z[k]) {
      --k;
      s = ((f[q] + static_cast<double>(q) * q) -
           (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
          (2.0 * q - 2.0 * v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
    da[q] = fa.empty() ? v[k] : fa[v[k]];
  }
}

}  // namespace

Point2 DistanceField::cell_center(int ix, int iy) const {
  return {origin_.x + (ix + 0.5) * h_, origin_.y + (iy + 0.5) * h_};
}

DistanceField::DistanceField(const Domain& domain, double cell_size) {
  if (domain.is_interval())
    throw ValidationError("DistanceField: 1D intervals are not rasterized");
  const auto [lo, hi] = domain.bounding_box();
  h_ = cell_size > 0.0 ? cell_size : domain.diameter() / 2048.0;
  // One ring of outside cells around the bounding box anchors the transform.
  nx_ = static_cast<int>(std::ceil((hi.x - lo.x) / h_)) + 4;
  ny_ = static_cast<int>(std::ceil((hi.y - lo.y) / h_)) + 4;
  origin_ = {lo.x - 2.0 * h_, lo.y - 2.0 * h_};

  inside_.assign(static_cast<size_t>(nx_) * ny_, 0);
  for (int iy = 0; iy < ny_; ++iy)
    for (int ix = 0; ix < nx_; ++ix)
      inside_[index(ix, iy)] = domain.contains(cell_center(ix, iy)) ? 1 : 0;

  // Column pass: squared distance to the nearest outside cell in each column.
  std::vector<double> col(ny_), dcol(ny_);
  std::vector<int> acol(ny_), tmp;
  std::vector<double> g(static_cast<size_t>(nx_) * ny_);
  std::vector<int> gy(static_cast<size_t>(nx_) * ny_);
  for (int ix = 0; ix < nx_; ++ix) {
    for (int iy = 0; iy < ny_; ++iy)
      col[iy] = inside_[index(ix, iy)] ? kInf : 0.0;
    edt_1d(col, {}, dcol, acol);
    for (int iy = 0; iy < ny_; ++iy) {
      g[index(ix, iy)] = dcol[iy];
      gy[index(ix, iy)] = acol[iy];
    }
  }

  // Row pass over the column results.
  site_.assign(static_cast<size_t>(nx_) * ny_, -1);
  std::vector<double> row(nx_), drow(nx_);
  std::vector<int> arow(nx_), ax(nx_);
  for (int iy = 0; iy < ny_; ++iy) {
    for (int ix = 0; ix < nx_; ++ix) {
      row[ix] = g[index(ix, iy)];
      ax[ix] = ix;
    }
    edt_1d(row, ax, drow, arow);
    for (int ix = 0; ix < nx_; ++ix) {
      const int sx = arow[ix];
      if (sx < 0) continue;
      const int sy = gy[index(sx, iy)];
      if (sy >= 0) site_[index(ix, iy)] = index(sx, sy);
    }
  }
}

double DistanceField::clearance(Point2 p) const {
  const int ix = static_cast<int>(std::floor((p.x - origin_.x) / h_));
  const int iy = static_cast<int>(std::floor((p.y - origin_.y) / h_));
  if (ix < 0 || iy < 0 || ix >= nx_ || iy >= ny_ || !inside_[index(ix, iy)])
    throw DomainError("DistanceField: point outside the rasterized domain");

  // Refinement: exact distance from p to the nearest outside sites recorded
  // around the query cell.
  double best = kInf;
  for (int dy = 0; dy <= 1; ++dy) {
    for (int dx = 0; dx <= 1; ++dx) {
      const int jx = std::min(ix + dx, nx_ - 1);
      const int jy = std::min(iy + dy, ny_ - 1);
      const int s = site_[index(jx, jy)];
      if (s < 0) continue;
      best = std::min(best, distance(p, cell_center(s % nx_, s / nx_)));
    }
  }
  return best == kInf ? 0.0 : std::max(0.0, best);
}

}  // namespace fucik
