#pragma once

#include <vector>

#include "fucik/geometry.hpp"

namespace fucik {

// Rasterized clearance evaluator: inside/outside mask on a uniform grid,
// exact Euclidean distance transform to the outside cells, and a local
// refinement step that measures the true distance to the recorded nearest
// outside site. Fallback for unions whose exact arrangement is expensive
// (many polygon vertices); the error is O(h) with h the cell size,
// bounded by error_bound(). Default resolution: h = diameter / 2048.
class DistanceField {
 public:
  explicit DistanceField(const Domain& domain, double cell_size = 0.0);

  double clearance(Point2 p) const;  // throws DomainError outside the mask
  double cell_size() const { return h_; }
  double error_bound() const { return 1.5 * h_; }

 private:
  int index(int ix, int iy) const { return iy * nx_ + ix; }
  Point2 cell_center(int ix, int iy) const;

  double h_ = 0.0;
  int nx_ = 0, ny_ = 0;
  Point2 origin_;
  std::vector<char> inside_;
  std::vector<int> site_;  // flat index of the nearest outside cell
};

}  // namespace fucik
