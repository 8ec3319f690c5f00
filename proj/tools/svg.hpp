#pragma once

#include <string>
#include <vector>

namespace fucik::svg {

struct Polyline {
  std::vector<std::pair<double, double>> points;
  std::string label;
};

// Minimal hand-rolled plot: linear axes auto-scaled to the data with a 10%
// margin, one <polyline class="curve"> per branch and two
// <line class="trivial-line"> elements at the given level.
std::string render_plot(const std::vector<Polyline>& curves,
                        double trivial_level, const std::string& x_label,
                        const std::string& y_label);

}  // namespace fucik::svg
