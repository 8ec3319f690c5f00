#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fucik::svg {
namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 56;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_plot(const std::vector<Polyline>& curves,
                        double trivial_level, const std::string& x_label,
                        const std::string& y_label) {
  double xmin = trivial_level, xmax = trivial_level;
  double ymin = trivial_level, ymax = trivial_level;
  for (const Polyline& c : curves) {
    for (const auto& [x, y] : c.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > ymin)) ymax = ymin + 1;
  const double padx = 0.1 * (xmax - xmin), pady = 0.1 * (ymax - ymin);
  xmin -= padx;
  xmax += padx;
  ymin -= pady;
  ymax += pady;

  auto sx = [&](double x) {
    return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
  };
  auto sy = [&](double y) {
    return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
  };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         num(kWidth) + " " + num(kHeight) + "\">\n";

  // axes
  out += "  <line class=\"axis\" x1=\"" + num(kMargin) + "\" y1=\"" +
         num(kHeight - kMargin) + "\" x2=\"" + num(kWidth - kMargin) +
         "\" y2=\"" + num(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
  out += "  <line class=\"axis\" x1=\"" + num(kMargin) + "\" y1=\"" +
         num(kMargin) + "\" x2=\"" + num(kMargin) + "\" y2=\"" +
         num(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
  out += "  <text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\">" + x_label + "</text>\n";
  out += "  <text x=\"16\" y=\"" + num(kHeight / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(kHeight / 2) + ")\">" + y_label + "</text>\n";
  out += "  <text x=\"" + num(kMargin) + "\" y=\"" + num(kHeight - kMargin + 16) +
         "\" text-anchor=\"middle\">" + num(xmin) + "</text>\n";
  out += "  <text x=\"" + num(kWidth - kMargin) + "\" y=\"" +
         num(kHeight - kMargin + 16) + "\" text-anchor=\"middle\">" + num(xmax) +
         "</text>\n";
  out += "  <text x=\"" + num(kMargin - 6) + "\" y=\"" + num(kMargin) +
         "\" text-anchor=\"end\">" + num(ymax) + "</text>\n";

  // trivial lines
  out += "  <line class=\"trivial-line\" x1=\"" + num(kMargin) + "\" y1=\"" +
         num(sy(trivial_level)) + "\" x2=\"" + num(kWidth - kMargin) +
         "\" y2=\"" + num(sy(trivial_level)) +
         "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";
  out += "  <line class=\"trivial-line\" x1=\"" + num(sx(trivial_level)) +
         "\" y1=\"" + num(kMargin) + "\" x2=\"" + num(sx(trivial_level)) +
         "\" y2=\"" + num(kHeight - kMargin) +
         "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";

  for (const Polyline& c : curves) {
    std::string pts;
    for (const auto& [x, y] : c.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (!pts.empty()) pts += " ";
      pts += num(sx(x)) + "," + num(sy(y));
    }
    out += "  <polyline class=\"curve\" fill=\"none\" stroke=\"#1f4e9c\" points=\"" +
           pts + "\"/>\n";
    if (!c.label.empty() && !c.points.empty()) {
      const auto& [lx, ly] = c.points[c.points.size() / 2];
      if (std::isfinite(lx) && std::isfinite(ly))
        out += "  <text x=\"" + num(sx(lx) + 4) + "\" y=\"" + num(sy(ly) - 4) +
               "\" font-size=\"11\">" + c.label + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fucik::svg
