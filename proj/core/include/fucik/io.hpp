#pragma once

#include <string>
#include <vector>

#include "fucik/one_dim.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

// Domain file format:
//   {"shapes": [{"type": "ball", "center": [x, y], "radius": r},
//               {"type": "rectangle", "min": [x, y], "max": [x, y]},
//               {"type": "stadium", "a": [x, y], "b": [x, y], "half_width": w},
//               {"type": "annulus", "center": [x, y], "inner": r1, "outer": r2},
//               {"type": "polygon", "vertices": [[x, y], ...]},
//               {"type": "interval", "a": a, "b": b}]}
// or the generator form
//   {"linked_balls": {"r1": ..., "r2": ..., "gap": ..., "tube_half_width": ...}}.
// Malformed input throws ValidationError.
DomainSpec parse_domain_json(const std::string& text);
DomainSpec load_domain_file(const std::string& path);
std::string domain_to_json(const DomainSpec& spec);

// RFC-4180 CSV, header row, '.' decimal separator, LF line endings, values
// printed with 17 significant digits so identical runs are byte-identical.
std::string curve_to_csv(const SpectrumCurve& curve);

struct Curve1DSample {
  int k = 1;
  Branch1D branch = Branch1D::odd_plus;
  double p = 2.0;  // may be infinity
  double s = 1.0;
  FucikPair roots;  // root coordinates for finite p, limit values otherwise
};
std::string curve_1d_to_csv(const std::vector<Curve1DSample>& rows);

std::string profile_to_csv(const std::vector<double>& xs,
                           const std::vector<double>& us);
std::string convergence_to_csv(const ConvergenceReport& report);

// JSON reports carry {"schema": "fucik/1", "tool_version": ...}.
std::string classification_to_json(const SpectrumClassification& cls);
std::string inradius_to_json(const InradiusSolution& sol);
std::string viscosity_to_json(const ViscosityReport& report, FucikPair pair,
                              double ell, int n);
std::string curve_to_json(const SpectrumCurve& curve);

const char* branch_name(Branch1D branch);
Branch1D parse_branch(const std::string& name);

}  // namespace fucik
