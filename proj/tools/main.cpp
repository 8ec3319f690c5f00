#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fucik/io.hpp"
#include "fucik/one_dim.hpp"
#include "fucik/packing.hpp"
#include "fucik/parallel.hpp"
#include "fucik/spectrum.hpp"
#include "svg.hpp"

namespace {

using namespace fucik;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::string domain_path;
  double tol = 0.0;  // 0 = library default
  unsigned seed = 12345;
  int threads = 0;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_domain) {
  if (with_domain)
    cmd->add_option("--domain", o.domain_path, "domain JSON file");
  cmd->add_option("--tol", o.tol, "solver tolerance (default 1e-4 * diameter)");
  cmd->add_option("--seed", o.seed, "multistart seed");
  cmd->add_option("--threads", o.threads, "cap worker threads (0 = auto)");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write output file: " + path);
  out << text;
}

Domain load_domain(const CommonOpts& o) {
  if (o.domain_path.empty())
    throw ValidationError("--domain is required for this command");
  return Domain(load_domain_file(o.domain_path));
}

SolverOptions solver_options(const CommonOpts& o) {
  SolverOptions so;
  so.seed = o.seed;
  return so;
}

// "2", "1,3,5" or "1..4"
std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> ks;
  const auto range_pos = text.find("..");
  try {
    if (range_pos != std::string::npos) {
      const int lo = std::stoi(text.substr(0, range_pos));
      const int hi = std::stoi(text.substr(range_pos + 2));
      for (int k = lo; k <= hi; ++k) ks.push_back(k);
    } else {
      size_t pos = 0;
      while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        ks.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
      }
    }
  } catch (const std::exception&) {
    throw ValidationError("cannot parse k list '" + text + "'");
  }
  if (ks.empty()) throw ValidationError("empty k list");
  for (const int k : ks)
    if (k < 1) throw ValidationError("curve index k must be >= 1");
  return ks;
}

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> ps;
  size_t pos = 0;
  try {
    while (pos < text.size()) {
      size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      ps.push_back(std::stod(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } catch (const std::exception&) {
    throw ValidationError("cannot parse p list '" + text + "'");
  }
  if (ps.empty()) throw ValidationError("empty p list");
  return ps;
}

int cmd_inradius(const CommonOpts& o) {
  Domain dom = load_domain(o);
  const double tol = o.tol > 0 ? o.tol : default_tol(dom);
  const InradiusSolution sol = inradius(dom, tol, solver_options(o));
  emit(inradius_to_json(sol) + "\n", o.out);
  return 0;
}

int cmd_classify(const CommonOpts& o) {
  Domain dom = load_domain(o);
  const SpectrumClassification cls = classify(dom, o.tol, solver_options(o));
  emit(classification_to_json(cls) + "\n", o.out);
  return 0;
}

struct CurveOpts {
  double t_min = 1.0 / 64, t_max = 64.0;
  int samples = 65;
  bool interval = false;
  bool infinity = false;
  std::string k_list = "2";
  double p = 0.0;
  std::string svg_path;
};

int cmd_curve(const CommonOpts& o, const CurveOpts& c) {
  if (c.interval) {
    // 1D curve families for the unit interval.
    std::vector<Curve1DSample> rows;
    std::vector<svg::Polyline> lines;
    const bool use_infinity = c.infinity || c.p <= 0.0;
    for (const int k : parse_k_list(c.k_list)) {
      std::vector<Branch1D> branches =
          (k % 2 == 0) ? std::vector<Branch1D>{Branch1D::even}
                       : std::vector<Branch1D>{Branch1D::odd_plus,
                                               Branch1D::odd_minus};
      for (const Branch1D branch : branches) {
        svg::Polyline line;
        line.label = "k=" + std::to_string(k);
        for (int i = 0; i < c.samples; ++i) {
          const double s = std::exp(std::log(c.t_min) +
                                    (std::log(c.t_max) - std::log(c.t_min)) * i /
                                        (c.samples - 1.0));
          const FucikPair pair =
              use_infinity ? curve_1d_infinity(k, branch, s)
                           : curve_1d_finite({k, branch, c.p}, s);
          rows.push_back({k, branch,
                          use_infinity ? std::numeric_limits<double>::infinity()
                                       : c.p,
                          s, pair});
          line.points.push_back({pair.alpha, pair.beta});
        }
        lines.push_back(std::move(line));
      }
    }
    emit(curve_1d_to_csv(rows), o.out);
    if (!c.svg_path.empty()) {
      const double level = use_infinity ? 2.0 : pi_p(c.p);
      emit(svg::render_plot(lines, level, "alpha", "beta"), c.svg_path);
    }
    return 0;
  }

  Domain dom = load_domain(o);
  const SpectrumCurve curve =
      curve_c2(dom, c.t_min, c.t_max, c.samples, o.tol, solver_options(o));
  emit(o.format == "json" ? curve_to_json(curve) + "\n" : curve_to_csv(curve),
       o.out);
  if (!c.svg_path.empty()) {
    svg::Polyline line;
    for (const CurveSample& s : curve.samples)
      if (s.source != SampleSource::failed)
        line.points.push_back({s.alpha, s.beta});
    const double level = trivial_level(dom, o.tol, solver_options(o));
    emit(svg::render_plot({line}, level, "alpha", "beta"), c.svg_path);
  }
  int failed = 0;
  for (const CurveSample& s : curve.samples)
    if (s.source == SampleSource::failed) ++failed;
  if (failed * 10 > static_cast<int>(curve.samples.size())) return kExitBudget;
  return 0;
}

struct ConvergeOpts {
  int k = 2;
  std::string branch;
  double s = 1.0;
  std::string p_list = "4,8,16,32,64";
};

int cmd_converge(const CommonOpts& o, const ConvergeOpts& c) {
  const Branch1D branch = c.branch.empty()
                              ? (c.k % 2 == 0 ? Branch1D::even : Branch1D::odd_plus)
                              : parse_branch(c.branch);
  const std::vector<double> ps = parse_p_list(c.p_list);
  const ConvergenceReport report = converge_check(c.k, branch, c.s, ps);
  if (o.format == "json") {
    std::string body = "{\"schema\":\"fucik/1\",\"tail_monotone\":";
    body += report.tail_monotone ? "true" : "false";
    body += ",\"extrapolated_limit\":" + std::to_string(report.extrapolated_limit);
    body += "}\n";
    emit(body, o.out);
  } else {
    emit(convergence_to_csv(report), o.out);
  }
  return 0;
}

struct ProfileOpts {
  double ell = 0.5;
  double p = 0.0;  // 0 = limit profile
  bool infinity = false;
  int samples = 512;
};

int cmd_profile(const CommonOpts& o, const ProfileOpts& c) {
  std::vector<double> xs(c.samples + 1), us(c.samples + 1);
  std::optional<EigenfunctionP> finite;
  if (!c.infinity && c.p > 0.0) finite.emplace(c.ell, c.p);
  for (int i = 0; i <= c.samples; ++i) {
    const double x = static_cast<double>(i) / c.samples;
    xs[i] = x;
    us[i] = finite ? (*finite)(x) : eigenfunction_infinity(c.ell, x);
  }
  emit(profile_to_csv(xs, us), o.out);
  return 0;
}

struct ViscosityOpts {
  double ell = 0.5;
  double alpha = 0.0, beta = 0.0;  // 0 = exact pair for ell
  int samples = 1280;
};

int cmd_viscosity(const CommonOpts& o, const ViscosityOpts& c) {
  FucikPair pair = eigenpair_infinity(c.ell);
  if (c.alpha > 0.0) pair.alpha = c.alpha;
  if (c.beta > 0.0) pair.beta = c.beta;
  const GridFunction1D u = GridFunction1D::sample(
      [&](double x) { return eigenfunction_infinity(c.ell, x); }, c.samples);
  const ViscosityReport report = viscosity_residual(u, pair);
  emit(viscosity_to_json(report, pair, c.ell, c.samples) + "\n", o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinity-Fucik spectrum toolkit"};
  app.require_subcommand(1);

  CommonOpts common[6];
  CurveOpts curve_opts;
  ConvergeOpts converge_opts;
  ProfileOpts profile_opts;
  ViscosityOpts viscosity_opts;

  CLI::App* c_inr = app.add_subcommand("inradius", "largest inscribed ball");
  add_common(c_inr, common[0], true);

  CLI::App* c_curve = app.add_subcommand(
      "curve", "first nontrivial spectrum curve (2D domain or --interval)");
  add_common(c_curve, common[1], true);
  c_curve->add_option("--t-min", curve_opts.t_min, "smallest weight");
  c_curve->add_option("--t-max", curve_opts.t_max, "largest weight");
  c_curve->add_option("--samples", curve_opts.samples, "sample count");
  c_curve->add_flag("--interval", curve_opts.interval,
                    "1D unit-interval curve families");
  c_curve->add_flag("--infinity", curve_opts.infinity, "limit curves (1D mode)");
  c_curve->add_option("--k", curve_opts.k_list, "curve indices, e.g. 2 or 1..4");
  c_curve->add_option("--p", curve_opts.p, "finite exponent (1D mode)");
  c_curve->add_option("--svg", curve_opts.svg_path, "also write an SVG plot");

  CLI::App* c_cls = app.add_subcommand("classify", "domain classification");
  add_common(c_cls, common[2], true);

  CLI::App* c_conv =
      app.add_subcommand("converge", "distance of finite-p curves to the limit");
  add_common(c_conv, common[3], false);
  c_conv->add_option("--k", converge_opts.k, "curve index");
  c_conv->add_option("--branch", converge_opts.branch,
                     "even, odd_plus or odd_minus (default by parity)");
  c_conv->add_option("--s", converge_opts.s, "slope parameter");
  c_conv->add_option("--p-list,--p", converge_opts.p_list,
                     "comma-separated exponents");

  CLI::App* c_prof = app.add_subcommand("profile", "1D eigenfunction profile");
  add_common(c_prof, common[4], false);
  c_prof->add_option("--ell", profile_opts.ell, "nodal point in (0,1)")
      ->required();
  c_prof->add_option("--p", profile_opts.p, "finite exponent");
  c_prof->add_flag("--infinity", profile_opts.infinity, "limit profile (default)");
  c_prof->add_option("--samples", profile_opts.samples, "grid resolution");

  CLI::App* c_visc =
      app.add_subcommand("viscosity", "residual check of the limit equation");
  add_common(c_visc, common[5], false);
  c_visc->add_option("--ell", viscosity_opts.ell, "nodal point in (0,1)")
      ->required();
  c_visc->add_option("--alpha", viscosity_opts.alpha, "override alpha");
  c_visc->add_option("--beta", viscosity_opts.beta, "override beta");
  c_visc->add_option("--samples", viscosity_opts.samples, "grid resolution");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_inr->parsed()) {
      set_max_threads(common[0].threads);
      return cmd_inradius(common[0]);
    }
    if (c_curve->parsed()) {
      set_max_threads(common[1].threads);
      return cmd_curve(common[1], curve_opts);
    }
    if (c_cls->parsed()) {
      set_max_threads(common[2].threads);
      return cmd_classify(common[2]);
    }
    if (c_conv->parsed()) {
      set_max_threads(common[3].threads);
      return cmd_converge(common[3], converge_opts);
    }
    if (c_prof->parsed()) {
      set_max_threads(common[4].threads);
      return cmd_profile(common[4], profile_opts);
    }
    if (c_visc->parsed()) {
      set_max_threads(common[5].threads);
      return cmd_viscosity(common[5], viscosity_opts);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
