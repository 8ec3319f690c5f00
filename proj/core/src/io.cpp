#include "fucik/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fucik/version.hpp"

namespace fucik {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Point2 parse_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError(std::string(what) + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

double parse_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ValidationError(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

}  // namespace

DomainSpec parse_domain_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("domain file: expected an object");

  if (root.contains("linked_balls")) {
    const json& lb = root["linked_balls"];
    const double r1 = parse_number(lb, "r1");
    const double r2 = parse_number(lb, "r2");
    const double gap = parse_number(lb, "gap");
    const double w = lb.contains("tube_half_width")
                         ? parse_number(lb, "tube_half_width")
                         : -1.0;
    return make_linked_balls(r1, r2, gap, w);
  }

  if (!root.contains("shapes") || !root["shapes"].is_array())
    throw ValidationError("domain file: missing 'shapes' array");

  DomainSpec spec;
  for (const json& js : root["shapes"]) {
    if (!js.is_object() || !js.contains("type") || !js["type"].is_string())
      throw ValidationError("shape entry: missing 'type'");
    const std::string type = js["type"].get<std::string>();
    if (type == "ball") {
      spec.shapes.push_back(
          Ball{parse_point(js.at("center"), "ball.center"), parse_number(js, "radius")});
    } else if (type == "rectangle") {
      spec.shapes.push_back(Rectangle{parse_point(js.at("min"), "rectangle.min"),
                                      parse_point(js.at("max"), "rectangle.max")});
    } else if (type == "stadium") {
      spec.shapes.push_back(Stadium{parse_point(js.at("a"), "stadium.a"),
                                    parse_point(js.at("b"), "stadium.b"),
                                    parse_number(js, "half_width")});
    } else if (type == "annulus") {
      spec.shapes.push_back(Annulus{parse_point(js.at("center"), "annulus.center"),
                                    parse_number(js, "inner"),
                                    parse_number(js, "outer")});
    } else if (type == "polygon") {
      if (!js.contains("vertices") || !js["vertices"].is_array())
        throw ValidationError("polygon: missing 'vertices' array");
      Polygon poly;
      for (const json& v : js["vertices"])
        poly.vertices.push_back(parse_point(v, "polygon.vertex"));
      spec.shapes.push_back(std::move(poly));
    } else if (type == "interval") {
      spec.shapes.push_back(Interval{parse_number(js, "a"), parse_number(js, "b")});
    } else {
      throw ValidationError("unknown shape type '" + type + "'");
    }
  }
  [[maybe_unused]] Domain check(spec);  // surface validation errors at parse time
  return spec;
}

DomainSpec load_domain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open domain file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_domain_json(buf.str());
}

std::string domain_to_json(const DomainSpec& spec) {
  ordered_json shapes = ordered_json::array();
  for (const auto& shape : spec.shapes) {
    ordered_json js;
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Ball>) {
            js = {{"type", "ball"},
                  {"center", {s.center.x, s.center.y}},
                  {"radius", s.radius}};
          } else if constexpr (std::is_same_v<T, Rectangle>) {
            js = {{"type", "rectangle"},
                  {"min", {s.min.x, s.min.y}},
                  {"max", {s.max.x, s.max.y}}};
          } else if constexpr (std::is_same_v<T, Stadium>) {
            js = {{"type", "stadium"},
                  {"a", {s.a.x, s.a.y}},
                  {"b", {s.b.x, s.b.y}},
                  {"half_width", s.half_width}};
          } else if constexpr (std::is_same_v<T, Annulus>) {
            js = {{"type", "annulus"},
                  {"center", {s.center.x, s.center.y}},
                  {"inner", s.inner},
                  {"outer", s.outer}};
          } else if constexpr (std::is_same_v<T, Polygon>) {
            ordered_json verts = ordered_json::array();
            for (const Point2& v : s.vertices) verts.push_back({v.x, v.y});
            js = {{"type", "polygon"}, {"vertices", verts}};
          } else if constexpr (std::is_same_v<T, Interval>) {
            js = {{"type", "interval"}, {"a", s.a}, {"b", s.b}};
          }
        },
        shape);
    shapes.push_back(js);
  }
  return ordered_json{{"shapes", shapes}}.dump();
}

std::string curve_to_csv(const SpectrumCurve& curve) {
  std::string out = "t,alpha,beta,source,c1x,c1y,r1,c2x,c2y,r2\n";
  for (const CurveSample& s : curve.samples) {
    out += fmt(s.t);
    if (s.source == SampleSource::failed) {
      out += ",,,failed,,,,,,\n";
      continue;
    }
    out += "," + fmt(s.alpha) + "," + fmt(s.beta);
    out += s.source == SampleSource::oracle ? ",oracle" : ",optimizer";
    if (s.witness) {
      const TwoBallSolution& w = *s.witness;
      out += "," + fmt(w.centers[0].x) + "," + fmt(w.centers[0].y) + "," +
             fmt(w.radii[0]) + "," + fmt(w.centers[1].x) + "," +
             fmt(w.centers[1].y) + "," + fmt(w.radii[1]);
    } else {
      out += ",,,,,,";
    }
    out += "\n";
  }
  return out;
}

const char* branch_name(Branch1D branch) {
  switch (branch) {
    case Branch1D::even:
      return "even";
    case Branch1D::odd_plus:
      return "odd_plus";
    case Branch1D::odd_minus:
      return "odd_minus";
  }
  return "?";
}

Branch1D parse_branch(const std::string& name) {
  if (name == "even") return Branch1D::even;
  if (name == "odd_plus") return Branch1D::odd_plus;
  if (name == "odd_minus") return Branch1D::odd_minus;
  throw ValidationError("unknown branch '" + name +
                        "' (expected even, odd_plus or odd_minus)");
}

std::string curve_1d_to_csv(const std::vector<Curve1DSample>& rows) {
  std::string out = "k,branch,p,s,alpha_root,beta_root\n";
  for (const Curve1DSample& r : rows) {
    out += std::to_string(r.k);
    out += ",";
    out += branch_name(r.branch);
    out += ",";
    out += std::isfinite(r.p) ? fmt(r.p) : "inf";
    out += "," + fmt(r.s) + "," + fmt(r.roots.alpha) + "," + fmt(r.roots.beta) + "\n";
  }
  return out;
}

std::string profile_to_csv(const std::vector<double>& xs,
                           const std::vector<double>& us) {
  std::string out = "x,u\n";
  for (size_t i = 0; i < xs.size() && i < us.size(); ++i)
    out += fmt(xs[i]) + "," + fmt(us[i]) + "\n";
  return out;
}

std::string convergence_to_csv(const ConvergenceReport& report) {
  std::string out = "p,alpha_root,beta_root,distance\n";
  for (const ConvergenceRow& r : report.rows)
    out += fmt(r.p) + "," + fmt(r.alpha_root) + "," + fmt(r.beta_root) + "," +
           fmt(r.distance) + "\n";
  return out;
}

namespace {
ordered_json report_header() {
  return ordered_json{{"schema", kSchema}, {"tool_version", kToolVersion}};
}
}  // namespace

std::string classification_to_json(const SpectrumClassification& cls) {
  ordered_json j = report_header();
  switch (cls.kind) {
    case DomainKind::TypeI:
      j["kind"] = "TypeI";
      break;
    case DomainKind::TypeIIA:
      j["kind"] = "TypeIIA";
      break;
    case DomainKind::TypeIIB:
      j["kind"] = "TypeIIB";
      break;
  }
  j["inradius"] = cls.inradius;
  j["twin_radius"] = cls.twin_radius;
  j["trivial_level"] = cls.trivial_level;
  j["lambda2"] = cls.lambda2;
  ordered_json pts = ordered_json::array();
  for (const auto& p : cls.intersections) pts.push_back({p[0], p[1]});
  j["intersections"] = pts;
  return j.dump();
}

std::string inradius_to_json(const InradiusSolution& sol) {
  ordered_json j = report_header();
  j["radius"] = sol.radius;
  j["center"] = {sol.center.x, sol.center.y};
  j["iterations"] = sol.iterations;
  j["certified_gap"] = sol.certified_gap;
  return j.dump();
}

std::string viscosity_to_json(const ViscosityReport& report, FucikPair pair,
                              double ell, int n) {
  ordered_json j = report_header();
  j["ell"] = ell;
  j["alpha"] = pair.alpha;
  j["beta"] = pair.beta;
  j["n"] = n;
  j["max_violation"] = report.max_violation;
  ordered_json pts = ordered_json::array();
  for (const ViscosityViolation& v : report.violating_points) {
    ordered_json p;
    p["x"] = v.x;
    p["violation"] = v.violation;
    p["region"] = v.region == Region1D::positive   ? "positive"
                  : v.region == Region1D::negative ? "negative"
                                                   : "zero";
    p["kind"] = v.at_kink ? "kink" : "smooth";
    pts.push_back(p);
  }
  j["violating_points"] = pts;
  return j.dump();
}

std::string curve_to_json(const SpectrumCurve& curve) {
  ordered_json j = report_header();
  ordered_json samples = ordered_json::array();
  for (const CurveSample& s : curve.samples) {
    ordered_json js;
    js["t"] = s.t;
    js["source"] = s.source == SampleSource::failed     ? "failed"
                   : s.source == SampleSource::oracle   ? "oracle"
                                                        : "optimizer";
    if (s.source != SampleSource::failed) {
      js["alpha"] = s.alpha;
      js["beta"] = s.beta;
      if (s.witness) {
        js["centers"] = {{s.witness->centers[0].x, s.witness->centers[0].y},
                         {s.witness->centers[1].x, s.witness->centers[1].y}};
        js["radii"] = {s.witness->radii[0], s.witness->radii[1]};
      }
    }
    samples.push_back(js);
  }
  j["samples"] = samples;
  return j.dump();
}

}  // namespace fucik
