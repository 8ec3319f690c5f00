#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string binary() {
  const char* bin = std::getenv("FUCIK_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "FUCIK_BIN must point at the CLI binary");
  return bin;
}

RunResult run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "fucik_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

const std::string kSquareJson =
    R"({"shapes":[{"type":"rectangle","min":[0,0],"max":[1,1]}]})";
const std::string kBallJson =
    R"({"shapes":[{"type":"ball","center":[0,0],"radius":1}]})";
const std::string kLinkedEqualJson =
    R"({"linked_balls":{"r1":1,"r2":1,"gap":0.5}})";

}  // namespace

TEST_CASE("inradius command") {
  const fs::path square = write_file("square.json", kSquareJson);
  const RunResult res = run("inradius --domain " + square.string());
  REQUIRE(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report["schema"] == "fucik/1");
  CHECK(report.contains("tool_version"));
  CHECK(std::abs(report["radius"].get<double>() - 0.5) < 1e-3);
  CHECK(report["certified_gap"].get<double>() > 0.0);

  const fs::path ball = write_file("ball.json", kBallJson);
  const RunResult res2 = run("inradius --domain " + ball.string());
  REQUIRE(res2.exit_code == 0);
  CHECK(std::abs(json::parse(res2.output)["radius"].get<double>() - 1.0) < 1e-3);
}

TEST_CASE("exit codes for bad input") {
  const fs::path broken = write_file("broken.json", "{\"shapes\":[{");
  CHECK(run("inradius --domain " + broken.string()).exit_code == 2);

  const fs::path negative = write_file(
      "neg.json", R"({"shapes":[{"type":"ball","center":[0,0],"radius":-2}]})");
  CHECK(run("classify --domain " + negative.string()).exit_code == 2);

  CHECK(run("inradius --domain /nonexistent/x.json").exit_code == 2);
  CHECK(run("curve").exit_code == 2);  // no domain, no --interval
  CHECK(run("viscosity --ell 1.7").exit_code == 2);
}

TEST_CASE("classify command") {
  const fs::path linked = write_file("linked_equal.json", kLinkedEqualJson);
  const RunResult res = run("classify --domain " + linked.string());
  REQUIRE(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report["kind"] == "TypeIIB");
  CHECK(report["schema"] == "fucik/1");
  CHECK(std::abs(report["inradius"].get<double>() -
                 report["twin_radius"].get<double>()) < 1e-3);
}

TEST_CASE("curve command on a 2D domain") {
  const fs::path ball = write_file("ball.json", kBallJson);
  const fs::path csv_path = scratch_dir() / "ball_curve.csv";
  const fs::path svg_path = scratch_dir() / "ball_curve.svg";
  const RunResult res =
      run("curve --domain " + ball.string() + " --t-min 0.25 --t-max 4 " +
          "--samples 9 --out " + csv_path.string() + " --svg " + svg_path.string());
  REQUIRE(res.exit_code == 0);

  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("t,alpha,beta,source,c1x,c1y,r1,c2x,c2y,r2\n", 0) == 0);
  CHECK(count_occurrences(csv, "\n") == 10);  // header + 9 samples
  CHECK(count_occurrences(csv, "optimizer") == 9);
  CHECK(csv.find("\r") == std::string::npos);  // LF endings

  // samples match the closed form for the unit ball: beta = 1 + t
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
    const double t = std::stod(line.substr(0, c1));
    const double beta = std::stod(line.substr(c2 + 1));
    CHECK(std::abs(beta - (1 + t)) < 2e-3 * (1 + t));
  }

  const std::string svg = slurp(svg_path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<polyline class=\"curve\"") == 1);
  CHECK(count_occurrences(svg, "<line class=\"trivial-line\"") == 2);
}

TEST_CASE("curve command in interval mode") {
  const fs::path csv_path = scratch_dir() / "interval.csv";
  const fs::path svg_path = scratch_dir() / "interval.svg";
  const RunResult res =
      run("curve --interval --k 1..4 --infinity --samples 17 --out " +
          csv_path.string() + " --svg " + svg_path.string());
  REQUIRE(res.exit_code == 0);

  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("k,branch,p,s,alpha_root,beta_root\n", 0) == 0);
  // k=1 and k=3 have two branches each, k=2 and k=4 one: 6 * 17 samples
  CHECK(count_occurrences(csv, "\n") == 1 + 6 * 17);
  CHECK(count_occurrences(csv, "inf") > 0);
  // s = 1 rows pass through (2k, 2k)
  CHECK(csv.find("2,even,inf,1,4,4") != std::string::npos);
  CHECK(csv.find("4,even,inf,1,8,8") != std::string::npos);

  const std::string svg = slurp(svg_path);
  CHECK(count_occurrences(svg, "<polyline class=\"curve\"") == 6);
  CHECK(count_occurrences(svg, "<line class=\"trivial-line\"") == 2);
}

TEST_CASE("determinism: identical config gives byte-identical output") {
  const fs::path square = write_file("square.json", kSquareJson);
  const fs::path out1 = scratch_dir() / "c1.csv";
  const fs::path out2 = scratch_dir() / "c2.csv";
  const std::string flags = " --t-min 0.5 --t-max 2 --samples 5 --seed 77 --out ";
  REQUIRE(run("curve --domain " + square.string() + flags + out1.string())
              .exit_code == 0);
  REQUIRE(run("curve --domain " + square.string() + flags + out2.string())
              .exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
  // thread cap must not change the bytes either
  const fs::path out3 = scratch_dir() / "c3.csv";
  REQUIRE(run("curve --domain " + square.string() + flags + out3.string() +
              " --threads 1")
              .exit_code == 0);
  CHECK(slurp(out1) == slurp(out3));
}

TEST_CASE("converge command") {
  const RunResult res = run("converge --k 2 --s 1 --p 4,8,16,32,64");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.rfind("p,alpha_root,beta_root,distance\n", 0) == 0);
  std::istringstream lines(res.output);
  std::string line;
  std::getline(lines, line);
  double prev = 1e300;
  int rows = 0;
  while (std::getline(lines, line)) {
    const double dist = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(dist < prev);
    prev = dist;
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("profile command") {
  const RunResult res = run("profile --ell 0.4 --samples 10");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.rfind("x,u\n", 0) == 0);
  CHECK(count_occurrences(res.output, "\n") == 12);
  {
    // row at x = 0.2 sits on the u(x) = x branch
    std::istringstream lines(res.output);
    std::string line;
    for (int i = 0; i < 4; ++i) std::getline(lines, line);  // header + 3 rows
    const size_t comma = line.find(',');
    CHECK(std::stod(line.substr(0, comma)) == doctest::Approx(0.2));
    CHECK(std::stod(line.substr(comma + 1)) == doctest::Approx(0.2));
  }

  const RunResult fin = run("profile --ell 0.5 --p 2 --samples 8");
  REQUIRE(fin.exit_code == 0);
  CHECK(count_occurrences(fin.output, "\n") == 10);
}

TEST_CASE("viscosity command") {
  const RunResult res = run("viscosity --ell 0.4");
  REQUIRE(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report["schema"] == "fucik/1");
  CHECK(report["alpha"].get<double>() == doctest::Approx(5.0));
  CHECK(report["max_violation"].get<double>() <= 1e-6);
  CHECK(report["violating_points"].empty());

  const RunResult bad = run("viscosity --ell 0.4 --alpha 7.5");
  REQUIRE(bad.exit_code == 0);
  const json rep2 = json::parse(bad.output);
  CHECK(rep2["max_violation"].get<double>() >= 0.05);
  CHECK(rep2["violating_points"][0]["region"] == "positive");
}

#include "fucik/io.hpp"

TEST_CASE("domain JSON parsing (library level)") {
  using namespace fucik;
  SUBCASE("every shape type round-trips") {
    const std::string text = R"({"shapes":[
      {"type":"ball","center":[0,0],"radius":1},
      {"type":"rectangle","min":[2,0],"max":[3,1]},
      {"type":"stadium","a":[0,3],"b":[2,3],"half_width":0.4},
      {"type":"annulus","center":[8,0],"inner":1,"outer":2},
      {"type":"polygon","vertices":[[0,6],[2,6],[1,8]]}
    ]})";
    const DomainSpec spec = parse_domain_json(text);
    REQUIRE(spec.shapes.size() == 5);
    const DomainSpec again = parse_domain_json(domain_to_json(spec));
    CHECK(again.shapes.size() == 5);
    CHECK(std::get<Ball>(again.shapes[0]).radius == 1.0);
    CHECK(std::get<Polygon>(again.shapes[4]).vertices.size() == 3);
  }
  SUBCASE("generator form") {
    const DomainSpec spec =
        parse_domain_json(R"({"linked_balls":{"r1":1,"r2":2,"gap":0.5,"tube_half_width":0.25}})");
    CHECK(spec.shapes.size() == 3);
    CHECK(std::get<Stadium>(spec.shapes[1]).half_width == 0.25);
  }
  SUBCASE("interval form") {
    const DomainSpec spec =
        parse_domain_json(R"({"shapes":[{"type":"interval","a":0,"b":1}]})");
    CHECK(Domain(spec).is_interval());
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(parse_domain_json("not json"), ValidationError);
    CHECK_THROWS_AS(parse_domain_json("[1,2]"), ValidationError);
    CHECK_THROWS_AS(parse_domain_json(R"({"shapes":[{"type":"hexagon"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_domain_json(R"({"shapes":[{"type":"ball","center":[0],"radius":1}]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_domain_json(R"({"shapes":[{"type":"ball","center":[0,0]}]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_domain_json(R"({"linked_balls":{"r1":1,"r2":2,"gap":5}})"),
                    ValidationError);
  }
}

TEST_CASE("CSV writers (library level)") {
  using namespace fucik;
  SpectrumCurve curve;
  CurveSample s;
  s.t = 0.5;
  s.alpha = 4.0;
  s.beta = 2.0;
  curve.samples.push_back(s);
  CurveSample failed;
  failed.t = 1.0;
  failed.source = SampleSource::failed;
  curve.samples.push_back(failed);
  const std::string csv = curve_to_csv(curve);
  CHECK(csv.rfind("t,alpha,beta,source,c1x,c1y,r1,c2x,c2y,r2\n", 0) == 0);
  CHECK(csv.find("0.5,4,2,optimizer,,,,,,\n") != std::string::npos);
  CHECK(csv.find("1,,,failed,,,,,,\n") != std::string::npos);

  CHECK(branch_name(parse_branch("odd_minus")) == std::string("odd_minus"));
  CHECK_THROWS_AS(parse_branch("sideways"), ValidationError);
}
