#include <cstdio>
#include <filesystem>

#include <gtest/gtest.h>

#include "extquot/cli/commands.hpp"
#include "test_support.hpp"

using namespace extquot;
using namespace extquot::testing;
namespace fs = std::filesystem;

namespace {

std::string setup_path(const std::string& name) { return std::string(EXTQUOT_DATA_DIR) + "/setups/" + name + ".json"; }

fs::path temp_file(const std::string& name, const std::string& content) {
  auto p = fs::temp_directory_path() / ("extquot_cli_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

struct Run {
  int code;
  std::string out, err;
};

template <class F>
Run run(F cmd, const cli::Options& o) {
  std::ostringstream out, err;
  int code = cmd(o, out, err);
  return {code, out.str(), err.str()};
}

cli::Options input(const std::string& path) {
  cli::Options o;
  o.input = path;
  return o;
}

} // namespace

TEST(SetupDocument, ParsesGeneratorsAndCases) {
  auto d = io::parse_setup(read_text(setup_path("g2_klein")));
  EXPECT_EQ(d.rank, 2u);
  EXPECT_EQ(d.generators.size(), 2u);
  EXPECT_FALSE(d.case_spec);
  auto c = io::parse_setup(read_text(setup_path("gl_r3_case")));
  ASSERT_TRUE(c.case_spec);
  EXPECT_EQ(c.case_spec->kind, bernstein::CaseKind::GLn);
  EXPECT_EQ(c.rank, 3u);
}

TEST(SetupDocument, ParseErrorsCarryLineAndColumn) {
  try {
    io::parse_setup("{\n  \"rank\": 2,\n  \"generators\": [[[0, 1], [1 0]]]\n}");
    FAIL() << "expected a parse error";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 20u);
  }
  EXPECT_THROW(io::parse_setup(R"({"rank": 2, "generators": [[[1, 0]]]})"), io::ParseError);
  EXPECT_THROW(io::parse_setup(R"({"rank": 2})"), io::ParseError);
  EXPECT_THROW(io::parse_setup(R"({"schema": "extquot/2", "rank": 1, "generators": []})"), io::ParseError);
  EXPECT_THROW(io::parse_setup(R"({"case": {"kind": "e8"}})"), io::ParseError);
}

TEST(SetupDocument, ReportProvenanceRoundTrips) {
  for (const auto& name : {"g2_klein", "gl_r3_case", "sl2_case", "hyperoctahedral_r3", "trivial_r2"}) {
    auto d = io::parse_setup(read_text(setup_path(name)));
    auto report = io::decompose_report(d, io::build_catalog(d));
    auto again = io::setup_from_json(report.at("setup"));
    EXPECT_EQ(again, d) << name;
    EXPECT_EQ(io::build_setup(again).group.elements(), io::build_setup(d).group.elements());
  }
}

TEST(CmdDecompose, Examples) {
  auto g2 = run(cli::cmd_decompose, input(setup_path("g2_case")));
  ASSERT_EQ(g2.code, cli::kOk) << g2.err;
  auto j = io::Json::parse(g2.out);
  EXPECT_EQ(j["schema"], "extquot/1");
  EXPECT_EQ(j["catalog"]["components"].size(), 6u);
  EXPECT_EQ(j["poincare"]["polynomial"], "6");

  auto triv = run(cli::cmd_decompose, input(setup_path("trivial_r2")));
  EXPECT_EQ(io::Json::parse(triv.out)["catalog"]["components"].size(), 1u);
  auto s4 = run(cli::cmd_decompose, input(setup_path("s4_r4")));
  EXPECT_EQ(io::Json::parse(s4.out)["catalog"]["components"].size(), 5u);
}

TEST(CmdDecompose, MatchesGoldenFile) {
  auto g2 = run(cli::cmd_decompose, input(setup_path("g2_case")));
  EXPECT_EQ(g2.out, read_text(std::string(EXTQUOT_GOLDEN_DIR) + "/g2_decompose.json"));
}

TEST(CmdDecompose, ExitCodes) {
  auto bad = temp_file("bad.json", "{\"rank\": 2,\n \"generators\": [[[0,1],[1,0]]");
  auto r = run(cli::cmd_decompose, input(bad.string()));
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

  auto infinite = temp_file("inf.json", R"({"rank": 2, "generators": [[[1, 1], [0, 1]]], "bound": 100})");
  EXPECT_EQ(run(cli::cmd_decompose, input(infinite.string())).code, cli::kResourceBound);
  auto singular = temp_file("sing.json", R"({"rank": 2, "generators": [[[2, 0], [0, 1]]]})");
  EXPECT_EQ(run(cli::cmd_decompose, input(singular.string())).code, cli::kUsage);
  EXPECT_EQ(run(cli::cmd_decompose, input("/nonexistent/setup.json")).code, cli::kUsage);
}

TEST(CmdPoincare, Examples) {
  EXPECT_NE(run(cli::cmd_poincare, input(setup_path("trivial_r1"))).out.find("poincare: 1 + t\n"), std::string::npos);
  auto inv = run(cli::cmd_poincare, input(setup_path("inversion_r1")));
  EXPECT_NE(inv.out.find("poincare: 3\n"), std::string::npos);
  auto g2 = run(cli::cmd_poincare, input(setup_path("g2_case")));
  EXPECT_EQ(g2.out, "poincare: 6\ncoefficients: 6\neven: 6\nodd: 0\n");
}

TEST(CmdOracle, Examples) {
  auto o = input(setup_path("swap_r2"));
  o.grid = 2;
  auto r = run(cli::cmd_oracle, o);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("census: 5 (catalog 5)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);

  o = input(setup_path("trivial_r2"));
  o.grid = 4;
  EXPECT_NE(run(cli::cmd_oracle, o).out.find("census: 16"), std::string::npos);
  o = input(setup_path("g2_case"));
  o.grid = 2;
  EXPECT_EQ(run(cli::cmd_oracle, o).code, cli::kOk);

  auto wide = temp_file("wide.json", R"({"rank": 2, "generators": [[[2, 1], [1, 1]]], "bound": 100})");
  o = input(wide.string());
  EXPECT_EQ(run(cli::cmd_oracle, o).code, cli::kResourceBound);
  auto unstable = temp_file("unstable.json", R"({"rank": 2, "generators": [[[2, -3], [1, -2]]]})");
  o = input(unstable.string());
  EXPECT_EQ(run(cli::cmd_oracle, o).code, cli::kUsage);
}

TEST(CmdFamily, Sl2AtSqrtQ) {
  cli::Options o;
  o.case_kind = "sl2";
  o.q = 9;
  o.t = "3";
  auto r = run(cli::cmd_family, o);
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = io::Json::parse(r.out);
  auto pts = j["records"][0]["family_points"];
  EXPECT_EQ(pts[0][0], -1.0);
  EXPECT_EQ(pts[1][0], 9.0);
  EXPECT_EQ(j["equation_convention"], "cocharacter_t_squared");
}

TEST(CmdFamily, G2AndGlAndSweep) {
  cli::Options o;
  o.case_kind = "g2";
  o.t = "1";
  EXPECT_EQ(run(cli::cmd_family, o).code, cli::kOk);
  o.case_kind = "gl";
  o.m = 1;
  o.r = 3;
  o.t = "1.5";
  auto r = run(cli::cmd_family, o);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(io::Json::parse(r.out)["all_flags"].get<bool>());
  o.sweep = "1:3:5";
  auto s = io::Json::parse(run(cli::cmd_family, o).out);
  EXPECT_EQ(s["records"].size(), 5u);
  EXPECT_EQ(s["records"][4]["t"][0], 3.0);
}

TEST(CmdFamily, UsageErrors) {
  cli::Options o;
  o.case_kind = "e8";
  EXPECT_EQ(run(cli::cmd_family, o).code, cli::kUsage);
  o.case_kind = "sl2";
  o.t = "0";
  EXPECT_EQ(run(cli::cmd_family, o).code, cli::kUsage);
  o.t = "abc";
  EXPECT_EQ(run(cli::cmd_family, o).code, cli::kUsage);
  o.t = "2";
  o.q = 0.5;
  EXPECT_EQ(run(cli::cmd_family, o).code, cli::kUsage);
  o.q = 9;
  o.sweep = "1:2";
  EXPECT_EQ(run(cli::cmd_family, o).code, cli::kUsage);
}

TEST(CmdFamily, VerificationFailureExitCode) {
  // an absurdly small tolerance makes the inexact equation checks fail
  cli::Options o;
  o.case_kind = "g2";
  o.t = "2.7,0.3";
  o.tolerance = 1e-300;
  EXPECT_EQ(run(cli::cmd_family, o).code, cli::kFamilyCheckFailed);
}

TEST(CmdPlotdata, G2Clouds) {
  cli::Options o;
  o.case_kind = "g2";
  o.t = "3";
  o.samples = 5;
  auto r = run(cli::cmd_plotdata, o);
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "component,t_re,t_im,x_re,x_im,y_re,y_im");
  std::size_t rows = 0, pt3 = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<double> v;
    std::stringstream ss(line.substr(line.find(',') + 1));
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    std::string comp = line.substr(0, line.find(','));
    double x = v[2], y = v[4];
    if (comp == "C_1") EXPECT_NEAR(x - 9 * y, 0.0, 1e-9);
    if (comp == "C_2") EXPECT_NEAR(x * y, 1.0 / 9, 1e-9);
    if (comp == "pt_3") {
      ++pt3;
      EXPECT_EQ(x, 1.0);
      EXPECT_EQ(y, -1.0);
    }
  }
  EXPECT_EQ(pt3, 1u);
  EXPECT_EQ(rows, 5u + 5u + 3u);
}

TEST(CmdPlotdata, Sl2SweepTracks) {
  cli::Options o;
  o.case_kind = "sl2";
  o.sweep = "1:3:3";
  auto r = run(cli::cmd_plotdata, o);
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("pt_+1,3,0,9,0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("pt_-1,3,0,-1,0"), std::string::npos);
}

TEST(CmdPlotdata, GlDiagonalTrack) {
  cli::Options o;
  o.case_kind = "gl";
  o.r = 2;
  o.sweep = "1:2:4";
  o.samples = 2;
  auto r = run(cli::cmd_plotdata, o);
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> v;
    std::stringstream ss(line.substr(line.find(',') + 1));
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    EXPECT_NEAR(v[2], v[0] * v[0] * v[4], 1e-9) << line;
  }
}

TEST(Binary, ByteIdenticalReports) {
  auto once = [](const std::string& args) {
    std::string cmd = std::string(EXTQUOT_CLI) + " " + args;
    std::FILE* p = popen(cmd.c_str(), "r");
    std::string s;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) s.append(buf, n);
    pclose(p);
    return s;
  };
  for (const std::string args : {"decompose --input " + setup_path("g2_case"),
                                 std::string("family --case g2 --t 1.7 --samples 4 --seed 9"),
                                 std::string("family --case gl --r 3 --sweep 1:2:3 --seed 3")}) {
    auto a = once(args), b = once(args);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b) << args;
  }
}

TEST(Tolerance, EnvironmentOverridesDefault) {
  setenv("EXTQUOT_TOLERANCE", "1e-6", 1);
  EXPECT_EQ(default_tolerance(), 1e-6);
  setenv("EXTQUOT_TOLERANCE", "garbage", 1);
  EXPECT_EQ(default_tolerance(), kDefaultTolerance);
  unsetenv("EXTQUOT_TOLERANCE");
  EXPECT_EQ(default_tolerance(), kDefaultTolerance);
}
