#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tricurve/cli.hpp"

using namespace tricurve;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> ndjson(const std::string& text) {
  std::vector<nlohmann::json> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  }
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("tricurve_test_" + name); }

Report synthetic(std::initializer_list<std::pair<Expectation, ClaimStatus>> rows) {
  Report r;
  int k = 0;
  for (auto [e, s] : rows) r.claims.push_back({{"c" + std::to_string(k++), ClaimKind::Membership, e, ""}, s, 1, 1, 0, 0, {}});
  return r;
}

}  // namespace

TEST(ExitCodes, Table) {
  EXPECT_EQ(invoke({"verify", "nosuch"}).code, 64);
  EXPECT_EQ(invoke({"verify", "thm4-yff-medial", "--trials", "5", "--seed", "1"}).code, 0);
  EXPECT_EQ(invoke({"verify", "thm1-jerabek-excentral", "--trials", "3"}).code, 2);
  EXPECT_EQ(invoke({"verify", "thm4-yff-medial", "--trials", "0"}).code, 64);
  EXPECT_EQ(invoke({"center", "--triangle", "6,9,13"}).code, 64);
  EXPECT_EQ(invoke({"center", "--triangle", "1,2,3", "--center", "X3"}).code, 65);
  EXPECT_EQ(invoke({"center", "--triangle", "6,9", "--center", "X3"}).code, 65);
  EXPECT_EQ(invoke({"center", "--triangle", "6,9,13", "--center", "X99999"}).code, 64);
  EXPECT_EQ(invoke({"center", "--triangle", "6,9,13", "--center", "X3", "--format", "xml"}).code, 64);
  EXPECT_EQ(invoke({}).code, 64);
  EXPECT_EQ(invoke({"frobnicate"}).code, 64);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  const Invocation frac = invoke({"center", "--triangle", "1/2,3/4,1", "--center", "X2"});
  EXPECT_EQ(frac.code, 0);
  EXPECT_EQ(frac.out, "1:1:1\n");
}

TEST(ExitCodes, ReportTiering) {
  using E = Expectation;
  using S = ClaimStatus;
  EXPECT_EQ(cli::exit_code_for(std::vector<Report>{synthetic({{E::MustPass, S::Pass}, {E::VerdictOnly, S::Pass}})}), 0);
  EXPECT_EQ(cli::exit_code_for(std::vector<Report>{synthetic({{E::MustPass, S::Pass}, {E::VerdictOnly, S::Fail}})}), 2);
  EXPECT_EQ(cli::exit_code_for(std::vector<Report>{synthetic({{E::MustPass, S::Fail}, {E::VerdictOnly, S::Fail}})}), 1);
  EXPECT_EQ(cli::exit_code_for(std::vector<Report>{synthetic({{E::VerdictOnly, S::Error}})}), 1);
  EXPECT_EQ(cli::exit_code_for(std::vector<Report>{synthetic({{E::VerdictOnly, S::Fail}}), synthetic({{E::MustPass, S::Fail}})}),
            1);
  EXPECT_EQ(cli::exit_code_for(std::vector<Report>{}), 0);
}

TEST(Center, PlainAndJson) {
  // Incenter of the 3-4-5 triangle is a:b:c.
  EXPECT_EQ(invoke({"center", "--triangle", "3,4,5", "--center", "I"}).out, "3:4:5\n");
  const Invocation r = invoke({"center", "--triangle", "6,9,13", "--center", "O", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["barycentric"], (nlohmann::json{"1926", "2511", "-2197"}));
  EXPECT_EQ(j["triangle"], (nlohmann::json{"6", "9", "13"}));
  // a²SA : b²SB : c²SC.
  EXPECT_EQ(1926, 36 * 107 / 2);
  EXPECT_EQ(invoke({"center", "--triangle", "6,9,13", "--center", "midpoint(X1,X3)"}).code, 0);
}

TEST(ListScenarios, PlainAndJson) {
  const Invocation plain = invoke({"list-scenarios"});
  EXPECT_EQ(plain.code, 0);
  EXPECT_EQ(std::count(plain.out.begin(), plain.out.end(), '\n'), 18);
  const auto rows = ndjson(invoke({"list-scenarios", "--json"}).out);
  ASSERT_EQ(rows.size(), 18u);
  EXPECT_EQ(rows.front()["id"], "corr-excentral");
  EXPECT_EQ(rows.back()["id"], "defs-sanity");
}

TEST(Verify, JsonToStdoutAndFile) {
  const Invocation r = invoke({"verify", "cor1", "--trials", "4", "--seed", "5", "--json", "-"});
  const auto rows = ndjson(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["trials"], 4);
  EXPECT_EQ(rows[0]["seed"], 5);

  const fs::path p = scratch("verify.ndjson");
  const Invocation f = invoke({"verify", "thm4-yff-medial", "--trials", "2", "--json", p.string()});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("thm4-yff-medial: 2 trials"), std::string::npos);
  EXPECT_EQ(ndjson(slurp(p)).size(), 1u);
  fs::remove(p);
  EXPECT_EQ(invoke({"verify", "cor1", "--trials", "1", "--json", "/nonexistent-dir/x.ndjson"}).code, 74);
}

TEST(Verify, AcuteFlag) {
  const auto rows = ndjson(invoke({"verify", "thm2-thomson-excentral", "--trials", "4", "--acute", "--json", "-"}).out);
  ASSERT_EQ(rows.size(), 1u);
  for (const auto& c : rows[0]["claims"]) {
    if (c["id"] == "equals-thomson-of-orthic") {
      EXPECT_EQ(c["checked"], 4);
    }
  }
}

TEST(Verify, DefaultTrialsFromEnvironment) {
  ::setenv("TCL_DEFAULT_TRIALS", "3", 1);
  const auto rows = ndjson(invoke({"verify", "thm4-yff-medial", "--json", "-"}).out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["trials"], 3);
  ::setenv("TCL_DEFAULT_TRIALS", "zero", 1);
  EXPECT_EQ(invoke({"verify", "thm4-yff-medial"}).code, 64);
  ::unsetenv("TCL_DEFAULT_TRIALS");
}

TEST(Render, ScenarioSvgHasLabeledMarkers) {
  const fs::path p = scratch("thm1.svg");
  const Invocation r = invoke({"render", "--scenario", "thm1-jerabek-excentral", "--svg", p.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = slurp(p);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("class=\"marker\" data-label=\"Mi\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"marker\" data-label=\"L\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"curve\""), std::string::npos);
  fs::remove(p);
}

TEST(Render, CircumcircleCsvResidual) {
  // Cartesian oracle for the (3,4,6) triangle: A=(0,0), B=(6,0).
  const double a = 3, b = 4, c = 6;
  const double cx = (b * b + c * c - a * a) / (2 * c), cy = std::sqrt(b * b - cx * cx);
  const double ox = c / 2, oy = (cx * cx + cy * cy - c * cx) / (2 * cy);
  const double radius = std::hypot(ox, oy);
  for (const char* grid : {"16", "512"}) {
    const fs::path p = scratch(std::string("circ") + grid + ".csv");
    const Invocation r = invoke({"render", "--curve", "circumcircle", "--triangle", "3,4,6", "--grid", grid, "--csv", p.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("1 chains (1 closed)"), std::string::npos) << r.out;
    std::istringstream in(slurp(p));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "curve,x,y");
    std::size_t n = 0;
    double worst = 0;
    while (std::getline(in, line)) {
      const auto k1 = line.find(','), k2 = line.find(',', k1 + 1);
      const double x = std::stod(line.substr(k1 + 1, k2 - k1 - 1)), y = std::stod(line.substr(k2 + 1));
      worst = std::max(worst, std::abs(std::hypot(x - ox, y - oy) - radius) / radius);
      ++n;
    }
    EXPECT_GT(n, 16u);
    EXPECT_LE(worst, 1e-6) << "grid " << grid;
    fs::remove(p);
  }
}

TEST(Render, UsageAndDegenerate) {
  const fs::path p = scratch("bad.svg");
  EXPECT_EQ(invoke({"render", "--curve", "circumcircle", "--grid", "8", "--svg", p.string()}).code, 64);
  EXPECT_EQ(invoke({"render", "--curve", "circumcircle"}).code, 64);
  EXPECT_EQ(invoke({"render", "--svg", p.string()}).code, 64);
  EXPECT_EQ(invoke({"render", "--curve", "circumcircle", "--scenario", "cor1", "--svg", p.string()}).code, 64);
  EXPECT_EQ(invoke({"render", "--curve", "ellipse", "--svg", p.string()}).code, 64);
  EXPECT_EQ(invoke({"render", "--curve", "conic:1,2,3", "--svg", p.string()}).code, 65);
  // x² + y² + z² has no real points.
  const Invocation d = invoke({"render", "--curve", "conic:1,1,1,0,0,0", "--svg", p.string()});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.err.find("DegenerateRender"), std::string::npos);
  EXPECT_EQ(invoke({"render", "--curve", "circumcircle", "--svg", "/nonexistent-dir/x.svg"}).code, 74);
  fs::remove(p);
}
