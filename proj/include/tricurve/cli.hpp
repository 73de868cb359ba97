#pragma once

// Command-line front end: verify, center, list-scenarios, render.
//
// Exit codes: 0 success; 1 a must-pass claim failed or a claim errored;
// 2 only verdict-only claims failed; 64 usage error or unknown name;
// 65 invalid input data; 74 output file could not be written.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tricurve/center_expr.hpp"
#include "tricurve/render.hpp"
#include "tricurve/scenarios.hpp"

namespace tricurve::cli {

enum ExitCode : int {
  kOk = 0,
  kMustPassFailure = 1,
  kVerdictFailure = 2,
  kUsage = 64,
  kDataError = 65,
  kIoError = 74,
};

inline std::size_t default_trials() {
  const char* env = std::getenv("TCL_DEFAULT_TRIALS");
  if (!env || !*env) return 100;
  std::size_t pos = 0;
  const unsigned long v = std::stoul(env, &pos);
  if (pos != std::string(env).size() || v == 0) throw std::invalid_argument("TCL_DEFAULT_TRIALS must be a positive integer");
  return v;
}

inline RefTriangle parse_triangle(const std::string& text) {
  std::vector<Rational> sides;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) sides.push_back(parse_rational(part));
  if (sides.size() != 3) throw Error(ErrorKind::ParseError, "triangle needs three sides a,b,c: '" + text + "'");
  return RefTriangle(sides[0], sides[1], sides[2]);
}

/// Named base-triangle curves, or explicit "conic:q11,q22,q33,q12,q13,q23"
/// and "cubic:<10 coefficients>" forms.
inline Figure curve_figure(const std::string& spec, const RefTriangle& t) {
  auto coefficients = [&](const std::string& list) {
    std::vector<Rational> out;
    std::stringstream ss(list);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_rational(part));
    return out;
  };
  const Conic circumcircle(std::array<Rational, 6>{0, 0, 0, t.c2(), t.b2(), t.a2()});
  Figure f;
  if (spec == "circumcircle") {
    f.curves.push_back({spec, circumcircle.to_poly()});
    f.points.push_back({"O", eval_center(t, CenterId::X3)});
  } else if (spec == "nine-point-circle") {
    f.curves.push_back({spec, transform_conic(homothety_matrix(eval_center(t, CenterId::X2), Rational(-1, 2)), circumcircle).to_poly()});
    f.points.push_back({"E", eval_center(t, CenterId::X5)});
  } else if (spec == "jerabek") {
    f = scn::figure_of(scn::jerabek_points(t), {{spec, scn::fit_conic(scn::jerabek_points(t)).to_poly()}});
  } else if (spec == "thomson") {
    f = scn::figure_of(scn::thomson_points(t), {{spec, scn::fit_cubic(scn::thomson_points(t)).to_poly()}});
  } else if (spec == "darboux") {
    f = scn::figure_of(scn::darboux_points(t), {{spec, scn::fit_cubic(scn::darboux_points(t)).to_poly()}});
  } else if (spec == "lucas") {
    f = scn::figure_of(scn::lucas_points(t), {{spec, scn::fit_cubic(scn::lucas_points(t)).to_poly()}});
  } else if (spec.rfind("conic:", 0) == 0) {
    const auto c = coefficients(spec.substr(6));
    if (c.size() != 6) throw Error(ErrorKind::ParseError, "conic needs 6 coefficients");
    f.curves.push_back({"conic", Conic(std::array<Rational, 6>{c[0], c[1], c[2], c[3], c[4], c[5]}).to_poly()});
  } else if (spec.rfind("cubic:", 0) == 0) {
    const auto c = coefficients(spec.substr(6));
    if (c.size() != 10) throw Error(ErrorKind::ParseError, "cubic needs 10 coefficients");
    std::array<Rational, 10> a;
    std::copy(c.begin(), c.end(), a.begin());
    f.curves.push_back({"cubic", Cubic(a).to_poly()});
  } else {
    throw Error(ErrorKind::UnknownCenter, "unknown curve '" + spec + "'");
  }
  return f;
}

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnknownCenter:
    case ErrorKind::UnknownScenario: return kUsage;
    default: return kDataError;
  }
}

/// 1 beats 2 beats 0: any must-pass failure or claim error, then any
/// verdict-only failure.
inline int exit_code_for(const std::vector<Report>& reports) {
  bool verdict = false;
  for (const auto& r : reports) {
    if (r.must_pass_failed() || r.has_error()) return kMustPassFailure;
    verdict = verdict || r.verdict_failed();
  }
  return verdict ? kVerdictFailure : kOk;
}

inline int cmd_verify(const std::string& target, std::size_t trials, std::uint64_t seed, const std::string& json_path,
                      bool fail_fast, bool acute, std::ostream& out, std::ostream& err) {
  std::vector<const Scenario*> todo;
  if (target == "all") {
    for (const auto& s : scenarios()) todo.push_back(&s);
  } else {
    todo.push_back(&find_scenario(target));
  }
  std::ofstream file;
  std::ostream* json = nullptr;
  if (json_path == "-") {
    json = &out;
  } else if (!json_path.empty()) {
    file.open(json_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << json_path << "\n";
      return kIoError;
    }
    json = &file;
  }
  RunOptions opt{trials, seed, std::nullopt};
  if (acute) opt.constraints = TriangleConstraints{5, 80, true};

  std::vector<Report> reports;
  for (const Scenario* s : todo) {
    const Report& r = reports.emplace_back(run_scenario(*s, opt));
    if (json) *json << to_json(r).dump() << "\n";
    if (json != &out) {
      out << r.scenario << ": " << r.trials << " trials, " << r.skipped << " skipped, " << r.elapsed_ms << " ms\n";
      for (const auto& c : r.claims) {
        out << "  " << to_string(c.status) << "  " << c.spec.id << " [" << to_string(c.spec.expectation) << "] " << c.passed
            << "/" << c.checked;
        if (c.not_applicable) out << " (" << c.not_applicable << " n/a)";
        if (c.errors) out << " (" << c.errors << " errors)";
        out << "\n";
      }
    }
    if (fail_fast && (r.must_pass_failed() || r.has_error())) break;
  }
  if (file.is_open()) {
    file.close();
    if (!file) {
      err << "cannot write " << json_path << "\n";
      return kIoError;
    }
  }
  return exit_code_for(reports);
}

inline int cmd_center(const std::string& triangle, const std::string& center, const std::string& format, std::ostream& out) {
  const CenterExpr e = parse_center(center);
  const RefTriangle t = parse_triangle(triangle);
  const HomPoint p = eval_expr(t, e);
  if (format == "json") {
    nlohmann::ordered_json j = {{"center", center},
                                {"triangle", {t.a().get_str(), t.b().get_str(), t.c().get_str()}},
                                {"barycentric", {p[0].get_str(), p[1].get_str(), p[2].get_str()}}};
    out << j.dump() << "\n";
  } else {
    out << p.str() << "\n";
  }
  return kOk;
}

inline int cmd_list(bool json, std::ostream& out) {
  for (const auto& s : list_scenarios()) {
    if (json) {
      out << nlohmann::ordered_json{{"id", s.id}, {"description", s.description}, {"claims", s.claims}}.dump() << "\n";
    } else {
      out << s.id << "\t" << s.claims << "\t" << s.description << "\n";
    }
  }
  return kOk;
}

inline int cmd_render(const std::string& scenario, const std::string& curve, const std::string& triangle,
                      const std::string& svg, const std::string& csv, const render::RenderConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  if (scenario.empty() == curve.empty()) {
    err << "render needs exactly one of --scenario or --curve\n";
    return kUsage;
  }
  if (svg.empty() == csv.empty()) {
    err << "render needs exactly one of --svg or --csv\n";
    return kUsage;
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  const RefTriangle t = parse_triangle(triangle);
  Figure fig;
  if (!scenario.empty()) {
    const Scenario& s = find_scenario(scenario);
    if (!s.figure) {
      err << scenario << " has no figure\n";
      return kUsage;
    }
    fig = s.figure(t);
  } else {
    fig = curve_figure(curve, t);
  }
  const render::Rendered r = render::render_figure(fig, t, cfg);
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  const std::string path = svg.empty() ? csv : svg;
  std::ofstream f(path, std::ios::binary);
  f << (svg.empty() ? render::to_csv(r) : render::to_svg(r, t, cfg));
  f.close();
  if (!f) {
    err << "cannot write " << path << "\n";
    return kIoError;
  }
  std::size_t loops = 0, chains = 0;
  for (const auto& tr : r.traces) {
    loops += tr.closed;
    chains += tr.chains.size();
  }
  out << "wrote " << path << ": " << r.traces.size() << " curves, " << chains << " chains (" << loops << " closed), "
      << r.markers.size() << " markers\n";
  return kOk;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of triangle conics and cubics", "tricurve"};
  app.require_subcommand(1);

  std::string target;
  std::size_t trials = 0;
  std::uint64_t seed = 42;
  std::string json_path;
  bool fail_fast = false, acute = false;
  auto* verify = app.add_subcommand("verify", "Run scenarios over seeded random triangles");
  verify->add_option("scenario", target, "Scenario id or 'all'")->required();
  verify->add_option("--trials", trials, "Triangles per scenario (default: TCL_DEFAULT_TRIALS or 100)")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "First seed")->capture_default_str();
  verify->add_option("--json", json_path, "Write newline-delimited JSON reports here ('-' for stdout)");
  verify->add_flag("--fail-fast", fail_fast, "Stop after the first scenario with a must-pass failure or error");
  verify->add_flag("--acute", acute, "Draw acute triangles only");

  std::string triangle = "6,9,13", center, format = "plain";
  auto* cen = app.add_subcommand("center", "Evaluate a center or center expression");
  cen->add_option("--triangle", triangle, "Sides a,b,c (integers or p/q)")->required();
  cen->add_option("--center", center, "Catalog tag, alias or expression")->required();
  cen->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  bool list_json = false;
  auto* list = app.add_subcommand("list-scenarios", "List registered scenarios");
  list->add_flag("--json", list_json, "One JSON object per line");

  std::string scenario, curve, svg, csv, rtriangle = "6,9,13";
  render::RenderConfig cfg;
  bool no_labels = false;
  auto* rend = app.add_subcommand("render", "Draw a scenario figure or a curve as SVG or CSV");
  rend->add_option("--scenario", scenario, "Scenario id");
  rend->add_option("--curve", curve, "circumcircle, nine-point-circle, jerabek, thomson, darboux, lucas, conic:..., cubic:...");
  rend->add_option("--triangle", rtriangle, "Sides a,b,c")->capture_default_str();
  rend->add_option("--svg", svg, "SVG output path");
  rend->add_option("--csv", csv, "CSV output path");
  rend->add_option("--width", cfg.width)->capture_default_str();
  rend->add_option("--height", cfg.height)->capture_default_str();
  rend->add_option("--grid", cfg.grid, "Marching-squares resolution")->capture_default_str();
  rend->add_option("--margin", cfg.margin, "Viewport margin fraction")->capture_default_str();
  rend->add_flag("--no-labels", no_labels, "Omit marker labels");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      return cmd_verify(target, trials ? trials : default_trials(), seed, json_path, fail_fast, acute, out, err);
    }
    if (*cen) return cmd_center(triangle, center, format, out);
    if (*list) return cmd_list(list_json, out);
    if (*rend) {
      cfg.labels = !no_labels;
      return cmd_render(scenario, curve, rtriangle, svg, csv, cfg, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tricurve::cli
