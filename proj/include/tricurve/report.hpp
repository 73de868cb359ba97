#pragma once

// Claims, per-trial outcomes, aggregated reports and their JSON form.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricurve/centers.hpp"
#include "tricurve/curves.hpp"
#include "tricurve/poly.hpp"

namespace tricurve {

enum class ClaimKind {
  PointEquality,
  Membership,
  Collinearity,
  ConicCenter,
  Rectangularity,
  DirectrixIncidence,
  EccentricityValue,
  CurveEquality,
  Factorization,
  HessianMembership,
};

inline std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::PointEquality: return "point-equality";
    case ClaimKind::Membership: return "membership";
    case ClaimKind::Collinearity: return "collinearity";
    case ClaimKind::ConicCenter: return "conic-center";
    case ClaimKind::Rectangularity: return "rectangularity";
    case ClaimKind::DirectrixIncidence: return "directrix-incidence";
    case ClaimKind::EccentricityValue: return "eccentricity-value";
    case ClaimKind::CurveEquality: return "curve-equality";
    case ClaimKind::Factorization: return "factorization";
    case ClaimKind::HessianMembership: return "hessian-membership";
  }
  return "?";
}

/// must-pass claims follow from classical identities; a failure is a bug.
/// verdict-only claims are the novel assertions under test.
enum class Expectation { MustPass, VerdictOnly };

inline std::string_view to_string(Expectation e) { return e == Expectation::MustPass ? "must-pass" : "verdict-only"; }

enum class ClaimStatus { Pass, Fail, Error };

inline std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Error: return "error";
  }
  return "?";
}

struct ClaimSpec {
  std::string id;
  ClaimKind kind;
  Expectation expectation;
  std::string note;
};

/// Result of one claim on one triangle.
struct Outcome {
  enum class Result { Pass, Fail, NotApplicable };
  Result result = Result::Pass;
  std::string lhs, rhs, detail;

  static Outcome check(bool ok, std::string lhs, std::string rhs, std::string detail = {}) {
    return {ok ? Result::Pass : Result::Fail, std::move(lhs), std::move(rhs), std::move(detail)};
  }
  static Outcome not_applicable(std::string why) { return {Result::NotApplicable, {}, {}, std::move(why)}; }
};

/// Thrown while preparing a trial when the configuration is degenerate
/// (coincident designated points); the runner retries with the next seed.
class SkipTrial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Certificate {
  std::size_t trial = 0;
  std::array<Rational, 3> triangle;
  std::string lhs, rhs, detail;
};

struct ClaimReport {
  ClaimSpec spec;
  ClaimStatus status = ClaimStatus::Pass;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t not_applicable = 0;
  std::size_t errors = 0;
  std::vector<Certificate> failures;
};

struct Report {
  std::string scenario;
  std::string description;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t skipped = 0;
  std::vector<ClaimReport> claims;
  std::int64_t elapsed_ms = 0;

  bool must_pass_failed() const {
    for (const auto& c : claims) {
      if (c.spec.expectation == Expectation::MustPass && c.status == ClaimStatus::Fail) return true;
    }
    return false;
  }
  bool has_error() const {
    for (const auto& c : claims) {
      if (c.status == ClaimStatus::Error) return true;
    }
    return false;
  }
  bool verdict_failed() const {
    for (const auto& c : claims) {
      if (c.spec.expectation == Expectation::VerdictOnly && c.status == ClaimStatus::Fail) return true;
    }
    return false;
  }
  const ClaimReport& claim(std::string_view id) const {
    for (const auto& c : claims) {
      if (c.spec.id == id) return c;
    }
    throw std::out_of_range("no claim " + std::string(id));
  }
};

inline nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : c.failures) {
      failures.push_back({{"trial", f.trial},
                          {"triangle", {f.triangle[0].get_str(), f.triangle[1].get_str(), f.triangle[2].get_str()}},
                          {"lhs", f.lhs},
                          {"rhs", f.rhs},
                          {"detail", f.detail}});
    }
    ordered_json j = {{"id", c.spec.id},
                      {"kind", to_string(c.spec.kind)},
                      {"expectation", to_string(c.spec.expectation)},
                      {"status", to_string(c.status)},
                      {"checked", c.checked},
                      {"passed", c.passed},
                      {"not_applicable", c.not_applicable},
                      {"errors", c.errors}};
    if (!c.spec.note.empty()) j["note"] = c.spec.note;
    j["failures"] = std::move(failures);
    claims.push_back(std::move(j));
  }
  return {{"scenario", r.scenario}, {"description", r.description}, {"trials", r.trials}, {"seed", r.seed},
          {"skipped", r.skipped},   {"claims", std::move(claims)},   {"elapsed_ms", r.elapsed_ms}};
}

namespace detail {

template <class Enum, std::size_t N>
Enum enum_from_string(std::string_view text, const std::array<Enum, N>& values) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorKind::ParseError, "unexpected value '" + std::string(text) + "'");
}

}  // namespace detail

/// Inverse of to_json. Claim notes are restored; claim kinds, expectations
/// and statuses must be spelled as to_json writes them.
inline Report report_from_json(const nlohmann::ordered_json& j) {
  constexpr std::array kinds{ClaimKind::PointEquality,      ClaimKind::Membership,       ClaimKind::Collinearity,
                             ClaimKind::ConicCenter,        ClaimKind::Rectangularity,   ClaimKind::DirectrixIncidence,
                             ClaimKind::EccentricityValue,  ClaimKind::CurveEquality,    ClaimKind::Factorization,
                             ClaimKind::HessianMembership};
  constexpr std::array expectations{Expectation::MustPass, Expectation::VerdictOnly};
  constexpr std::array statuses{ClaimStatus::Pass, ClaimStatus::Fail, ClaimStatus::Error};
  Report r;
  r.scenario = j.at("scenario").get<std::string>();
  r.description = j.at("description").get<std::string>();
  r.trials = j.at("trials").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.skipped = j.at("skipped").get<std::size_t>();
  for (const auto& c : j.at("claims")) {
    ClaimReport cr;
    cr.spec.id = c.at("id").get<std::string>();
    cr.spec.kind = detail::enum_from_string(c.at("kind").get<std::string>(), kinds);
    cr.spec.expectation = detail::enum_from_string(c.at("expectation").get<std::string>(), expectations);
    if (c.contains("note")) cr.spec.note = c.at("note").get<std::string>();
    cr.status = detail::enum_from_string(c.at("status").get<std::string>(), statuses);
    cr.checked = c.at("checked").get<std::size_t>();
    cr.passed = c.at("passed").get<std::size_t>();
    cr.not_applicable = c.at("not_applicable").get<std::size_t>();
    cr.errors = c.at("errors").get<std::size_t>();
    for (const auto& f : c.at("failures")) {
      Certificate cert;
      cert.trial = f.at("trial").get<std::size_t>();
      for (std::size_t i = 0; i < 3; ++i) cert.triangle[i] = parse_rational(f.at("triangle").at(i).get<std::string>());
      cert.lhs = f.at("lhs").get<std::string>();
      cert.rhs = f.at("rhs").get<std::string>();
      cert.detail = f.at("detail").get<std::string>();
      cr.failures.push_back(std::move(cert));
    }
    r.claims.push_back(std::move(cr));
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

// ---------------------------------------------------------------------------
// Figures: exact curves and labeled points for the renderer.

struct FigureCurve {
  std::string label;
  Poly form;
};

struct FigurePoint {
  std::string label;
  HomPoint point;
};

struct Figure {
  std::vector<FigureCurve> curves;
  std::vector<FigurePoint> points;
};

// ---------------------------------------------------------------------------
// Scenarios

/// Collects the outcome of every claim for one triangle. Exceptions inside
/// a claim become an error outcome for that claim only.
class Evaluation {
 public:
  struct Entry {
    std::optional<Outcome> outcome;
    std::string error;
  };

  void claim(const std::string& id, const std::function<Outcome()>& f) {
    Entry e;
    try {
      e.outcome = f();
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    entries_[id] = std::move(e);
  }

  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
};

struct Scenario {
  std::string id;
  std::string description;
  std::vector<ClaimSpec> claims;
  TriangleConstraints constraints;
  std::function<void(const RefTriangle&, Evaluation&)> evaluate;
  std::function<Figure(const RefTriangle&)> figure;
};

inline ClaimSpec must(std::string id, ClaimKind kind, std::string note = {}) {
  return {std::move(id), kind, Expectation::MustPass, std::move(note)};
}

inline ClaimSpec verdict(std::string id, ClaimKind kind, std::string note = {}) {
  return {std::move(id), kind, Expectation::VerdictOnly, std::move(note)};
}

// Outcome helpers shared by the registry.

inline Outcome point_equality(const HomPoint& lhs, const HomPoint& rhs, std::string detail = {}) {
  return Outcome::check(lhs == rhs, lhs.str(), rhs.str(), std::move(detail));
}

inline Outcome conic_membership(const HomPoint& p, const Conic& c, const std::string& name) {
  const Integer v = c.evaluate(p);
  return Outcome::check(v == 0, v.get_str(), "0", name + " = " + p.str() + " on conic " + c.str());
}

inline Outcome cubic_membership(const HomPoint& p, const Cubic& k, const std::string& name) {
  const Integer v = k.evaluate(p);
  return Outcome::check(v == 0, v.get_str(), "0", name + " = " + p.str() + " on cubic " + k.str());
}

template <class Curve>
Outcome curve_equality(const Curve& lhs, const Curve& rhs, std::string detail = {}) {
  return Outcome::check(lhs == rhs, lhs.str(), rhs.str(), std::move(detail));
}

}  // namespace tricurve
