#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "tricurve/tricurve.hpp"

using namespace tricurve;

namespace {

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
  j.erase("elapsed_ms");
  return j;
}

Scenario synthetic(std::function<void(const RefTriangle&, Evaluation&)> f) {
  Scenario s;
  s.id = "synthetic";
  s.description = "test scenario";
  s.claims = {must("a", ClaimKind::Membership), verdict("b", ClaimKind::Membership)};
  s.evaluate = std::move(f);
  return s;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndOrdered) {
  const std::vector<std::string> expected = {
      "corr-excentral", "thm1-jerabek-excentral", "thm2-thomson-excentral", "thm3-darboux-excentral",
      "corr-medial",    "thm4-yff-medial",        "thm5-darboux-medial",    "thm6-lucas-medial",
      "corr-euler",     "thm7-darboux-euler",     "corr-midarc",            "thm8-jerabek-midarc",
      "cor1",           "cor2",                   "cor3",                   "cor4",
      "cor5-euler-line-component", "defs-sanity"};
  std::vector<std::string> ids;
  for (const auto& s : list_scenarios()) ids.push_back(s.id);
  EXPECT_EQ(ids, expected);
  for (const auto& s : scenarios()) {
    std::set<std::string> claim_ids;
    for (const auto& c : s.claims) EXPECT_TRUE(claim_ids.insert(c.id).second) << s.id << " " << c.id;
    EXPECT_TRUE(s.figure) << s.id;
  }
  try {
    find_scenario("nosuch");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownScenario);
  }
}

class EveryScenario : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryScenario, MustPassClaimsHoldWithoutErrors) {
  const Report r = run_scenario(GetParam(), RunOptions{12, 7, std::nullopt});
  EXPECT_EQ(r.trials, 12u);
  for (const auto& c : r.claims) {
    EXPECT_EQ(c.errors, 0u) << c.spec.id << ": " << (c.failures.empty() ? "" : c.failures[0].detail);
    EXPECT_EQ(c.checked + c.not_applicable, 12u) << c.spec.id;
    EXPECT_EQ(c.failures.size(), c.checked - c.passed) << c.spec.id;
    if (c.spec.expectation == Expectation::MustPass) {
      EXPECT_EQ(c.status, ClaimStatus::Pass) << c.spec.id << ": " << (c.failures.empty() ? "" : c.failures[0].detail);
    }
  }
  EXPECT_FALSE(r.must_pass_failed());
  EXPECT_FALSE(r.has_error());
}

TEST_P(EveryScenario, FigureOnSampleTriangle) {
  const Scenario& s = find_scenario(GetParam());
  Figure f;
  try {
    f = s.figure(RefTriangle(6, 9, 13));
  } catch (const SkipTrial&) {
    GTEST_SKIP() << "degenerate on (6, 9, 13)";
  }
  EXPECT_FALSE(f.points.empty());
  for (const auto& c : f.curves) EXPECT_FALSE(c.form.is_zero()) << c.label;
}

INSTANTIATE_TEST_SUITE_P(Registry, EveryScenario, ::testing::ValuesIn([] {
                           std::vector<std::string> ids;
                           for (const auto& s : scenarios()) ids.push_back(s.id);
                           return ids;
                         }()),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (auto& ch : n) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return n;
                         });

TEST(Theorems, OrthicOraclesOnAcuteTriangles) {
  const RunOptions acute{15, 3, TriangleConstraints{5, 80, true}};
  const Report r2 = run_scenario("thm2-thomson-excentral", acute);
  const Report r3 = run_scenario("thm3-darboux-excentral", acute);
  for (const auto* id : {"equals-thomson-of-orthic", "thomson-orthic-pivotal"}) {
    EXPECT_EQ(r2.claim(id).checked, 15u);
    EXPECT_EQ(r2.claim(id).passed, 15u);
  }
  for (const auto* id : {"equals-darboux-of-orthic", "darboux-orthic-pivotal"}) {
    EXPECT_EQ(r3.claim(id).checked, 15u);
    EXPECT_EQ(r3.claim(id).passed, 15u);
  }
}

TEST(Theorems, ExcentralConicVerdictsInCartesian) {
  // Independent positions for Mi and L: the fitted conic contains the
  // mittenpunkt but not the de Longchamps point L = 2O - H.
  for (const auto& [a, b, c] : oracle::heronian()) {
    const oracle::CartTriangle ct(a, b, c);
    const RefTriangle t = ct.ref();
    const scn::Thm1 j = scn::build_thm1(t);
    const Poly ch = ct.chart(j.conic.to_poly());
    const oracle::Cart o = ct.circumcenter(), h = ct.orthocenter();
    const oracle::Cart l{2 * o.x - h.x, 2 * o.y - h.y};
    const oracle::Cart mi = ct.to_cart(eval_center(t, CenterId::X9));
    EXPECT_EQ(ch.evaluate({mi.x, mi.y, 1}), Rational(0));
    EXPECT_NE(ch.evaluate({l.x, l.y, 1}), Rational(0));
    EXPECT_EQ(j.conic.contains(j.l), ch.evaluate({l.x, l.y, 1}) == 0);
  }
}

TEST(Theorems, VerdictFailuresCarryCertificates) {
  const Report r = run_scenario("thm1-jerabek-excentral", RunOptions{6, 42, std::nullopt});
  const ClaimReport& c = r.claim("contains-L");
  EXPECT_EQ(c.spec.expectation, Expectation::VerdictOnly);
  ASSERT_EQ(c.status, ClaimStatus::Fail);
  ASSERT_EQ(c.failures.size(), c.checked - c.passed);
  for (const auto& f : c.failures) {
    EXPECT_NE(f.lhs, "0");
    EXPECT_EQ(f.rhs, "0");
    EXPECT_NE(f.detail.find("L = "), std::string::npos);
    EXPECT_NO_THROW(RefTriangle(f.triangle[0], f.triangle[1], f.triangle[2]));
  }
  EXPECT_TRUE(r.verdict_failed());
  EXPECT_FALSE(r.must_pass_failed());
}

TEST(Corollaries, CorrectedPairingsAreRecorded) {
  const Scenario& c2 = find_scenario("cor2");
  const Scenario& c4 = find_scenario("cor4");
  EXPECT_NE(c2.claims[0].note.find("as listed originally"), std::string::npos);
  EXPECT_NE(c4.claims[0].note.find("as listed originally"), std::string::npos);
  EXPECT_EQ(find_scenario("cor1").claims[0].note.find("as listed originally"), std::string::npos);
}

TEST(Corollaries, LineComponentOnTheEulerLine) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RefTriangle t = random_triangle(seed);
    const Cubic p = scn::thm3_cubic(t), q = scn::thm5_cubic(t);
    const HomLine euler = join(eval_center(t, CenterId::X3), eval_center(t, CenterId::X4));
    const PencilFactorization f = line_component(p, q, euler);
    // Recompute P - tQ and check every point of the Euler line sample lies on it.
    const Cubic comp = Cubic::from_poly(p.to_poly() - f.t * q.to_poly());
    EXPECT_EQ(comp, f.composition);
    for (int k = -3; k <= 3; ++k) {
      const HomPoint x = affine_combine({{eval_center(t, CenterId::X3), Rational(1 - k)}, {eval_center(t, CenterId::X4), Rational(k)}});
      EXPECT_TRUE(comp.contains(x));
    }
  }
}

TEST(Runner, DeterministicReports) {
  for (const auto* id : {"thm1-jerabek-excentral", "cor3", "defs-sanity"}) {
    const Report a = run_scenario(id, RunOptions{8, 99, std::nullopt});
    const Report b = run_scenario(id, RunOptions{8, 99, std::nullopt});
    EXPECT_EQ(without_timing(to_json(a)).dump(), without_timing(to_json(b)).dump());
    const Report c = run_scenario(id, RunOptions{8, 100, std::nullopt});
    EXPECT_EQ(to_json(c)["seed"], 100);
  }
}

TEST(Runner, JsonRoundTrip) {
  for (const auto* id : {"thm1-jerabek-excentral", "thm2-thomson-excentral", "cor2"}) {
    const Report r = run_scenario(id, RunOptions{5, 11, std::nullopt});
    const auto j = to_json(r);
    const std::string text = j.dump();
    EXPECT_EQ(nlohmann::ordered_json::parse(text).dump(), text);
    EXPECT_EQ(to_json(report_from_json(nlohmann::ordered_json::parse(text))).dump(), text);
  }
  // Keys and their order.
  const auto j = to_json(run_scenario("cor1", RunOptions{2, 1, std::nullopt}));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "description", "trials", "seed", "skipped", "claims", "elapsed_ms"}));
  EXPECT_TRUE(j["claims"][0]["failures"].is_array());
}

TEST(Runner, SkipsAreCountedAndBounded) {
  const Scenario odd = synthetic([](const RefTriangle& t, Evaluation& ev) {
    if (t.a() < 30) throw SkipTrial("small");
    ev.claim("a", [] { return Outcome::check(true, "", ""); });
    ev.claim("b", [] { return Outcome::check(true, "", ""); });
  });
  const Report r = run_scenario(odd, RunOptions{10, 0, std::nullopt});
  EXPECT_GT(r.skipped, 0u);
  EXPECT_EQ(r.claim("a").checked, 10u);

  const Scenario never = synthetic([](const RefTriangle&, Evaluation&) { throw SkipTrial("always"); });
  try {
    run_scenario(never, RunOptions{3, 0, std::nullopt});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExhaustedRetries);
  }
}

TEST(Runner, ErrorsAreIsolatedPerClaim) {
  const Scenario s = synthetic([](const RefTriangle&, Evaluation& ev) {
    ev.claim("a", []() -> Outcome { throw Error(ErrorKind::OnSideline, "boom"); });
    ev.claim("b", [] { return Outcome::check(false, "1", "0"); });
  });
  const Report r = run_scenario(s, RunOptions{3, 0, std::nullopt});
  EXPECT_EQ(r.claim("a").status, ClaimStatus::Error);
  EXPECT_EQ(r.claim("a").errors, 3u);
  EXPECT_NE(r.claim("a").failures[0].detail.find("boom"), std::string::npos);
  EXPECT_EQ(r.claim("b").status, ClaimStatus::Fail);
  EXPECT_EQ(r.claim("b").failures.size(), 3u);
  EXPECT_TRUE(r.has_error());

  const Scenario broken = synthetic([](const RefTriangle&, Evaluation&) { throw std::runtime_error("setup"); });
  const Report rb = run_scenario(broken, RunOptions{2, 0, std::nullopt});
  for (const auto& c : rb.claims) EXPECT_EQ(c.status, ClaimStatus::Error);

  const Scenario na = synthetic([](const RefTriangle&, Evaluation& ev) {
    ev.claim("a", [] { return Outcome::not_applicable("n/a"); });
    ev.claim("b", [] { return Outcome::check(true, "", ""); });
  });
  const Report rn = run_scenario(na, RunOptions{4, 0, std::nullopt});
  EXPECT_EQ(rn.claim("a").not_applicable, 4u);
  EXPECT_EQ(rn.claim("a").checked, 0u);
  EXPECT_EQ(rn.claim("a").status, ClaimStatus::Pass);
  EXPECT_THROW(run_scenario(na, RunOptions{0, 0, std::nullopt}), std::invalid_argument);
}
