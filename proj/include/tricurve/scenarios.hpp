#pragma once

// Registry of executable scenarios (correspondence tables, theorems,
// corollaries and definition checks) and the seeded trial runner.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricurve/center_expr.hpp"
#include "tricurve/centers.hpp"
#include "tricurve/curves.hpp"
#include "tricurve/report.hpp"

namespace tricurve {

namespace scn {

using Named = std::vector<std::pair<std::string, HomPoint>>;

inline HomPoint ctr(const RefTriangle& t, CenterId id) { return eval_center(t, id); }

inline void require_distinct(const Named& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].second == pts[j].second) {
        throw SkipTrial(pts[i].first + " coincides with " + pts[j].first + " at " + pts[i].second.str());
      }
    }
  }
}

inline std::vector<HomPoint> points_of(const Named& pts) {
  std::vector<HomPoint> out;
  for (const auto& [n, p] : pts) out.push_back(p);
  return out;
}

inline Conic fit_conic(const Named& pts) {
  require_distinct(pts);
  const auto v = points_of(pts);
  return conic_through(std::span<const HomPoint>(v));
}

inline Cubic fit_cubic(const Named& pts) {
  require_distinct(pts);
  const auto v = points_of(pts);
  return cubic_through(std::span<const HomPoint>(v));
}

inline bool on_sidelines(const SubTriangle& sub, const HomPoint& p) {
  const HomPoint q = sub.to_local(p);
  return q[0] == 0 || q[1] == 0 || q[2] == 0;
}

inline std::string flag(bool b) { return b ? "1" : "0"; }

/// Oracle equivalence: for each listed point off the sidelines of `sub`,
/// membership in the curve agrees with `pred`.
template <class Curve, class Pred>
Outcome equivalence(const Curve& curve, const SubTriangle& sub, const Named& pts, Pred pred) {
  std::string lhs, rhs, skipped;
  bool ok = true;
  for (const auto& [name, p] : pts) {
    if (on_sidelines(sub, p)) {
      skipped += (skipped.empty() ? "" : ",") + name;
      continue;
    }
    const bool on = curve.contains(p);
    const bool oracle = pred(p);
    ok = ok && on == oracle;
    lhs += (lhs.empty() ? "" : " ") + name + "=" + flag(on);
    rhs += (rhs.empty() ? "" : " ") + name + "=" + flag(oracle);
  }
  return Outcome::check(ok, "on curve: " + lhs, "oracle: " + rhs,
                        skipped.empty() ? std::string() : "on sidelines, not checked: " + skipped);
}

/// Pivot of the Lucas cubic of `sub` (the point (SA:SB:SC) in its own coordinates).
inline HomPoint lucas_pivot(const SubTriangle& sub) {
  const auto& s = sub.lengths();
  return sub.to_base(HomPoint(s.sa, s.sb, s.sc));
}

inline HomPoint side_midpoint(const SubTriangle& sub, std::size_t i) {
  return midpoint(sub.vertex((i + 1) % 3), sub.vertex((i + 2) % 3));
}

// --- Reference curves --------------------------------------------------------

inline Named jerabek_points(const RefTriangle& t) {
  return {{"A", vertex(0)}, {"B", vertex(1)}, {"C", vertex(2)}, {"O", ctr(t, CenterId::X3)}, {"H", ctr(t, CenterId::X4)}};
}

inline Named thomson_points(const RefTriangle& t) {
  const auto ex = derived_triangle(t, TriangleKind::Excentral);
  const auto md = derived_triangle(t, TriangleKind::Medial);
  return {{"A", vertex(0)},       {"B", vertex(1)},       {"C", vertex(2)},
          {"Ma", md.vertex(0)},   {"Mb", md.vertex(1)},   {"Mc", md.vertex(2)},
          {"I1", ex.vertex(0)},   {"I2", ex.vertex(1)},   {"I3", ex.vertex(2)}};
}

inline Named darboux_points(const RefTriangle& t) {
  const auto ex = derived_triangle(t, TriangleKind::Excentral);
  return {{"A", vertex(0)},
          {"B", vertex(1)},
          {"C", vertex(2)},
          {"I", ctr(t, CenterId::X1)},
          {"O", ctr(t, CenterId::X3)},
          {"H", ctr(t, CenterId::X4)},
          {"L", ctr(t, CenterId::X20)},
          {"Be", ctr(t, CenterId::X40)},
          {"I1", ex.vertex(0)}};
}

inline Named lucas_points(const RefTriangle& t) {
  const auto ac = derived_triangle(t, TriangleKind::Anticomplementary);
  return {{"A", vertex(0)},     {"B", vertex(1)},     {"C", vertex(2)},
          {"A'", ac.vertex(0)}, {"B'", ac.vertex(1)}, {"C'", ac.vertex(2)},
          {"M", ctr(t, CenterId::X2)}, {"H", ctr(t, CenterId::X4)}, {"Ge", ctr(t, CenterId::X7)}};
}

/// Thomson cubic of a sub-triangle from points that need no side lengths:
/// vertices, side midpoints, centroid, orthocenter, symmedian point. (With
/// the circumcenter in place of the orthocenter the nine conditions are
/// dependent.)
inline Named thomson_even_points(const SubTriangle& s) {
  return {{"V1", s.vertex(0)},         {"V2", s.vertex(1)},         {"V3", s.vertex(2)},
          {"M1", side_midpoint(s, 0)}, {"M2", side_midpoint(s, 1)}, {"M3", side_midpoint(s, 2)},
          {"X2", eval_center_in(s, CenterId::X2)}, {"X4", eval_center_in(s, CenterId::X4)},
          {"X6", eval_center_in(s, CenterId::X6)}};
}

/// Darboux cubic of a sub-triangle from points that need no side lengths:
/// vertices, their antipodes, circumcenter, orthocenter and X64.
inline Named darboux_even_points(const SubTriangle& s) {
  return {{"V1", s.vertex(0)},        {"V2", s.vertex(1)},        {"V3", s.vertex(2)},
          {"V1*", antipode_in(s, 0)}, {"V2*", antipode_in(s, 1)}, {"V3*", antipode_in(s, 2)},
          {"X3", eval_center_in(s, CenterId::X3)}, {"X4", eval_center_in(s, CenterId::X4)},
          {"X64", eval_center_in(s, CenterId::X64)}};
}

inline Named thm1_points(const RefTriangle& t) {
  const auto ex = derived_triangle(t, TriangleKind::Excentral);
  return {{"I1", ex.vertex(0)}, {"I2", ex.vertex(1)}, {"I3", ex.vertex(2)},
          {"Be", ctr(t, CenterId::X40)}, {"I", ctr(t, CenterId::X1)}};
}

inline Named thm2_points(const RefTriangle& t) {
  const auto orth = derived_triangle(t, TriangleKind::Orthic);
  return {{"A", vertex(0)},       {"B", vertex(1)},       {"C", vertex(2)},
          {"Ha", orth.vertex(0)}, {"Hb", orth.vertex(1)}, {"Hc", orth.vertex(2)},
          {"H", ctr(t, CenterId::X4)}, {"E", ctr(t, CenterId::X5)}, {"M(orthic)", eval_center_in(orth, CenterId::X2)}};
}

inline Named thm3_points(const RefTriangle& t) {
  const auto orth = derived_triangle(t, TriangleKind::Orthic);
  return {{"A", vertex(0)},       {"B", vertex(1)},       {"C", vertex(2)},
          {"Ha", orth.vertex(0)}, {"Hb", orth.vertex(1)}, {"Hc", orth.vertex(2)},
          {"H", ctr(t, CenterId::X4)}, {"E", ctr(t, CenterId::X5)}, {"O", ctr(t, CenterId::X3)}};
}

inline Named thm5_points(const RefTriangle& t) {
  const auto md = derived_triangle(t, TriangleKind::Medial);
  return {{"Ma", md.vertex(0)},        {"Mb", md.vertex(1)},        {"Mc", md.vertex(2)},
          {"Ma*", antipode_in(md, 0)}, {"Mb*", antipode_in(md, 1)}, {"Mc*", antipode_in(md, 2)},
          {"Sp", ctr(t, CenterId::X10)}, {"E", ctr(t, CenterId::X5)}, {"O", ctr(t, CenterId::X3)}};
}

inline Named thm6_points(const RefTriangle& t) {
  const auto md = derived_triangle(t, TriangleKind::Medial);
  return {{"A", vertex(0)},      {"B", vertex(1)},      {"C", vertex(2)},
          {"Ma", md.vertex(0)},  {"Mb", md.vertex(1)},  {"Mc", md.vertex(2)},
          {"M", ctr(t, CenterId::X2)}, {"O", ctr(t, CenterId::X3)}, {"I", ctr(t, CenterId::X1)}};
}

inline Named thm7_points(const RefTriangle& t) {
  const auto eu = derived_triangle(t, TriangleKind::EulerTriangle);
  const auto md = derived_triangle(t, TriangleKind::Medial);
  return {{"Ea", eu.vertex(0)}, {"Eb", eu.vertex(1)}, {"Ec", eu.vertex(2)},
          {"Ma", md.vertex(0)}, {"Mb", md.vertex(1)}, {"Mc", md.vertex(2)},
          {"M_IH", eval_expr(t, alias("M_IH"))}, {"E", ctr(t, CenterId::X5)}, {"H", ctr(t, CenterId::X4)}};
}

inline Named thm8_points(const RefTriangle& t) {
  const auto ma = derived_triangle(t, TriangleKind::MidArc);
  return {{"A1", ma.vertex(0)}, {"A2", ma.vertex(1)}, {"A3", ma.vertex(2)},
          {"O", ctr(t, CenterId::X3)}, {"I", ctr(t, CenterId::X1)}};
}

inline Named with(Named pts, const Named& extra) {
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

inline Figure figure_of(const Named& pts, std::vector<FigureCurve> curves) {
  Figure f;
  f.curves = std::move(curves);
  for (const auto& [n, p] : pts) f.points.push_back({n, p});
  return f;
}

inline Figure points_figure(const Named& pts) { return figure_of(pts, {}); }

// --- Correspondence tables ---------------------------------------------------

using PointFn = std::function<HomPoint(const RefTriangle&)>;

struct Side {
  std::string label;
  PointFn eval;
  Side(const CenterExpr& e) : label(e.str()), eval([e](const RefTriangle& t) { return eval_expr(t, e); }) {}
  Side(std::string l, PointFn f) : label(std::move(l)), eval(std::move(f)) {}
};

struct Row {
  std::string id;
  Expectation expectation;
  Side lhs;
  Side rhs;
  std::string note;
};

inline Scenario correspondence(std::string id, std::string description, std::vector<Row> rows) {
  Scenario s;
  s.id = std::move(id);
  s.description = std::move(description);
  for (const auto& r : rows) s.claims.push_back({r.id, ClaimKind::PointEquality, r.expectation, r.note});
  s.evaluate = [rows](const RefTriangle& t, Evaluation& ev) {
    for (const auto& r : rows) {
      ev.claim(r.id, [&]() -> Outcome {
        return point_equality(r.lhs.eval(t), r.rhs.eval(t), r.lhs.label + " vs " + r.rhs.label);
      });
    }
  };
  s.figure = [rows](const RefTriangle& t) {
    Named pts;
    for (const auto& r : rows) {
      try {
        pts.push_back({r.rhs.label, r.rhs.eval(t)});
      } catch (const Error&) {
      }
    }
    Figure f = points_figure(pts);
    f.curves.push_back({"circumcircle", Conic(std::array<Rational, 6>{0, 0, 0, t.c2(), t.b2(), t.a2()}).to_poly()});
    return f;
  };
  return s;
}

inline Scenario corr_excentral() {
  using E = CenterExpr;
  using K = TriangleKind;
  auto c = [](CenterId id) { return E::catalog(id); };
  auto exc = [](CenterId id) { return E::center_of(K::Excentral, id); };
  return correspondence(
      "corr-excentral", "Base triangle centers against centers of the excentral triangle",
      {
          {"I=H(exc)", Expectation::MustPass, c(CenterId::X1), exc(CenterId::X4), {}},
          {"O=E(exc)", Expectation::MustPass, c(CenterId::X3), exc(CenterId::X5), {}},
          {"Be=O(exc)", Expectation::MustPass, c(CenterId::X40), exc(CenterId::X3), {}},
          {"Mi=Sy(exc)", Expectation::MustPass, c(CenterId::X9), exc(CenterId::X6), {}},
          {"Mi'=M(exc)", Expectation::VerdictOnly, alias("MiP"), exc(CenterId::X2),
           "row: isogonal conjugate of the mittenpunkt (base) against the excentral centroid"},
          {"Sp=Ta(exc)", Expectation::VerdictOnly, c(CenterId::X10), exc(CenterId::X389),
           "row: Spieker point against the excentral Taylor center"},
          {"Sy=Sy(orthic(exc))", Expectation::MustPass, c(CenterId::X6),
           Side("center(Orthic(Excentral),X6)",
                [](const RefTriangle& t) {
                  const auto ex = derived_triangle(t, K::Excentral);
                  return eval_center_in(derive(t, ex, K::Orthic), CenterId::X6);
                }),
           {}},
          {"Mi''=GOT(exc)", Expectation::VerdictOnly, alias("MiPP"), exc(CenterId::X25),
           "row: isogonal conjugate of the mittenpunkt (excentral) against the excentral X25"},
      });
}

inline Scenario corr_medial() {
  using E = CenterExpr;
  using K = TriangleKind;
  auto c = [](CenterId id) { return E::catalog(id); };
  auto med = [](CenterId id) { return E::center_of(K::Medial, id); };
  auto comp = [](E e) { return E::complement_of(std::move(e)); };
  const auto m = Expectation::MustPass;
  return correspondence(
      "corr-medial", "Base triangle centers against centers of the medial triangle (complement map)",
      {
          {"I->Sp", m, med(CenterId::X1), c(CenterId::X10), {}},
          {"M->M", m, med(CenterId::X2), c(CenterId::X2), {}},
          {"O->E", m, med(CenterId::X3), c(CenterId::X5), {}},
          {"H->O", m, med(CenterId::X4), c(CenterId::X3), {}},
          {"L->H", m, med(CenterId::X20), c(CenterId::X4), {}},
          {"Na->I", m, med(CenterId::X8), c(CenterId::X1), {}},
          {"Ge->Mi", m, med(CenterId::X7), c(CenterId::X9), {}},
          {"SyA->Sy", m, comp(alias("SyA")), c(CenterId::X6), {}},
          {"B3->MB", m, comp(c(CenterId::X76)), c(CenterId::X39), {}},
          {"complement(I)=Sp", m, comp(c(CenterId::X1)), c(CenterId::X10), {}},
          {"complement(Na)=I", m, comp(c(CenterId::X8)), c(CenterId::X1), {}},
          {"complement(Ge)=Mi", m, comp(c(CenterId::X7)), c(CenterId::X9), {}},
          {"complement(L)=H", m, comp(c(CenterId::X20)), c(CenterId::X4), {}},
      });
}

inline Scenario corr_euler() {
  using E = CenterExpr;
  using K = TriangleKind;
  auto c = [](CenterId id) { return E::catalog(id); };
  auto eul = [](CenterId id) { return E::center_of(K::EulerTriangle, id); };
  const auto m = Expectation::MustPass;
  return correspondence("corr-euler", "Centers of the Euler triangle (homothety at H, ratio 1/2)",
                        {
                            {"I(eul)=M_IH", m, eul(CenterId::X1), alias("M_IH"), {}},
                            {"M(eul)=M_MH", m, eul(CenterId::X2), alias("M_MH"), {}},
                            {"O(eul)=E", m, eul(CenterId::X3), c(CenterId::X5), {}},
                            {"H(eul)=H", m, eul(CenterId::X4), c(CenterId::X4), {}},
                            {"Na(eul)=F", m, eul(CenterId::X8), c(CenterId::X355), {}},
                            {"L(eul)=O", m, eul(CenterId::X20), c(CenterId::X3), {}},
                        });
}

inline Scenario corr_midarc() {
  using E = CenterExpr;
  using K = TriangleKind;
  auto c = [](CenterId id) { return E::catalog(id); };
  auto ma = [](CenterId id) { return E::center_of(K::MidArc, id); };
  return correspondence("corr-midarc", "Centers of the mid-arc triangle against base centers",
                        {
                            {"O(ma)=O", Expectation::MustPass, ma(CenterId::X3), c(CenterId::X3), {}},
                            {"H(ma)=I", Expectation::MustPass, ma(CenterId::X4), c(CenterId::X1), {}},
                            {"Sy(ma)=M_MiI", Expectation::VerdictOnly, ma(CenterId::X6), alias("M_MiI"), {}},
                            {"L(ma)=Be", Expectation::VerdictOnly, ma(CenterId::X20), c(CenterId::X40), {}},
                            {"K(ma)=S", Expectation::VerdictOnly, ma(CenterId::X54), c(CenterId::X21), {}},
                        });
}

// --- Conics on derived triangles ---------------------------------------------

struct Thm1 {
  SubTriangle ex;
  Named fit;
  Conic conic;
  HomPoint mi, l;
};

inline Thm1 build_thm1(const RefTriangle& t) {
  Named fit = thm1_points(t);
  Conic conic = fit_conic(fit);
  return {derived_triangle(t, TriangleKind::Excentral), std::move(fit), conic, ctr(t, CenterId::X9),
          ctr(t, CenterId::X20)};
}

inline Scenario thm1() {
  Scenario s;
  s.id = "thm1-jerabek-excentral";
  s.description = "Conic through the excenters, Bevan point and incenter (Jerabek hyperbola of the excentral triangle)";
  s.claims = {
      verdict("contains-Mi", ClaimKind::Membership),
      verdict("contains-L", ClaimKind::Membership),
      verdict("center-is-O", ClaimKind::ConicCenter, "conic center compared with the circumcenter X3"),
      must("rectangular", ClaimKind::Rectangularity),
      verdict("isogonal-image-of-IO", ClaimKind::Membership,
              "10 points of line X1X3 mapped by the excentral isogonal conjugation"),
      must("jerabek-oracle", ClaimKind::Membership,
           "on the conic iff the excentral isogonal image lies on the excentral Euler line"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Thm1 j = build_thm1(t);
    ev.claim("contains-Mi", [&] { return conic_membership(j.mi, j.conic, "Mi"); });
    ev.claim("contains-L", [&] { return conic_membership(j.l, j.conic, "L"); });
    ev.claim("center-is-O", [&] {
      return point_equality(conic_center(j.conic), ctr(t, CenterId::X3), "conic " + j.conic.str());
    });
    ev.claim("rectangular", [&] {
      const auto r = restriction_at_infinity(j.conic);
      return Outcome::check(is_rectangular(j.conic, t), "alpha,beta,gamma=" + r.alpha.get_str() + "," + r.beta.get_str() + "," + r.gamma.get_str(),
                            "rectangular", j.conic.str());
    });
    ev.claim("isogonal-image-of-IO", [&]() -> Outcome {
      const HomPoint i = ctr(t, CenterId::X1), o = ctr(t, CenterId::X3);
      std::size_t used = 0;
      for (int k = 2; used < 10 && k < 40; ++k) {
        const HomPoint p = affine_combine({{i, Rational(1 - k)}, {o, Rational(k)}});
        if (on_sidelines(j.ex, p)) continue;
        const HomPoint q = isogonal_in(j.ex, p);
        ++used;
        if (!j.conic.contains(q)) {
          return Outcome::check(false, j.conic.evaluate(q).get_str(), "0",
                                "image " + q.str() + " of " + p.str() + " on conic " + j.conic.str());
        }
      }
      return Outcome::check(used == 10, std::to_string(used), "10", "points mapped");
    });
    ev.claim("jerabek-oracle", [&] {
      const HomPoint h = eval_center_in(j.ex, CenterId::X4), o = eval_center_in(j.ex, CenterId::X3);
      return equivalence(j.conic, j.ex, Named{{"Be", ctr(t, CenterId::X40)}, {"I", ctr(t, CenterId::X1)}, {"Mi", j.mi}, {"L", j.l}},
                         [&](const HomPoint& p) { return collinear(isogonal_in(j.ex, p), h, o); });
    });
  };
  s.figure = [](const RefTriangle& t) {
    const Thm1 j = build_thm1(t);
    return figure_of(with(j.fit, {{"Mi", j.mi}, {"L", j.l}}), {{"conic", j.conic.to_poly()}});
  };
  return s;
}

struct Thm8 {
  SubTriangle ma;
  Named fit;
  Conic conic;
};

inline Thm8 build_thm8(const RefTriangle& t) {
  Named fit = thm8_points(t);
  Conic conic = fit_conic(fit);
  return {derived_triangle(t, TriangleKind::MidArc), std::move(fit), conic};
}

inline Scenario thm8() {
  Scenario s;
  s.id = "thm8-jerabek-midarc";
  s.description = "Conic through the mid-arc vertices, circumcenter and incenter (Jerabek hyperbola of the mid-arc triangle)";
  s.claims = {
      verdict("contains-M_MiI", ClaimKind::Membership),
      verdict("contains-S", ClaimKind::Membership),
      verdict("contains-Be'", ClaimKind::Membership, "Be' is the isogonal conjugate of X40, i.e. X84"),
      must("rectangular", ClaimKind::Rectangularity),
      must("jerabek-oracle", ClaimKind::Membership,
           "on the conic iff the mid-arc isogonal image lies on line X3X1 (the mid-arc Euler line)"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Thm8 j = build_thm8(t);
    const HomPoint mmi = eval_expr(t, alias("M_MiI")), sch = ctr(t, CenterId::X21), bep = ctr(t, CenterId::X84);
    ev.claim("contains-M_MiI", [&] { return conic_membership(mmi, j.conic, "M_MiI"); });
    ev.claim("contains-S", [&] { return conic_membership(sch, j.conic, "S"); });
    ev.claim("contains-Be'", [&] { return conic_membership(bep, j.conic, "Be'"); });
    ev.claim("rectangular", [&] {
      return Outcome::check(is_rectangular(j.conic, t), "is_rectangular", "rectangular", j.conic.str());
    });
    ev.claim("jerabek-oracle", [&] {
      const HomPoint o = ctr(t, CenterId::X3), i = ctr(t, CenterId::X1);
      return equivalence(j.conic, j.ma, Named{{"O", o}, {"I", i}, {"M_MiI", mmi}, {"S", sch}, {"Be'", bep}},
                         [&](const HomPoint& p) { return collinear(isogonal_in(j.ma, p), o, i); });
    });
  };
  s.figure = [](const RefTriangle& t) {
    const Thm8 j = build_thm8(t);
    return figure_of(with(j.fit, {{"M_MiI", eval_expr(t, alias("M_MiI"))}, {"S", ctr(t, CenterId::X21)}, {"Be'", ctr(t, CenterId::X84)}}),
                     {{"conic", j.conic.to_poly()}});
  };
  return s;
}

// --- Cubics ------------------------------------------------------------------

inline Scenario thm2() {
  Scenario s;
  s.id = "thm2-thomson-excentral";
  s.description = "Cubic through the vertices, feet of the altitudes, H, E and the orthic centroid";
  s.claims = {
      verdict("contains-orthic-midpoint-1", ClaimKind::Membership),
      verdict("contains-orthic-midpoint-2", ClaimKind::Membership),
      verdict("contains-orthic-midpoint-3", ClaimKind::Membership),
      verdict("contains-Sy", ClaimKind::Membership),
      verdict("contains-Sy(orthic)", ClaimKind::Membership),
      verdict("contains-GOT", ClaimKind::Membership),
      must("equals-thomson-of-orthic", ClaimKind::CurveEquality, "acute triangles only"),
      must("thomson-orthic-pivotal", ClaimKind::Membership,
           "isogonal conjugate in the orthic triangle collinear with the orthic centroid; acute triangles only"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Named fit = thm2_points(t);
    const Cubic k = fit_cubic(fit);
    const auto orth = derived_triangle(t, TriangleKind::Orthic);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string id = "contains-orthic-midpoint-" + std::to_string(i + 1);
      ev.claim(id, [&] { return cubic_membership(side_midpoint(orth, i), k, "orthic midpoint"); });
    }
    ev.claim("contains-Sy", [&] { return cubic_membership(ctr(t, CenterId::X6), k, "Sy"); });
    ev.claim("contains-Sy(orthic)", [&] { return cubic_membership(eval_center_in(orth, CenterId::X6), k, "Sy(orthic)"); });
    ev.claim("contains-GOT", [&] { return cubic_membership(ctr(t, CenterId::X25), k, "GOT"); });
    ev.claim("equals-thomson-of-orthic", [&] {
      if (!t.is_acute()) return Outcome::not_applicable("obtuse triangle");
      return curve_equality(k, fit_cubic(thomson_even_points(orth)));
    });
    ev.claim("thomson-orthic-pivotal", [&] {
      if (!t.is_acute()) return Outcome::not_applicable("obtuse triangle");
      const HomPoint pivot = eval_center_in(orth, CenterId::X2);
      return equivalence(k, orth, fit, [&](const HomPoint& p) {
        return pivotal_membership(t, pivot, Conjugation::Isogonal, orth, p);
      });
    });
  };
  s.figure = [](const RefTriangle& t) {
    const Named fit = thm2_points(t);
    return figure_of(with(fit, {{"Sy", ctr(t, CenterId::X6)}, {"GOT", ctr(t, CenterId::X25)}}), {{"cubic", fit_cubic(fit).to_poly()}});
  };
  return s;
}

inline Cubic thm3_cubic(const RefTriangle& t) { return fit_cubic(thm3_points(t)); }

inline Scenario thm3() {
  Scenario s;
  s.id = "thm3-darboux-excentral";
  s.description = "Cubic through the vertices, feet of the altitudes, H, E and O";
  s.claims = {
      must("equals-darboux-of-orthic", ClaimKind::CurveEquality, "acute triangles only"),
      must("darboux-orthic-pivotal", ClaimKind::Membership,
           "isogonal conjugate in the orthic triangle collinear with the orthic de Longchamps point; acute triangles only"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Named fit = thm3_points(t);
    const Cubic k = fit_cubic(fit);
    const auto orth = derived_triangle(t, TriangleKind::Orthic);
    ev.claim("equals-darboux-of-orthic", [&] {
      if (!t.is_acute()) return Outcome::not_applicable("obtuse triangle");
      return curve_equality(k, fit_cubic(darboux_even_points(orth)));
    });
    ev.claim("darboux-orthic-pivotal", [&] {
      if (!t.is_acute()) return Outcome::not_applicable("obtuse triangle");
      const HomPoint pivot = eval_center_in(orth, CenterId::X20);
      return equivalence(k, orth, fit, [&](const HomPoint& p) {
        return pivotal_membership(t, pivot, Conjugation::Isogonal, orth, p);
      });
    });
  };
  s.figure = [](const RefTriangle& t) {
    const Named fit = thm3_points(t);
    return figure_of(fit, {{"cubic", fit_cubic(fit).to_poly()}});
  };
  return s;
}

inline Scenario thm4() {
  Scenario s;
  s.id = "thm4-yff-medial";
  s.description = "Conic with vertices M and L and focus H; the Yff hyperbola with vertices M and H and focus O";
  s.claims = {
      must("e2=4", ClaimKind::EccentricityValue),
      verdict("directrix-through-O", ClaimKind::DirectrixIncidence),
      verdict("yff-e2=4", ClaimKind::EccentricityValue),
      verdict("yff-directrix-through-E", ClaimKind::DirectrixIncidence),
      must("homothety-to-yff", ClaimKind::CurveEquality,
           "the homothety at M with ratio -1/2 maps this conic onto the base Yff conic"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const HomPoint m = ctr(t, CenterId::X2), h = ctr(t, CenterId::X4), o = ctr(t, CenterId::X3);
    const HomPoint l = ctr(t, CenterId::X20), e = ctr(t, CenterId::X5);
    scn::require_distinct({{"M", m}, {"H", h}, {"O", o}, {"L", l}});
    const AxisConic c = axis_conic(t, m, l, h);
    const AxisConic yff = axis_conic(t, m, h, o);
    ev.claim("e2=4", [&] { return Outcome::check(c.e2 == 4, c.e2.get_str(), "4"); });
    ev.claim("directrix-through-O", [&] {
      return Outcome::check(incident(o, c.directrix), c.directrix.str(), o.str(), "directrix against O");
    });
    ev.claim("yff-e2=4", [&] { return Outcome::check(yff.e2 == 4, yff.e2.get_str(), "4"); });
    ev.claim("yff-directrix-through-E", [&] {
      return Outcome::check(incident(e, yff.directrix), yff.directrix.str(), e.str(), "directrix against E");
    });
    ev.claim("homothety-to-yff", [&] {
      return curve_equality(transform_conic(homothety_matrix(m, Rational(-1, 2)), c.conic), yff.conic);
    });
  };
  s.figure = [](const RefTriangle& t) {
    const HomPoint m = ctr(t, CenterId::X2), h = ctr(t, CenterId::X4), l = ctr(t, CenterId::X20);
    const AxisConic c = axis_conic(t, m, l, h);
    return figure_of({{"M", m}, {"L", l}, {"H", h}, {"O", ctr(t, CenterId::X3)}}, {{"conic", c.conic.to_poly()}});
  };
  return s;
}

inline Cubic thm5_cubic(const RefTriangle& t) { return fit_cubic(thm5_points(t)); }

inline Scenario thm5() {
  Scenario s;
  s.id = "thm5-darboux-medial";
  s.description = "Cubic through the side midpoints, their nine-point antipodes, Sp, E and O (Darboux cubic of the medial triangle)";
  s.claims = {
      verdict("contains-H", ClaimKind::Membership),
      verdict("contains-H_A", ClaimKind::Membership),
      must("homothety-of-darboux", ClaimKind::CurveEquality, "image of the base Darboux cubic under the homothety at M, ratio -1/2"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Cubic k = thm5_cubic(t);
    ev.claim("contains-H", [&] { return cubic_membership(ctr(t, CenterId::X4), k, "H"); });
    ev.claim("contains-H_A", [&] { return cubic_membership(eval_expr(t, alias("HA")), k, "H_A"); });
    ev.claim("homothety-of-darboux", [&] {
      const Cubic base = fit_cubic(darboux_points(t));
      return curve_equality(k, transform_cubic(homothety_matrix(ctr(t, CenterId::X2), Rational(-1, 2)), base));
    });
  };
  s.figure = [](const RefTriangle& t) {
    const Named fit = thm5_points(t);
    return figure_of(with(fit, {{"H", ctr(t, CenterId::X4)}}), {{"cubic", fit_cubic(fit).to_poly()}});
  };
  return s;
}

inline Scenario thm6() {
  Scenario s;
  s.id = "thm6-lucas-medial";
  s.description = "Cubic through the vertices, side midpoints, M, O and I (Lucas cubic of the medial triangle)";
  s.claims = {
      verdict("contains-Sy", ClaimKind::Membership),
      verdict("contains-Mi", ClaimKind::Membership),
      verdict("contains-H", ClaimKind::Membership),
      must("homothety-of-lucas", ClaimKind::CurveEquality, "image of the base Lucas cubic under the homothety at M, ratio -1/2"),
      must("lucas-medial-pivotal", ClaimKind::Membership,
           "isotomic conjugate in the medial triangle collinear with the medial Lucas pivot"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Named fit = thm6_points(t);
    const Cubic k = fit_cubic(fit);
    const Named extra{{"Sy", ctr(t, CenterId::X6)}, {"Mi", ctr(t, CenterId::X9)}, {"H", ctr(t, CenterId::X4)}};
    ev.claim("contains-Sy", [&] { return cubic_membership(extra[0].second, k, "Sy"); });
    ev.claim("contains-Mi", [&] { return cubic_membership(extra[1].second, k, "Mi"); });
    ev.claim("contains-H", [&] { return cubic_membership(extra[2].second, k, "H"); });
    ev.claim("homothety-of-lucas", [&] {
      const Cubic base = fit_cubic(lucas_points(t));
      return curve_equality(k, transform_cubic(homothety_matrix(ctr(t, CenterId::X2), Rational(-1, 2)), base));
    });
    ev.claim("lucas-medial-pivotal", [&] {
      const auto md = derived_triangle(t, TriangleKind::Medial);
      const HomPoint pivot = lucas_pivot(md);
      return equivalence(k, md, with(fit, extra), [&](const HomPoint& p) {
        return pivotal_membership(t, pivot, Conjugation::Isotomic, md, p);
      });
    });
  };
  s.figure = [](const RefTriangle& t) {
    const Named fit = thm6_points(t);
    return figure_of(with(fit, {{"Sy", ctr(t, CenterId::X6)}, {"Mi", ctr(t, CenterId::X9)}, {"H", ctr(t, CenterId::X4)}}),
                     {{"cubic", fit_cubic(fit).to_poly()}});
  };
  return s;
}

inline Scenario thm7() {
  Scenario s;
  s.id = "thm7-darboux-euler";
  s.description = "Cubic through the Euler triangle vertices, side midpoints, M_IH, E and H (Darboux cubic of the Euler triangle)";
  s.claims = {
      verdict("contains-O", ClaimKind::Membership),
      must("homothety-of-darboux", ClaimKind::CurveEquality, "image of the base Darboux cubic under the homothety at H, ratio 1/2"),
      must("antipodes-are-midpoints", ClaimKind::PointEquality,
           "reflections of the Euler triangle vertices through E are the side midpoints"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Cubic k = fit_cubic(thm7_points(t));
    ev.claim("contains-O", [&] { return cubic_membership(ctr(t, CenterId::X3), k, "O"); });
    ev.claim("homothety-of-darboux", [&] {
      const Cubic base = fit_cubic(darboux_points(t));
      return curve_equality(k, transform_cubic(homothety_matrix(ctr(t, CenterId::X4), Rational(1, 2)), base));
    });
    ev.claim("antipodes-are-midpoints", [&] {
      const auto eu = derived_triangle(t, TriangleKind::EulerTriangle);
      const auto md = derived_triangle(t, TriangleKind::Medial);
      const HomPoint e = ctr(t, CenterId::X5);
      std::string lhs, rhs;
      bool ok = true;
      for (std::size_t i = 0; i < 3; ++i) {
        const HomPoint r = reflect(eu.vertex(i), e);
        ok = ok && r == md.vertex(i);
        lhs += (i ? " " : "") + r.str();
        rhs += (i ? " " : "") + md.vertex(i).str();
      }
      return Outcome::check(ok, lhs, rhs);
    });
  };
  s.figure = [](const RefTriangle& t) {
    const Named fit = thm7_points(t);
    return figure_of(with(fit, {{"O", ctr(t, CenterId::X3)}}), {{"cubic", fit_cubic(fit).to_poly()}});
  };
  return s;
}

// --- Pascal corollaries --------------------------------------------------------

struct Hexagon {
  std::string id;
  std::string description;
  std::array<std::string, 6> order;  // names of the hexagon vertices in order
  std::string pairs;                 // segment pairs as used
  std::string original;              // pairs as originally listed, when corrected
};

/// Pascal scenario on named points of a fitted conic.
inline Scenario pascal_scenario(Hexagon hx, std::function<std::pair<Conic, Named>(const RefTriangle&)> build) {
  Scenario s;
  s.id = hx.id;
  s.description = hx.description;
  std::string note = "hexagon (" + hx.order[0];
  for (std::size_t i = 1; i < 6; ++i) note += ", " + hx.order[i];
  note += "), pairs " + hx.pairs;
  if (!hx.original.empty()) note += "; pairs as listed originally: " + hx.original;
  s.claims = {
      verdict("pascal-collinear", ClaimKind::Collinearity, note),
      verdict("hexagon-on-conic", ClaimKind::Membership, "all six hexagon vertices lie on the conic"),
      must("pascal-given-memberships", ClaimKind::Collinearity,
           "collinearity whenever all six vertices lie on the conic; not applicable otherwise"),
  };
  s.evaluate = [hx, build](const RefTriangle& t, Evaluation& ev) {
    const auto [conic, pts] = build(t);
    auto find = [&](const std::string& n) {
      for (const auto& [name, p] : pts) {
        if (name == n) return p;
      }
      throw std::logic_error("hexagon vertex " + n + " not defined");
    };
    std::array<HomPoint, 6> h{find(hx.order[0]), find(hx.order[1]), find(hx.order[2]),
                              find(hx.order[3]), find(hx.order[4]), find(hx.order[5])};
    Named hex;
    for (std::size_t i = 0; i < 6; ++i) hex.push_back({hx.order[i], h[i]});
    require_distinct(hex);
    std::string on;
    bool all_on = true;
    for (std::size_t i = 0; i < 6; ++i) {
      const bool c = conic.contains(h[i]);
      all_on = all_on && c;
      on += (i ? " " : "") + hx.order[i] + "=" + flag(c);
    }
    auto run = [&]() -> Outcome {
      const PascalResult r = pascal_check(hexagon_pairs(h));
      const Integer d = r.meets[0][0] * (r.meets[1][1] * r.meets[2][2] - r.meets[1][2] * r.meets[2][1]) -
                        r.meets[0][1] * (r.meets[1][0] * r.meets[2][2] - r.meets[1][2] * r.meets[2][0]) +
                        r.meets[0][2] * (r.meets[1][0] * r.meets[2][1] - r.meets[1][1] * r.meets[2][0]);
      return Outcome::check(r.collinear, d.get_str(), "0",
                            "meets " + r.meets[0].str() + ", " + r.meets[1].str() + ", " + r.meets[2].str() + "; on conic: " + on);
    };
    ev.claim("pascal-collinear", run);
    ev.claim("hexagon-on-conic", [&] { return Outcome::check(all_on, on, "all=1", conic.str()); });
    ev.claim("pascal-given-memberships", [&]() -> Outcome {
      if (!all_on) return Outcome::not_applicable("not all vertices on the conic: " + on);
      return run();
    });
  };
  s.figure = [build](const RefTriangle& t) {
    const auto [conic, pts] = build(t);
    return figure_of(pts, {{"conic", conic.to_poly()}});
  };
  return s;
}

inline std::pair<Conic, Named> thm1_hexagon_points(const RefTriangle& t) {
  const Thm1 j = build_thm1(t);
  return {j.conic, with(j.fit, {{"Mi", j.mi}, {"L", j.l}})};
}

inline std::pair<Conic, Named> thm8_hexagon_points(const RefTriangle& t) {
  const Thm8 j = build_thm8(t);
  return {j.conic, with(j.fit, {{"Be", ctr(t, CenterId::X40)}, {"S", ctr(t, CenterId::X21)}})};
}

inline Scenario cor1() {
  return pascal_scenario({"cor1", "Pascal line of the hexagon (I2, Be, Mi, I, L, I1) on the excentral Jerabek conic",
                          {"I2", "Be", "Mi", "I", "L", "I1"}, "(I2Be, LI), (BeMi, I1L), (MiI, I2I1)", {}},
                         thm1_hexagon_points);
}

inline Scenario cor2() {
  return pascal_scenario({"cor2", "Pascal line of the hexagon (I2, Mi, L, Be, I1, I) on the excentral Jerabek conic",
                          {"I2", "Mi", "L", "Be", "I1", "I"}, "(I2Mi, BeI1), (BeL, II2), (MiL, II1)",
                          "(I2Mi, BeI1), (BeL, II2), (MiL, II2)"},
                         thm1_hexagon_points);
}

inline Scenario cor3() {
  return pascal_scenario({"cor3", "Pascal line of the hexagon (A2, Be, A3, I, S, O) on the mid-arc Jerabek conic",
                          {"A2", "Be", "A3", "I", "S", "O"}, "(A2Be, SI), (IA3, OA2), (BeA3, OS)",
                          "named points: Bevan point, incenter, Speaker point, circumcenter; S = X21 is used"},
                         thm8_hexagon_points);
}

inline Scenario cor4() {
  return pascal_scenario({"cor4", "Pascal line of the hexagon (Be, S, A3, A2, I, O) on the mid-arc Jerabek conic",
                          {"Be", "S", "A3", "A2", "I", "O"}, "(BeO, A3A2), (BeS, IA2), (A3S, IO)",
                          "(BeO, A3A2), (BeS, IA2), (A3S, IA2)"},
                         thm8_hexagon_points);
}

// --- Cubic pencil ------------------------------------------------------------

inline Scenario cor5() {
  Scenario s;
  s.id = "cor5-euler-line-component";
  s.description = "Pencil of the orthic-Darboux and medial-Darboux cubics contains the Euler line";
  s.claims = {
      verdict("line-component", ClaimKind::Factorization, "restrictions of both cubics to the Euler line are proportional"),
      must("factorization-identity", ClaimKind::Factorization, "P - tQ equals line times residual conic"),
      must("hessian-O", ClaimKind::HessianMembership),
      must("hessian-H", ClaimKind::HessianMembership),
      must("hessian-E", ClaimKind::HessianMembership),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const Cubic p = thm3_cubic(t);
    const Cubic q = thm5_cubic(t);
    const HomPoint o = ctr(t, CenterId::X3), h = ctr(t, CenterId::X4), e = ctr(t, CenterId::X5);
    const HomLine euler = join(o, h);
    std::optional<PencilFactorization> f;
    std::string failure;
    try {
      f = line_component(p, q, euler);
    } catch (const Error& err) {
      failure = err.what();
    }
    ev.claim("line-component", [&] {
      if (!f) return Outcome::check(false, failure, "proportional restrictions", "line " + euler.str());
      return Outcome::check(true, "t=" + f->t.get_str(), "rational t", "residual " + f->residual.str());
    });
    ev.claim("factorization-identity", [&] {
      if (!f) return Outcome::not_applicable("no factorization: " + failure);
      const Cubic prod = Cubic::from_poly(Poly::linear(f->line) * f->residual.to_poly());
      return curve_equality(prod, f->composition, "t=" + f->t.get_str());
    });
    const std::optional<Cubic> hess = f ? hessian(f->composition) : std::nullopt;
    auto hessian_claim = [&](const HomPoint& x, const std::string& name) {
      ev.claim("hessian-" + name, [&, x, name]() -> Outcome {
        if (!f) return Outcome::not_applicable("no factorization: " + failure);
        const bool on_comp = f->composition.contains(x);
        const bool on_hess = !hess || hess->contains(x);
        const bool singular = is_singular_point(f->composition, x);
        return Outcome::check(on_comp && on_hess, "composition=" + flag(on_comp) + " hessian=" + flag(on_hess), "1 1",
                              name + " = " + x.str() + (singular ? " singular point" : " inflection point"));
      });
    };
    hessian_claim(o, "O");
    hessian_claim(h, "H");
    hessian_claim(e, "E");
  };
  s.figure = [](const RefTriangle& t) {
    return figure_of({{"O", ctr(t, CenterId::X3)}, {"H", ctr(t, CenterId::X4)}, {"E", ctr(t, CenterId::X5)}},
                     {{"P", thm3_cubic(t).to_poly()}, {"Q", thm5_cubic(t).to_poly()}});
  };
  return s;
}

// --- Definitions on the base triangle -----------------------------------------

inline Scenario defs_sanity() {
  Scenario s;
  s.id = "defs-sanity";
  s.description = "Jerabek, Thomson, Darboux and Lucas curves of the base triangle contain their listed points";
  s.claims = {
      must("jerabek-contains-Sy", ClaimKind::Membership),
      must("jerabek-contains-isogonal-L", ClaimKind::Membership),
      must("jerabek-oracle", ClaimKind::Membership, "on the conic iff the isogonal image lies on the Euler line"),
      must("thomson-contains-listed", ClaimKind::Membership, "I, M, O, Sy, Mi, Mi'"),
      must("thomson-pivotal", ClaimKind::Membership, "pivot M, isogonal"),
      must("darboux-contains-listed", ClaimKind::Membership, "I2, I3"),
      must("darboux-pivotal", ClaimKind::Membership, "pivot L, isogonal"),
      must("darboux-central-symmetry", ClaimKind::CurveEquality, "invariant under the point reflection through O"),
      must("lucas-contains-listed", ClaimKind::Membership, "Na, L, SyA"),
      must("lucas-pivotal", ClaimKind::Membership, "pivot (SA:SB:SC), isotomic"),
  };
  s.evaluate = [](const RefTriangle& t, Evaluation& ev) {
    const SubTriangle base = SubTriangle::base(t);
    const auto ex = derived_triangle(t, TriangleKind::Excentral);
    const Conic jer = fit_conic(jerabek_points(t));
    const Cubic tho = fit_cubic(thomson_points(t));
    const Cubic dar = fit_cubic(darboux_points(t));
    const Cubic luc = fit_cubic(lucas_points(t));
    const HomPoint sy = ctr(t, CenterId::X6), l = ctr(t, CenterId::X20), m = ctr(t, CenterId::X2);
    const HomPoint o = ctr(t, CenterId::X3), h = ctr(t, CenterId::X4);

    auto all_on = [](const auto& curve, const Named& pts) {
      std::string lhs;
      bool ok = true;
      for (const auto& [n, p] : pts) {
        const bool c = curve.contains(p);
        ok = ok && c;
        lhs += (lhs.empty() ? "" : " ") + n + "=" + flag(c);
      }
      return Outcome::check(ok, lhs, "all=1", curve.str());
    };

    const Named jer_pts{{"Sy", sy}, {"L'", ctr(t, CenterId::X64)}, {"O", o}, {"H", h}};
    ev.claim("jerabek-contains-Sy", [&] { return conic_membership(sy, jer, "Sy"); });
    ev.claim("jerabek-contains-isogonal-L", [&] { return conic_membership(isogonal(t, l), jer, "L'"); });
    ev.claim("jerabek-oracle", [&] {
      return equivalence(jer, base, with(jer_pts, {{"M", m}, {"Na", ctr(t, CenterId::X8)}}),
                         [&](const HomPoint& p) { return collinear(isogonal(t, p), o, h); });
    });

    const Named tho_pts{{"I", ctr(t, CenterId::X1)}, {"M", m}, {"O", o}, {"Sy", sy}, {"Mi", ctr(t, CenterId::X9)},
                        {"Mi'", ctr(t, CenterId::X57)}};
    ev.claim("thomson-contains-listed", [&] { return all_on(tho, tho_pts); });
    ev.claim("thomson-pivotal", [&] {
      return equivalence(tho, base, with(with(thomson_points(t), tho_pts), {{"Na", ctr(t, CenterId::X8)}}),
                         [&](const HomPoint& p) { return pivotal_membership(t, m, Conjugation::Isogonal, std::nullopt, p); });
    });

    const Named dar_pts{{"I2", ex.vertex(1)}, {"I3", ex.vertex(2)}};
    ev.claim("darboux-contains-listed", [&] { return all_on(dar, dar_pts); });
    ev.claim("darboux-pivotal", [&] {
      return equivalence(dar, base, with(with(darboux_points(t), dar_pts), {{"LP", ctr(t, CenterId::X64)}, {"Sy", sy}}),
                         [&](const HomPoint& p) { return pivotal_membership(t, l, Conjugation::Isogonal, std::nullopt, p); });
    });
    ev.claim("darboux-central-symmetry", [&] {
      return curve_equality(transform_cubic(homothety_matrix(o, Rational(-1)), dar), dar);
    });

    const HomPoint pivot = lucas_pivot(base);
    const Named luc_pts{{"Na", ctr(t, CenterId::X8)}, {"L", l}, {"SyA", eval_expr(t, alias("SyA"))}};
    ev.claim("lucas-contains-listed", [&] { return all_on(luc, luc_pts); });
    ev.claim("lucas-pivotal", [&] {
      return equivalence(luc, base, with(with(lucas_points(t), luc_pts), {{"I", ctr(t, CenterId::X1)}}),
                         [&](const HomPoint& p) { return pivotal_membership(t, pivot, Conjugation::Isotomic, std::nullopt, p); });
    });
  };
  s.figure = [](const RefTriangle& t) {
    return figure_of(jerabek_points(t), {{"jerabek", fit_conic(jerabek_points(t)).to_poly()},
                                         {"thomson", fit_cubic(thomson_points(t)).to_poly()},
                                         {"darboux", fit_cubic(darboux_points(t)).to_poly()},
                                         {"lucas", fit_cubic(lucas_points(t)).to_poly()}});
  };
  return s;
}

}  // namespace scn

/// All scenarios in registry order.
inline const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> all = {
      scn::corr_excentral(), scn::thm1(), scn::thm2(), scn::thm3(), scn::corr_medial(), scn::thm4(),
      scn::thm5(),           scn::thm6(), scn::corr_euler(), scn::thm7(), scn::corr_midarc(), scn::thm8(),
      scn::cor1(),           scn::cor2(), scn::cor3(), scn::cor4(), scn::cor5(), scn::defs_sanity(),
  };
  return all;
}

struct ScenarioSummary {
  std::string id;
  std::string description;
  std::size_t claims;
};

inline std::vector<ScenarioSummary> list_scenarios() {
  std::vector<ScenarioSummary> out;
  for (const auto& s : scenarios()) out.push_back({s.id, s.description, s.claims.size()});
  return out;
}

inline const Scenario& find_scenario(std::string_view id) {
  for (const auto& s : scenarios()) {
    if (s.id == id) return s;
  }
  throw Error(ErrorKind::UnknownScenario, "unknown scenario '" + std::string(id) + "'");
}

struct RunOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::optional<TriangleConstraints> constraints;  // replaces the scenario's own
};

/// Runs `trials` triangles drawn from consecutive seeds; degenerate
/// configurations are skipped and counted, moving on to the next seed.
inline Report run_scenario(const Scenario& s, const RunOptions& opt) {
  if (opt.trials == 0) throw std::invalid_argument("trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.scenario = s.id;
  r.description = s.description;
  r.trials = opt.trials;
  r.seed = opt.seed;
  for (const auto& spec : s.claims) r.claims.push_back(ClaimReport{spec, ClaimStatus::Pass, 0, 0, 0, 0, {}});

  const TriangleConstraints k = opt.constraints.value_or(s.constraints);
  const std::size_t max_skips = 10 * opt.trials + 100;
  std::uint64_t next = opt.seed;
  for (std::size_t trial = 0; trial < opt.trials;) {
    const RefTriangle t = random_triangle(next++, k);
    auto certificate = [&](std::string lhs, std::string rhs, std::string detail) {
      return Certificate{trial, {t.a(), t.b(), t.c()}, std::move(lhs), std::move(rhs), std::move(detail)};
    };
    Evaluation ev;
    std::string setup_error;
    try {
      s.evaluate(t, ev);
    } catch (const SkipTrial&) {
      if (++r.skipped > max_skips) throw Error(ErrorKind::ExhaustedRetries, s.id + ": too many degenerate trials");
      continue;
    } catch (const DegeneratePointSetError&) {
      if (++r.skipped > max_skips) throw Error(ErrorKind::ExhaustedRetries, s.id + ": too many degenerate trials");
      continue;
    } catch (const std::exception& e) {
      setup_error = e.what();
    }
    for (auto& c : r.claims) {
      auto it = ev.entries().find(c.spec.id);
      if (!setup_error.empty() || it == ev.entries().end() || !it->second.outcome) {
        const std::string why = !setup_error.empty()           ? setup_error
                                : it == ev.entries().end()     ? "claim not evaluated"
                                                               : it->second.error;
        ++c.errors;
        c.failures.push_back(certificate({}, {}, "error: " + why));
        continue;
      }
      const Outcome& o = *it->second.outcome;
      if (o.result == Outcome::Result::NotApplicable) {
        ++c.not_applicable;
        continue;
      }
      ++c.checked;
      if (o.result == Outcome::Result::Pass) {
        ++c.passed;
      } else {
        c.failures.push_back(certificate(o.lhs, o.rhs, o.detail));
      }
    }
    ++trial;
  }
  for (auto& c : r.claims) {
    c.status = c.errors ? ClaimStatus::Error : c.passed < c.checked ? ClaimStatus::Fail : ClaimStatus::Pass;
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline Report run_scenario(std::string_view id, const RunOptions& opt) { return run_scenario(find_scenario(id), opt); }

}  // namespace tricurve
