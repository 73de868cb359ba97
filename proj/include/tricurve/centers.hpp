#pragma once

// Triangle centers used by the curve constructions, derived triangles
// (excentral, medial, orthic, ...) and conjugation maps. Every center
// formula is evaluated from a triangle's (squared) side lengths, so the
// same code serves the base triangle and any derived triangle expressed in
// its own local barycentrics.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricurve/errors.hpp"
#include "tricurve/kernel.hpp"
#include "tricurve/rational.hpp"

namespace tricurve {

enum class CenterId {
  X1,
  X2,
  X3,
  X4,
  X5,
  X6,
  X7,
  X8,
  X9,
  X10,
  X20,
  X21,
  X25,
  X39,
  X40,
  X54,
  X57,
  X64,
  X69,
  X76,
  X84,
  X355,
  X389,
  BrocardOmega1,
  BrocardOmega2,
  VertexA,
  VertexB,
  VertexC,
};

inline constexpr std::array kAllCenters{
    CenterId::X1,  CenterId::X2,  CenterId::X3,  CenterId::X4,   CenterId::X5,   CenterId::X6,
    CenterId::X7,  CenterId::X8,  CenterId::X9,  CenterId::X10,  CenterId::X20,  CenterId::X21,
    CenterId::X25, CenterId::X39, CenterId::X40, CenterId::X54,  CenterId::X57,  CenterId::X64,
    CenterId::X69, CenterId::X76, CenterId::X84, CenterId::X355, CenterId::X389, CenterId::BrocardOmega1,
    CenterId::BrocardOmega2, CenterId::VertexA, CenterId::VertexB, CenterId::VertexC,
};

constexpr std::string_view tag(CenterId id) {
  switch (id) {
    case CenterId::X1: return "X1";
    case CenterId::X2: return "X2";
    case CenterId::X3: return "X3";
    case CenterId::X4: return "X4";
    case CenterId::X5: return "X5";
    case CenterId::X6: return "X6";
    case CenterId::X7: return "X7";
    case CenterId::X8: return "X8";
    case CenterId::X9: return "X9";
    case CenterId::X10: return "X10";
    case CenterId::X20: return "X20";
    case CenterId::X21: return "X21";
    case CenterId::X25: return "X25";
    case CenterId::X39: return "X39";
    case CenterId::X40: return "X40";
    case CenterId::X54: return "X54";
    case CenterId::X57: return "X57";
    case CenterId::X64: return "X64";
    case CenterId::X69: return "X69";
    case CenterId::X76: return "X76";
    case CenterId::X84: return "X84";
    case CenterId::X355: return "X355";
    case CenterId::X389: return "X389";
    case CenterId::BrocardOmega1: return "BrocardOmega1";
    case CenterId::BrocardOmega2: return "BrocardOmega2";
    case CenterId::VertexA: return "VertexA";
    case CenterId::VertexB: return "VertexB";
    case CenterId::VertexC: return "VertexC";
  }
  return "?";
}

inline std::optional<CenterId> center_from_tag(std::string_view name) {
  for (auto id : kAllCenters) {
    if (tag(id) == name) return id;
  }
  return std::nullopt;
}

/// EVEN centers depend on a^2, b^2, c^2 only.
constexpr bool is_even(CenterId id) {
  switch (id) {
    case CenterId::X1:
    case CenterId::X7:
    case CenterId::X8:
    case CenterId::X9:
    case CenterId::X10:
    case CenterId::X21:
    case CenterId::X40:
    case CenterId::X57:
    case CenterId::X84:
    case CenterId::X355:
      return false;
    default:
      return true;
  }
}

/// Squared side lengths of a triangle (plus the sides themselves when they
/// are rational) together with the Conway symbols.
struct SideLengths {
  Rational a2, b2, c2;
  Rational sa, sb, sc, s2;
  std::optional<std::array<Rational, 3>> sides;

  static SideLengths from_squares(const Rational& a2, const Rational& b2, const Rational& c2,
                                  std::optional<std::array<Rational, 3>> sides = std::nullopt) {
    SideLengths s{a2, b2, c2, {}, {}, {}, {}, std::move(sides)};
    s.sa = (b2 + c2 - a2) / 2;
    s.sb = (c2 + a2 - b2) / 2;
    s.sc = (a2 + b2 - c2) / 2;
    s.s2 = s.sa * s.sb + s.sb * s.sc + s.sc * s.sa;
    return s;
  }

  static SideLengths of(const RefTriangle& t) {
    return from_squares(t.a2(), t.b2(), t.c2(), std::array<Rational, 3>{t.a(), t.b(), t.c()});
  }

  bool is_right() const { return sa == 0 || sb == 0 || sc == 0; }
  bool is_acute() const { return sa > 0 && sb > 0 && sc > 0; }
};

namespace detail {

inline const std::array<Rational, 3>& require_sides(const SideLengths& s, std::string_view what) {
  if (!s.sides) {
    throw Error(ErrorKind::OddCenterWithoutSides, std::string(what) + " needs exact side lengths");
  }
  return *s.sides;
}

template <class F>
HomPoint cyclic(F&& f, const Rational& a, const Rational& b, const Rational& c) {
  return HomPoint(f(a, b, c), f(b, c, a), f(c, a, b));
}

}  // namespace detail

/// Barycentrics of a center relative to the triangle described by `s`.
inline HomPoint center_formula(const SideLengths& s, CenterId id) {
  const Rational &A = s.a2, &B = s.b2, &C = s.c2;
  const Rational &SA = s.sa, &SB = s.sb, &SC = s.sc, &S2 = s.s2;
  switch (id) {
    case CenterId::X2: return HomPoint(1, 1, 1);
    case CenterId::X3: return HomPoint(A * SA, B * SB, C * SC);
    case CenterId::X4: return HomPoint(SB * SC, SC * SA, SA * SB);
    case CenterId::X5: return HomPoint(S2 + SB * SC, S2 + SC * SA, S2 + SA * SB);
    case CenterId::X6: return HomPoint(A, B, C);
    case CenterId::X20: return HomPoint(SA * SB + SC * SA - SB * SC, SB * SC + SA * SB - SC * SA,
                                        SC * SA + SB * SC - SA * SB);
    case CenterId::X25: return HomPoint(A * SB * SC, B * SC * SA, C * SA * SB);
    case CenterId::X39: return HomPoint(A * (B + C), B * (C + A), C * (A + B));
    case CenterId::X54: {
      const Rational u = S2 + SB * SC, v = S2 + SC * SA, w = S2 + SA * SB;
      return HomPoint(A * v * w, B * w * u, C * u * v);
    }
    case CenterId::X64: {
      const Rational u = SA * SB + SC * SA - SB * SC, v = SB * SC + SA * SB - SC * SA,
                     w = SC * SA + SB * SC - SA * SB;
      return HomPoint(A * v * w, B * w * u, C * u * v);
    }
    case CenterId::X69: return HomPoint(SA, SB, SC);
    case CenterId::X76: return HomPoint(B * C, C * A, A * B);
    case CenterId::X389:
      return detail::cyclic(
          [](const Rational& a, const Rational& b, const Rational& c) -> Rational {
            return a * (a * a * a * (b + c) - 3 * a * a * (b * b + c * c) +
                        3 * a * (b * b * b - b * b * c - b * c * c + c * c * c) -
                        (b * b * b * b - 2 * b * b * b * c + 2 * b * b * c * c - 2 * b * c * c * c + c * c * c * c));
          },
          A, B, C);
    case CenterId::BrocardOmega1: return HomPoint(C * A, A * B, B * C);
    case CenterId::BrocardOmega2: return HomPoint(A * B, B * C, C * A);
    case CenterId::VertexA: return vertex(0);
    case CenterId::VertexB: return vertex(1);
    case CenterId::VertexC: return vertex(2);
    default: break;
  }

  const auto& sides = detail::require_sides(s, tag(id));
  const Rational &a = sides[0], &b = sides[1], &c = sides[2];
  switch (id) {
    case CenterId::X1: return HomPoint(a, b, c);
    case CenterId::X7: return HomPoint((c + a - b) * (a + b - c), (a + b - c) * (b + c - a), (b + c - a) * (c + a - b));
    case CenterId::X8: return HomPoint(b + c - a, c + a - b, a + b - c);
    case CenterId::X9: return HomPoint(a * (b + c - a), b * (c + a - b), c * (a + b - c));
    case CenterId::X10: return HomPoint(b + c, c + a, a + b);
    case CenterId::X21:
      return detail::cyclic(
          [](const Rational& a, const Rational& b, const Rational& c) -> Rational { return a * (b + c - a) * (a + b) * (a + c); },
          a, b, c);
    case CenterId::X40:
      return detail::cyclic(
          [](const Rational& a, const Rational& b, const Rational& c) -> Rational {
            return a * (a * a * a + a * a * (b + c) - a * (b + c) * (b + c) - (b + c) * (b - c) * (b - c));
          },
          a, b, c);
    case CenterId::X57: return HomPoint(a * (c + a - b) * (a + b - c), b * (a + b - c) * (b + c - a), c * (b + c - a) * (c + a - b));
    case CenterId::X84: {
      auto bevan = [](const Rational& a, const Rational& b, const Rational& c) -> Rational {
        return a * (a * a * a + a * a * (b + c) - a * (b + c) * (b + c) - (b + c) * (b - c) * (b - c));
      };
      const Rational u = bevan(a, b, c), v = bevan(b, c, a), w = bevan(c, a, b);
      return HomPoint(A * v * w, B * w * u, C * u * v);
    }
    case CenterId::X355:
      return detail::cyclic(
          [](const Rational& a, const Rational& b, const Rational& c) -> Rational {
            return -a * a * a * a + a * a * a * (b + c) - 2 * a * a * b * c - a * (b * b * b + c * c * c) +
                   a * b * c * (b + c) + b * b * b * b - 2 * b * b * c * c + c * c * c * c;
          },
          a, b, c);
    default: break;
  }
  throw Error(ErrorKind::UnknownCenter, std::string(tag(id)));
}

inline HomPoint eval_center(const RefTriangle& t, CenterId id) { return center_formula(SideLengths::of(t), id); }

// ---------------------------------------------------------------------------
// Coordinate maps relative to the base triangle

inline HomPoint complement(const HomPoint& p) {
  return HomPoint(std::array<Integer, 3>{p[1] + p[2], p[2] + p[0], p[0] + p[1]});
}

inline HomPoint anticomplement(const HomPoint& p) {
  return HomPoint(std::array<Integer, 3>{p[1] + p[2] - p[0], p[2] + p[0] - p[1], p[0] + p[1] - p[2]});
}

inline void require_off_sidelines(const HomPoint& p) {
  if (p[0] == 0 || p[1] == 0 || p[2] == 0) throw Error(ErrorKind::OnSideline, p.str() + " lies on a sideline");
}

inline HomPoint isogonal(const SideLengths& s, const HomPoint& p) {
  require_off_sidelines(p);
  return HomPoint(s.a2 * p[1] * p[2], s.b2 * p[2] * p[0], s.c2 * p[0] * p[1]);
}

inline HomPoint isogonal(const RefTriangle& t, const HomPoint& p) { return isogonal(SideLengths::of(t), p); }

inline HomPoint isotomic(const HomPoint& p) {
  require_off_sidelines(p);
  return HomPoint(std::array<Integer, 3>{p[1] * p[2], p[2] * p[0], p[0] * p[1]});
}

/// Foot of the perpendicular from p to l.
inline HomPoint foot(const HomPoint& p, const HomLine& l, const RefTriangle& t) {
  return meet(l, perpendicular_line_through(l, p, t));
}

// ---------------------------------------------------------------------------
// Derived triangles

enum class TriangleKind { Base, Excentral, Medial, Orthic, Anticomplementary, EulerTriangle, MidArc, Tangential };

inline constexpr std::array kAllTriangleKinds{
    TriangleKind::Base,          TriangleKind::Excentral, TriangleKind::Medial,
    TriangleKind::Orthic,        TriangleKind::Anticomplementary, TriangleKind::EulerTriangle,
    TriangleKind::MidArc,        TriangleKind::Tangential,
};

constexpr std::string_view to_string(TriangleKind k) {
  switch (k) {
    case TriangleKind::Base: return "Base";
    case TriangleKind::Excentral: return "Excentral";
    case TriangleKind::Medial: return "Medial";
    case TriangleKind::Orthic: return "Orthic";
    case TriangleKind::Anticomplementary: return "Anticomplementary";
    case TriangleKind::EulerTriangle: return "EulerTriangle";
    case TriangleKind::MidArc: return "MidArc";
    case TriangleKind::Tangential: return "Tangential";
  }
  return "?";
}

inline std::optional<TriangleKind> triangle_kind_from_string(std::string_view name) {
  for (auto k : kAllTriangleKinds) {
    if (to_string(k) == name) return k;
  }
  if (name == "Euler") return TriangleKind::EulerTriangle;
  return std::nullopt;
}

/// A triangle whose vertices are given in base barycentrics, with its own
/// squared side lengths (and exact sides when rational).
class SubTriangle {
 public:
  SubTriangle(const RefTriangle& t, const HomPoint& v1, const HomPoint& v2, const HomPoint& v3,
              std::optional<std::array<Rational, 3>> sides = std::nullopt)
      : frame_(v1, v2, v3),
        lengths_(SideLengths::from_squares(squared_distance(v2, v3, t), squared_distance(v3, v1, t),
                                           squared_distance(v1, v2, t), std::move(sides))) {}

  static SubTriangle base(const RefTriangle& t) {
    return SubTriangle(t, tricurve::vertex(0), tricurve::vertex(1), tricurve::vertex(2), std::array<Rational, 3>{t.a(), t.b(), t.c()});
  }

  const HomPoint& vertex(std::size_t i) const { return frame_.vertex(i); }
  const Frame& frame() const { return frame_; }
  const SideLengths& lengths() const { return lengths_; }
  std::array<Rational, 3> sq_sides() const { return {lengths_.a2, lengths_.b2, lengths_.c2}; }
  const std::optional<std::array<Rational, 3>>& sides() const { return lengths_.sides; }

  HomPoint to_local(const HomPoint& p) const { return frame_.local(p); }
  HomPoint to_base(const HomPoint& q) const { return frame_.global(q); }

 private:
  Frame frame_;
  SideLengths lengths_;
};

namespace detail {

inline std::optional<std::array<Rational, 3>> scaled_sides(const SideLengths& s, const Rational& k) {
  if (!s.sides) return std::nullopt;
  return std::array<Rational, 3>{(*s.sides)[0] * k, (*s.sides)[1] * k, (*s.sides)[2] * k};
}

}  // namespace detail

/// Derived triangle of `parent`, constructed in parent's local coordinates.
inline SubTriangle derive(const RefTriangle& t, const SubTriangle& parent, TriangleKind kind) {
  const SideLengths& s = parent.lengths();
  auto make = [&](const HomPoint& p, const HomPoint& q, const HomPoint& r,
                  std::optional<std::array<Rational, 3>> sides = std::nullopt) {
    return SubTriangle(t, parent.to_base(p), parent.to_base(q), parent.to_base(r), std::move(sides));
  };
  switch (kind) {
    case TriangleKind::Base: return parent;
    case TriangleKind::Excentral: {
      const auto& sd = detail::require_sides(s, "excentral triangle");
      const Rational &a = sd[0], &b = sd[1], &c = sd[2];
      return make(HomPoint(-a, b, c), HomPoint(a, -b, c), HomPoint(a, b, -c));
    }
    case TriangleKind::Medial:
      return make(HomPoint(0, 1, 1), HomPoint(1, 0, 1), HomPoint(1, 1, 0), detail::scaled_sides(s, Rational(1, 2)));
    case TriangleKind::Orthic:
      if (s.is_right()) throw Error(ErrorKind::RightTriangle, "orthic triangle of a right triangle");
      return make(HomPoint(0, s.sc, s.sb), HomPoint(s.sc, 0, s.sa), HomPoint(s.sb, s.sa, 0));
    case TriangleKind::Anticomplementary:
      return make(HomPoint(-1, 1, 1), HomPoint(1, -1, 1), HomPoint(1, 1, -1), detail::scaled_sides(s, Rational(2)));
    case TriangleKind::EulerTriangle: {
      const HomPoint h = center_formula(s, CenterId::X4);
      return make(midpoint(vertex(0), h), midpoint(vertex(1), h), midpoint(vertex(2), h),
                  detail::scaled_sides(s, Rational(1, 2)));
    }
    case TriangleKind::MidArc: {
      const auto& sd = detail::require_sides(s, "mid-arc triangle");
      const Rational &a = sd[0], &b = sd[1], &c = sd[2];
      return make(HomPoint(-s.a2, b * (b + c), c * (b + c)), HomPoint(a * (c + a), -s.b2, c * (c + a)),
                  HomPoint(a * (a + b), b * (a + b), -s.c2));
    }
    case TriangleKind::Tangential:
      if (s.is_right()) throw Error(ErrorKind::RightTriangle, "tangential triangle of a right triangle");
      return make(HomPoint(-s.a2, s.b2, s.c2), HomPoint(s.a2, -s.b2, s.c2), HomPoint(s.a2, s.b2, -s.c2));
  }
  throw Error(ErrorKind::UnknownCenter, "triangle kind");
}

inline SubTriangle derived_triangle(const RefTriangle& t, TriangleKind kind) {
  return derive(t, SubTriangle::base(t), kind);
}

inline HomPoint eval_center_in(const SubTriangle& sub, CenterId id) {
  return sub.to_base(center_formula(sub.lengths(), id));
}

inline HomPoint isogonal_in(const SubTriangle& sub, const HomPoint& p) {
  return sub.to_base(isogonal(sub.lengths(), sub.to_local(p)));
}

inline HomPoint isotomic_in(const SubTriangle& sub, const HomPoint& p) {
  return sub.to_base(isotomic(sub.to_local(p)));
}

/// Reflection of vertex i through the sub-triangle's circumcenter.
inline HomPoint antipode_in(const SubTriangle& sub, std::size_t i) {
  return reflect(sub.vertex(i), eval_center_in(sub, CenterId::X3));
}

// ---------------------------------------------------------------------------
// Defining-property oracles

namespace detail {

inline bool center_oracle(const RefTriangle& t, CenterId id, const HomPoint& p) {
  const HomPoint A = vertex(0), B = vertex(1), C = vertex(2);
  const std::array<HomPoint, 3> V{A, B, C};
  auto X = [&](CenterId k) { return eval_center(t, k); };
  switch (id) {
    case CenterId::X1: {
      // Interior and equidistant from the three sidelines.
      const bool inside = sgn(p[0]) > 0 && sgn(p[1]) > 0 && sgn(p[2]) > 0;
      const Rational d0 = point_line_distance_sq(p, sideline(0), t);
      return inside && d0 == point_line_distance_sq(p, sideline(1), t) &&
             d0 == point_line_distance_sq(p, sideline(2), t);
    }
    case CenterId::X2:
      return p == affine_combine({{A, Rational(1, 3)}, {B, Rational(1, 3)}, {C, Rational(1, 3)}});
    case CenterId::X3: {
      const Rational d = squared_distance(p, A, t);
      return d == squared_distance(p, B, t) && d == squared_distance(p, C, t);
    }
    case CenterId::X4:
      for (std::size_t i = 0; i < 3; ++i) {
        if (!incident(p, perpendicular_line_through(sideline(i), V[i], t))) return false;
      }
      return true;
    case CenterId::X5: return p == midpoint(X(CenterId::X3), X(CenterId::X4));
    case CenterId::X6: return p == isogonal(t, X(CenterId::X2));
    case CenterId::X7: {
      const HomPoint in = X(CenterId::X1);
      for (std::size_t i = 0; i < 3; ++i) {
        if (!incident(p, join(V[i], foot(in, sideline(i), t)))) return false;
      }
      return true;
    }
    case CenterId::X8: {
      const SubTriangle exc = derived_triangle(t, TriangleKind::Excentral);
      for (std::size_t i = 0; i < 3; ++i) {
        if (!incident(p, join(V[i], foot(exc.vertex(i), sideline(i), t)))) return false;
      }
      return true;
    }
    case CenterId::X9: {
      const SubTriangle med = derived_triangle(t, TriangleKind::Medial);
      const SubTriangle exc = derived_triangle(t, TriangleKind::Excentral);
      return p == eval_center_in(med, CenterId::X7) && p == eval_center_in(exc, CenterId::X6);
    }
    case CenterId::X10: return p == complement(X(CenterId::X1));
    case CenterId::X20: return p == reflect(X(CenterId::X4), X(CenterId::X3));
    case CenterId::X21: {
      const HomPoint in = X(CenterId::X1);
      const std::array<SubTriangle, 4> tris{SubTriangle(t, in, B, C), SubTriangle(t, A, in, C),
                                            SubTriangle(t, A, B, in), SubTriangle::base(t)};
      for (const auto& s : tris) {
        if (!incident(p, join(eval_center_in(s, CenterId::X2), eval_center_in(s, CenterId::X3)))) return false;
      }
      return true;
    }
    case CenterId::X25: {
      const SubTriangle orth = derived_triangle(t, TriangleKind::Orthic);
      const SubTriangle tang = derived_triangle(t, TriangleKind::Tangential);
      for (std::size_t i = 0; i < 3; ++i) {
        if (!incident(p, join(orth.vertex(i), tang.vertex(i)))) return false;
      }
      return true;
    }
    case CenterId::X39: return p == midpoint(X(CenterId::BrocardOmega1), X(CenterId::BrocardOmega2));
    case CenterId::X40: return p == reflect(X(CenterId::X1), X(CenterId::X3));
    case CenterId::X54: return p == isogonal(t, X(CenterId::X5));
    case CenterId::X57: return p == isogonal(t, X(CenterId::X9));
    case CenterId::X64: return p == isogonal(t, X(CenterId::X20));
    case CenterId::X69: return p == isotomic(X(CenterId::X4));
    case CenterId::X76: return p == isotomic(X(CenterId::X6));
    case CenterId::X84: return p == isogonal(t, X(CenterId::X40));
    case CenterId::X355: return p == midpoint(X(CenterId::X4), X(CenterId::X8));
    case CenterId::X389: {
      // Taylor circle: projections of each altitude foot on the other two sides.
      std::vector<HomPoint> six;
      for (std::size_t i = 0; i < 3; ++i) {
        const HomPoint h = foot(V[i], sideline(i), t);
        for (std::size_t j = 0; j < 3; ++j) {
          if (j != i) six.push_back(foot(h, sideline(j), t));
        }
      }
      const Rational d = squared_distance(p, six[0], t);
      for (const auto& q : six) {
        if (squared_distance(p, q, t) != d) return false;
      }
      return true;
    }
    case CenterId::BrocardOmega1: return isogonal(t, p) == X(CenterId::BrocardOmega2);
    case CenterId::BrocardOmega2: return isogonal(t, p) == X(CenterId::BrocardOmega1);
    case CenterId::VertexA: return p == A;
    case CenterId::VertexB: return p == B;
    case CenterId::VertexC: return p == C;
  }
  return false;
}

}  // namespace detail

/// Runs each catalog center's defining-property oracle on `t`. An oracle
/// that throws counts as falsified.
inline std::vector<std::pair<CenterId, bool>> validate_center_oracles(const RefTriangle& t) {
  std::vector<std::pair<CenterId, bool>> out;
  for (auto id : kAllCenters) {
    bool ok = false;
    try {
      ok = detail::center_oracle(t, id, eval_center(t, id));
    } catch (const Error&) {
      ok = false;
    }
    out.emplace_back(id, ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random triangles

struct TriangleConstraints {
  std::int64_t min = 5;
  std::int64_t max = 80;
  bool require_acute = false;
};

/// Deterministic scalene, non-right integer triangle with
/// min <= a < b < c <= max.
inline RefTriangle random_triangle(std::uint64_t seed, const TriangleConstraints& k = {}) {
  if (k.min <= 0 || k.min >= k.max) throw Error(ErrorKind::InvalidTriangle, "need 0 < min < max");
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(k.max - k.min + 1);
  auto draw = [&] { return k.min + static_cast<std::int64_t>(rng() % span); };
  constexpr int kMaxRetries = 100000;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::array<std::int64_t, 3> s{draw(), draw(), draw()};
    std::sort(s.begin(), s.end());
    const auto [a, b, c] = s;
    if (a == b || b == c) continue;
    if (a + b <= c) continue;
    if (a * a + b * b == c * c) continue;
    if (k.require_acute && c * c >= a * a + b * b) continue;
    return RefTriangle(Rational(a), Rational(b), Rational(c));
  }
  throw Error(ErrorKind::ExhaustedRetries, "no triangle satisfies the constraints");
}

}  // namespace tricurve
