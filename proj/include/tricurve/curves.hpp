#pragma once

// Conics and cubics in barycentric coordinates: fitting, incidence,
// centers, rectangularity, focus/directrix conics, Pascal lines, Hessians,
// line components of cubic pencils and homothety images.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tricurve/centers.hpp"
#include "tricurve/kernel.hpp"
#include "tricurve/linalg.hpp"
#include "tricurve/poly.hpp"

namespace tricurve {

/// q11 x² + q22 y² + q33 z² + 2 q12 xy + 2 q13 xz + 2 q23 yz, up to scale.
/// Coefficients are stored in that order as coprime integers.
class Conic {
 public:
  using Coefficients = std::array<Integer, 6>;

  explicit Conic(const std::array<Rational, 6>& q) : q_(primitive(q)) {}
  explicit Conic(const Coefficients& q) : q_(primitive(q)) {}

  static Conic from_form(const TernaryForm<2>& f) {
    // Monomial order x², xy, xz, y², yz, z².
    const auto& c = f.coefficients();
    return Conic(std::array<Rational, 6>{Rational(c[0]), Rational(c[3]), Rational(c[5]), Rational(c[1], 2),
                                         Rational(c[2], 2), Rational(c[4], 2)});
  }

  static Conic from_poly(const Poly& p) { return from_form(TernaryForm<2>::from_poly(p)); }

  const Coefficients& coefficients() const { return q_; }
  const Integer& q11() const { return q_[0]; }
  const Integer& q22() const { return q_[1]; }
  const Integer& q33() const { return q_[2]; }
  const Integer& q12() const { return q_[3]; }
  const Integer& q13() const { return q_[4]; }
  const Integer& q23() const { return q_[5]; }

  Matrix3 matrix() const {
    return {Vec3{Rational(q_[0]), Rational(q_[3]), Rational(q_[4])},
            Vec3{Rational(q_[3]), Rational(q_[1]), Rational(q_[5])},
            Vec3{Rational(q_[4]), Rational(q_[5]), Rational(q_[2])}};
  }

  Poly to_poly() const {
    Poly p;
    p.add_term({2, 0, 0}, Rational(q_[0]));
    p.add_term({0, 2, 0}, Rational(q_[1]));
    p.add_term({0, 0, 2}, Rational(q_[2]));
    p.add_term({1, 1, 0}, Rational(2 * q_[3]));
    p.add_term({1, 0, 1}, Rational(2 * q_[4]));
    p.add_term({0, 1, 1}, Rational(2 * q_[5]));
    return p;
  }

  TernaryForm<2> form() const { return TernaryForm<2>::from_poly(to_poly()); }

  Integer evaluate(const HomPoint& p) const {
    const Integer &x = p[0], &y = p[1], &z = p[2];
    return q_[0] * x * x + q_[1] * y * y + q_[2] * z * z + 2 * (q_[3] * x * y + q_[4] * x * z + q_[5] * y * z);
  }

  bool contains(const HomPoint& p) const { return evaluate(p) == 0; }

  /// Comma-separated q11,q22,q33,q12,q13,q23.
  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < 6; ++k) {
      if (k) s += ",";
      s += q_[k].get_str();
    }
    return s;
  }

  friend bool operator==(const Conic& a, const Conic& b) { return a.q_ == b.q_; }

 private:
  Coefficients q_;
};

inline bool on_conic(const HomPoint& p, const Conic& c) { return c.contains(p); }
inline bool on_cubic(const HomPoint& p, const Cubic& k) { return k.contains(p); }

// ---------------------------------------------------------------------------
// Fitting

/// The unique degree-D curve through the given points. Throws
/// DegeneratePointSetError with the rank and the indices of an independent
/// subset when the incidence conditions do not cut out a single curve.
template <int D>
TernaryForm<D> fit_form(std::span<const HomPoint> points) {
  constexpr std::size_t n = monomial_count<D>;
  if (points.size() != n - 1) {
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " points, got " + std::to_string(points.size()));
  }
  IntMatrix m;
  m.reserve(points.size());
  for (const auto& p : points) {
    const auto row = monomial_row<D>(p);
    m.emplace_back(row.begin(), row.end());
  }
  Echelon e = echelon(std::move(m));
  if (e.rank < n - 1) {
    auto subset = e.pivot_rows;
    std::sort(subset.begin(), subset.end());
    throw DegeneratePointSetError(e.rank, std::move(subset), n - 1);
  }
  const auto basis = nullspace(e, n);
  typename TernaryForm<D>::Coefficients c;
  std::copy(basis.front().begin(), basis.front().end(), c.begin());
  return TernaryForm<D>(c);
}

inline Conic conic_through(std::span<const HomPoint> points) { return Conic::from_form(fit_form<2>(points)); }
inline Conic conic_through(std::initializer_list<HomPoint> points) {
  return conic_through(std::span<const HomPoint>(points.begin(), points.size()));
}

inline Cubic cubic_through(std::span<const HomPoint> points) { return fit_form<3>(points); }
inline Cubic cubic_through(std::initializer_list<HomPoint> points) {
  return cubic_through(std::span<const HomPoint>(points.begin(), points.size()));
}

// ---------------------------------------------------------------------------
// Poles, centers, rectangularity

inline HomPoint pole(const Conic& c, const HomLine& l) {
  const Vec3 v = mul(adjugate(c.matrix()), l.rational());
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
    throw Error(ErrorKind::DegenerateConic, "adjugate of " + c.str() + " annihilates " + l.str());
  }
  return HomPoint(v);
}

inline HomPoint conic_center(const Conic& c) { return pole(c, line_at_infinity()); }

/// The conic restricted to the line at infinity (z = -x - y) is
/// alpha x² + 2 beta xy + gamma y².
struct RestrictionAtInfinity {
  Integer alpha, beta, gamma;
};

inline RestrictionAtInfinity restriction_at_infinity(const Conic& c) {
  return {c.q11() + c.q33() - 2 * c.q13(), c.q33() + c.q12() - c.q13() - c.q23(), c.q22() + c.q33() - 2 * c.q23()};
}

/// Two real perpendicular asymptotic directions.
inline bool is_rectangular(const Conic& c, const RefTriangle& t) {
  const auto [alpha, beta, gamma] = restriction_at_infinity(c);
  if (alpha == 0 && beta == 0 && gamma == 0) {
    throw Error(ErrorKind::DegenerateAtInfinity, c.str() + " contains the line at infinity");
  }
  const Rational orth = t.a2() * alpha + t.b2() * gamma - 2 * t.SC() * beta;
  return orth == 0 && beta * beta - alpha * gamma > 0;
}

// ---------------------------------------------------------------------------
// Focus and directrix

/// Locus of P with |PF|² = e2 · dist(P, l)².
inline Conic conic_from_focus_directrix(const RefTriangle& t, const HomPoint& f, const HomLine& l, const Rational& e2) {
  if (incident(f, l)) throw Error(ErrorKind::FocusOnDirectrix, f.str() + " lies on " + l.str());
  if (e2 <= 0) throw std::invalid_argument("eccentricity squared must be positive");
  const Vec3 fn = normalize_affine(f);
  const Poly s = Poly::linear(1, 1, 1);
  const Poly u = Poly::variable(0) - fn[0] * s;
  const Poly v = Poly::variable(1) - fn[1] * s;
  const Poly w = Poly::variable(2) - fn[2] * s;
  const Poly focal = Rational(-1) * (t.a2() * (v * w) + t.b2() * (w * u) + t.c2() * (u * v));
  // dist(P, l)² · (x+y+z)² = kappa · (l·P)²; kappa read off at F itself.
  const Rational lf = l[0] * fn[0] + l[1] * fn[1] + l[2] * fn[2];
  const Rational kappa = point_line_distance_sq(f, l, t) / (lf * lf);
  const Poly lp = Poly::linear(l);
  return Conic::from_poly(focal - (e2 * kappa) * (lp * lp));
}

struct AxisConic {
  Conic conic;
  Rational e2;
  HomLine directrix;
};

/// Conic with vertices v1, v2 on its focal axis and focus f.
inline AxisConic axis_conic(const RefTriangle& t, const HomPoint& v1, const HomPoint& v2, const HomPoint& f) {
  if (v1 == v2 || v1 == f || v2 == f) throw Error(ErrorKind::CoincidentArguments, "vertices and focus must be distinct");
  for (const auto* p : {&v1, &v2, &f}) {
    if (!is_finite(*p)) throw Error(ErrorKind::PointAtInfinity, p->str());
  }
  if (!collinear(v1, v2, f)) throw Error(ErrorKind::NotCollinear, "focus is off the vertex axis");
  const HomPoint cm = midpoint(v1, v2);
  const Rational a2 = squared_distance(v1, v2, t) / 4;
  const Rational c2 = squared_distance(f, cm, t);
  if (c2 == 0 || c2 == a2) throw Error(ErrorKind::ParabolicDegenerate, "no central conic with these vertices and focus");
  const Rational e2 = c2 / a2;
  const Rational k = a2 / c2;
  const HomPoint d = affine_combine({{cm, 1 - k}, {f, k}});
  const HomLine directrix = perpendicular_line_through(join(v1, v2), d, t);
  AxisConic out{conic_from_focus_directrix(t, f, directrix, e2), e2, directrix};
  if (!out.conic.contains(v1) || !out.conic.contains(v2)) {
    throw std::logic_error("axis conic misses its vertices");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pascal

struct Segment {
  HomPoint p, q;
};

using SegmentPair = std::pair<Segment, Segment>;

struct PascalResult {
  HomLine line;
  bool collinear;
  std::array<HomPoint, 3> meets;
};

/// Meets the two lines of each pair and tests the three meets for collinearity.
inline PascalResult pascal_check(const std::array<SegmentPair, 3>& pairs) {
  auto meet_of = [](const SegmentPair& sp) {
    return meet(join(sp.first.p, sp.first.q), join(sp.second.p, sp.second.q));
  };
  const std::array<HomPoint, 3> m{meet_of(pairs[0]), meet_of(pairs[1]), meet_of(pairs[2])};
  return {join(m[0], m[1]), collinear(m[0], m[1], m[2]), m};
}

/// Hexagon p0 p1 p2 p3 p4 p5 with opposite sides (p0p1, p3p4), (p1p2, p4p5), (p2p3, p5p0).
inline std::array<SegmentPair, 3> hexagon_pairs(const std::array<HomPoint, 6>& h) {
  return {SegmentPair{{h[0], h[1]}, {h[3], h[4]}}, SegmentPair{{h[1], h[2]}, {h[4], h[5]}},
          SegmentPair{{h[2], h[3]}, {h[5], h[0]}}};
}

// ---------------------------------------------------------------------------
// Hessian and singularity

/// Determinant of the second partials; nullopt when it vanishes identically.
inline std::optional<Cubic> hessian(const Cubic& k) {
  const Poly f = k.to_poly();
  std::array<std::array<Poly, 3>, 3> h;
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly fi = f.derivative(i);
    for (std::size_t j = 0; j < 3; ++j) h[i][j] = fi.derivative(j);
  }
  const Poly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                   h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                   h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  if (det.is_zero()) return std::nullopt;
  return Cubic::from_poly(det);
}

/// All three first partials vanish at p.
inline bool is_singular_point(const Cubic& k, const HomPoint& p) {
  const Poly f = k.to_poly();
  const Vec3 v = p.rational();
  for (std::size_t i = 0; i < 3; ++i) {
    if (f.derivative(i).evaluate(v) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pencils with a line component

struct PencilFactorization {
  Rational t;
  HomLine line;
  Conic residual;
  Cubic composition;  // P - tQ
};

namespace detail {

inline std::array<Rational, 4> restrict_to_line(const Poly& f, const HomPoint& r0, const HomPoint& r1) {
  const Poly s0 = Poly::variable(0), s1 = Poly::variable(1);
  std::array<Poly, 3> sub;
  for (std::size_t i = 0; i < 3; ++i) sub[i] = Rational(r0[i]) * s0 + Rational(r1[i]) * s1;
  const Poly g = f.substitute(sub);
  return {g.coefficient({3, 0, 0}), g.coefficient({2, 1, 0}), g.coefficient({1, 2, 0}), g.coefficient({0, 3, 0})};
}

inline std::pair<HomPoint, HomPoint> two_points_on(const HomLine& l) {
  std::vector<HomPoint> pts;
  for (std::size_t i = 0; i < 3 && pts.size() < 2; ++i) {
    const auto x = cross(l, sideline(i));
    if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
    HomPoint p(x);
    if (pts.empty() || !(pts.front() == p)) pts.push_back(p);
  }
  return {pts.at(0), pts.at(1)};
}

}  // namespace detail

/// Finds t with L dividing P - tQ and the quotient conic.
inline PencilFactorization line_component(const Cubic& p, const Cubic& q, const HomLine& l) {
  const Poly pp = p.to_poly(), qp = q.to_poly();
  const auto [r0, r1] = detail::two_points_on(l);
  const auto rp = detail::restrict_to_line(pp, r0, r1);
  const auto rq = detail::restrict_to_line(qp, r0, r1);
  const bool p_zero = std::all_of(rp.begin(), rp.end(), [](const Rational& v) { return v == 0; });
  const bool q_zero = std::all_of(rq.begin(), rq.end(), [](const Rational& v) { return v == 0; });
  if (p_zero && q_zero) throw Error(ErrorKind::BothVanishOnLine, "both cubics contain " + l.str());
  if (q_zero) throw Error(ErrorKind::NoLinearComponent, "only Q vanishes on " + l.str());
  std::size_t k = 0;
  while (rq[k] == 0) ++k;
  const Rational t = rp[k] / rq[k];
  for (std::size_t i = 0; i < 4; ++i) {
    if (rp[i] != t * rq[i]) throw Error(ErrorKind::NoLinearComponent, "restrictions to " + l.str() + " are not proportional");
  }
  const Poly composite = pp - t * qp;
  if (composite.is_zero()) throw Error(ErrorKind::DependentForms, "P and Q are proportional");

  // Solve L · C = composite for the six conic coefficients.
  const auto mons2 = monomials<2>();
  const auto mons3 = monomials<3>();
  const Poly lp = Poly::linear(l);
  Integer den = 1;
  for (const auto& [e, c] : composite.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntMatrix m(mons3.size(), std::vector<Integer>(7, Integer(0)));
  for (std::size_t j = 0; j < mons2.size(); ++j) {
    Poly mono;
    mono.add_term(mons2[j], 1);
    const Poly prod = lp * mono;
    for (std::size_t i = 0; i < mons3.size(); ++i) m[i][j] = prod.coefficient(mons3[i]).get_num();
  }
  for (std::size_t i = 0; i < mons3.size(); ++i) {
    const Rational v = composite.coefficient(mons3[i]) * den;
    m[i][6] = -v.get_num();
  }
  const auto basis = nullspace(m, 7);
  if (basis.size() != 1 || basis.front()[6] == 0) throw std::logic_error("line does not divide the composition");
  TernaryForm<2>::Coefficients rc;
  std::copy(basis.front().begin(), basis.front().begin() + 6, rc.begin());
  const Conic residual = Conic::from_form(TernaryForm<2>(rc));
  const Cubic composition = Cubic::from_poly(composite);
  if (!(Cubic::from_poly(lp * residual.to_poly()) == composition)) {
    throw std::logic_error("line times residual differs from the composition");
  }
  return {t, l, residual, composition};
}

// ---------------------------------------------------------------------------
// Homotheties

/// Matrix realizing P -> center + ratio (P - center) on normalized barycentrics.
inline Matrix3 homothety_matrix(const HomPoint& center, const Rational& ratio) {
  if (ratio == 0) throw Error(ErrorKind::ZeroRatio, "homothety ratio is zero");
  const Vec3 c = normalize_affine(center);
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = (1 - ratio) * c[i] + (i == j ? ratio : Rational(0));
  }
  return m;
}

namespace detail {

inline Matrix3 inverse_up_to_scale(const Matrix3& m) {
  if (determinant(m) == 0) throw Error(ErrorKind::SingularMatrix, "transformation is singular");
  return adjugate(m);
}

}  // namespace detail

/// Image of c under p -> M p.
inline Conic transform_conic(const Matrix3& m, const Conic& c) {
  return Conic::from_poly(substitute_linear(c.to_poly(), detail::inverse_up_to_scale(m)));
}

inline Cubic transform_cubic(const Matrix3& m, const Cubic& k) {
  return Cubic::from_poly(substitute_linear(k.to_poly(), detail::inverse_up_to_scale(m)));
}

// ---------------------------------------------------------------------------
// Pivotal cubics

enum class Conjugation { Isogonal, Isotomic };

/// X, its conjugate and the pivot are collinear, all taken in `sub` when given.
inline bool pivotal_membership(const RefTriangle& t, const HomPoint& pivot, Conjugation conj,
                               const std::optional<SubTriangle>& sub, const HomPoint& x) {
  const SubTriangle frame = sub ? *sub : SubTriangle::base(t);
  const HomPoint local = frame.to_local(x);
  const HomPoint image = conj == Conjugation::Isogonal ? isogonal(frame.lengths(), local) : isotomic(local);
  return collinear(local, image, frame.to_local(pivot));
}

}  // namespace tricurve
