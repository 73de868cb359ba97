#pragma once

// Exact projective/affine geometry in homogeneous barycentric coordinates
// relative to a reference triangle given by its side lengths. Metric
// quantities go through the Conway symbols SA, SB, SC and S^2, so nothing
// here ever needs a square root.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>

#include "tricurve/errors.hpp"
#include "tricurve/rational.hpp"

namespace tricurve {

using Vec3 = std::array<Rational, 3>;
using Matrix3 = std::array<Vec3, 3>;

/// Homogeneous rational triple kept as coprime integers with the first
/// nonzero entry positive. Tag separates points from lines.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(const Rational& x, const Rational& y, const Rational& z)
      : c_(primitive(Vec3{x, y, z})) {}

  explicit Homogeneous(const Vec3& v) : c_(primitive(v)) {}

  explicit Homogeneous(const std::array<Integer, 3>& v) : c_(primitive(v)) {}

  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Integer, 3>& coords() const { return c_; }

  Vec3 rational() const { return {Rational(c_[0]), Rational(c_[1]), Rational(c_[2])}; }

  Integer sum() const { return c_[0] + c_[1] + c_[2]; }

  /// Textual form "x:y:z".
  std::string str() const {
    return c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str();
  }

  friend bool operator==(const Homogeneous& p, const Homogeneous& q) {
    return p.c_[0] == q.c_[0] && p.c_[1] == q.c_[1] && p.c_[2] == q.c_[2];
  }

  friend std::ostream& operator<<(std::ostream& os, const Homogeneous& p) { return os << p.str(); }

 private:
  std::array<Integer, 3> c_;
};

struct PointTag {};
struct LineTag {};

using HomPoint = Homogeneous<PointTag>;
using HomLine = Homogeneous<LineTag>;

/// Values are canonical on construction; this is the identity.
template <class Tag>
const Homogeneous<Tag>& canonical(const Homogeneous<Tag>& p) {
  return p;
}

inline HomPoint vertex(std::size_t i) {
  std::array<Integer, 3> v{0, 0, 0};
  v[i] = 1;
  return HomPoint(v);
}

inline HomLine line_at_infinity() { return HomLine(1, 1, 1); }

/// Sideline opposite vertex i (x_i = 0).
inline HomLine sideline(std::size_t i) {
  std::array<Integer, 3> v{0, 0, 0};
  v[i] = 1;
  return HomLine(v);
}

namespace detail {

template <class A, class B>
std::array<Integer, 3> cross(const A& p, const B& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

template <class T>
Integer det3(const T& p, const T& q, const T& r) {
  return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
         p[2] * (q[0] * r[1] - q[1] * r[0]);
}

inline Rational det3(const Vec3& p, const Vec3& q, const Vec3& r) {
  return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
         p[2] * (q[0] * r[1] - q[1] * r[0]);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 3x3 rational matrices (row-major)

inline Rational determinant(const Matrix3& m) { return detail::det3(m[0], m[1], m[2]); }

inline Matrix3 adjugate(const Matrix3& m) {
  Matrix3 adj;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return adj;
}

inline Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return out;
}

inline Matrix3 transpose(const Matrix3& m) {
  Matrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

inline Vec3 mul(const Matrix3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2], m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

inline HomPoint mul(const Matrix3& m, const HomPoint& p) { return HomPoint(mul(m, p.rational())); }

// ---------------------------------------------------------------------------
// Incidence

inline HomLine join(const HomPoint& p, const HomPoint& q) {
  if (p == q) throw Error(ErrorKind::CoincidentArguments, "join of equal points " + p.str());
  return HomLine(detail::cross(p, q));
}

inline HomPoint meet(const HomLine& l, const HomLine& m) {
  if (l == m) throw Error(ErrorKind::CoincidentArguments, "meet of equal lines " + l.str());
  return HomPoint(detail::cross(l, m));
}

inline bool collinear(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  return detail::det3(p, q, r) == 0;
}

inline bool concurrent(const HomLine& l, const HomLine& m, const HomLine& n) {
  return detail::det3(l, m, n) == 0;
}

inline bool incident(const HomPoint& p, const HomLine& l) { return p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == 0; }

inline bool is_finite(const HomPoint& p) { return p.sum() != 0; }

/// Exact affine representative with coordinates summing to 1.
inline Vec3 normalize_affine(const HomPoint& p) {
  const Integer s = p.sum();
  if (s == 0) throw Error(ErrorKind::PointAtInfinity, "cannot normalize " + p.str());
  Rational inv(Integer(1), s);
  inv.canonicalize();
  return {p[0] * inv, p[1] * inv, p[2] * inv};
}

struct WeightedPoint {
  HomPoint point;
  Rational weight;
};

inline HomPoint affine_combine(std::span<const WeightedPoint> terms) {
  Rational total = 0;
  Vec3 acc{0, 0, 0};
  for (const auto& t : terms) {
    const Vec3 n = normalize_affine(t.point);
    for (std::size_t i = 0; i < 3; ++i) acc[i] += t.weight * n[i];
    total += t.weight;
  }
  if (total != 1) throw Error(ErrorKind::WeightSumNotOne, "weights sum to " + total.get_str());
  return HomPoint(acc);
}

inline HomPoint affine_combine(std::initializer_list<WeightedPoint> terms) {
  return affine_combine(std::span<const WeightedPoint>(terms.begin(), terms.size()));
}

inline HomPoint midpoint(const HomPoint& p, const HomPoint& q) {
  return affine_combine({{p, Rational(1, 2)}, {q, Rational(1, 2)}});
}

/// Point reflection of p through center.
inline HomPoint reflect(const HomPoint& p, const HomPoint& center) {
  return affine_combine({{center, Rational(2)}, {p, Rational(-1)}});
}

// ---------------------------------------------------------------------------
// Reference triangle

/// Triangle given by rational side lengths a = |BC|, b = |CA|, c = |AB|,
/// with its Conway symbols precomputed.
class RefTriangle {
 public:
  RefTriangle(const Rational& a, const Rational& b, const Rational& c) : a_(a), b_(b), c_(c) {
    if (a <= 0 || b <= 0 || c <= 0) {
      throw Error(ErrorKind::InvalidTriangle, "side lengths must be positive");
    }
    if (a + b <= c || b + c <= a || c + a <= b) {
      throw Error(ErrorKind::InvalidTriangle, "triangle inequality fails for " + label());
    }
    a2_ = a * a;
    b2_ = b * b;
    c2_ = c * c;
    sa_ = (b2_ + c2_ - a2_) / 2;
    sb_ = (c2_ + a2_ - b2_) / 2;
    sc_ = (a2_ + b2_ - c2_) / 2;
    s2_ = sa_ * sb_ + sb_ * sc_ + sc_ * sa_;
    if (s2_ <= 0) throw Error(ErrorKind::InvalidTriangle, "degenerate triangle " + label());
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& a2() const { return a2_; }
  const Rational& b2() const { return b2_; }
  const Rational& c2() const { return c2_; }
  const Rational& SA() const { return sa_; }
  const Rational& SB() const { return sb_; }
  const Rational& SC() const { return sc_; }
  /// S^2 where S is twice the area.
  const Rational& S2() const { return s2_; }

  bool is_right() const { return sa_ == 0 || sb_ == 0 || sc_ == 0; }
  bool is_acute() const { return sa_ > 0 && sb_ > 0 && sc_ > 0; }

  std::string label() const { return "(" + a_.get_str() + ", " + b_.get_str() + ", " + c_.get_str() + ")"; }

 private:
  Rational a_, b_, c_;
  Rational a2_, b2_, c2_;
  Rational sa_, sb_, sc_, s2_;
};

// ---------------------------------------------------------------------------
// Metric

/// Squared distance between two finite points.
inline Rational squared_distance(const HomPoint& p, const HomPoint& q, const RefTriangle& t) {
  const Vec3 np = normalize_affine(p);
  const Vec3 nq = normalize_affine(q);
  const Rational u = np[0] - nq[0], v = np[1] - nq[1], w = np[2] - nq[2];
  return -(t.a2() * v * w + t.b2() * w * u + t.c2() * u * v);
}

inline HomPoint infinite_point(const HomLine& l) {
  if (l == line_at_infinity()) throw Error(ErrorKind::LineAtInfinity, "line at infinity has no direction");
  return HomPoint(std::array<Integer, 3>{l[1] - l[2], l[2] - l[0], l[0] - l[1]});
}

/// Squared distance from p to the line through the distinct finite points q1, q2.
inline Rational point_line_distance_sq_via(const HomPoint& p, const HomPoint& q1, const HomPoint& q2,
                                           const RefTriangle& t) {
  if (q1 == q2) throw Error(ErrorKind::CoincidentArguments, "sample points coincide");
  const Rational d = detail::det3(normalize_affine(p), normalize_affine(q1), normalize_affine(q2));
  return d * d * t.S2() / squared_distance(q1, q2, t);
}

inline Rational point_line_distance_sq(const HomPoint& p, const HomLine& l, const RefTriangle& t) {
  if (l == line_at_infinity()) throw Error(ErrorKind::LineAtInfinity, "distance to the line at infinity");
  // One finite point where l crosses a sideline, then step along its direction.
  for (std::size_t i = 0; i < 3; ++i) {
    const auto x = detail::cross(l, sideline(i));
    if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
    const HomPoint q1(x);
    if (!is_finite(q1)) continue;
    const Vec3 n = normalize_affine(q1);
    const Vec3 dir = infinite_point(l).rational();
    const HomPoint q2(Vec3{n[0] + dir[0], n[1] + dir[1], n[2] + dir[2]});
    return point_line_distance_sq_via(p, q1, q2, t);
  }
  throw Error(ErrorKind::LineAtInfinity, "no finite point on " + l.str());
}

/// Direction perpendicular to the direction d.
inline HomPoint perpendicular_infinite_point(const HomPoint& d, const RefTriangle& t) {
  if (is_finite(d)) throw Error(ErrorKind::NotADirection, d.str() + " is a finite point");
  const Rational u = t.SA() * d[0], v = t.SB() * d[1], w = t.SC() * d[2];
  return HomPoint(v - w, w - u, u - v);
}

/// Conway orthogonality of two directions.
inline bool perpendicular_directions(const HomPoint& d, const HomPoint& e, const RefTriangle& t) {
  if (is_finite(d) || is_finite(e)) throw Error(ErrorKind::NotADirection, "expected two directions");
  return t.SA() * d[0] * e[0] + t.SB() * d[1] * e[1] + t.SC() * d[2] * e[2] == 0;
}

inline HomLine perpendicular_line_through(const HomLine& l, const HomPoint& p, const RefTriangle& t) {
  return join(p, perpendicular_infinite_point(infinite_point(l), t));
}

// ---------------------------------------------------------------------------
// Change of reference triangle

/// Three affinely independent finite points used as a local reference
/// triangle. Columns of `to_base` are the normalized vertices.
class Frame {
 public:
  Frame(const HomPoint& v1, const HomPoint& v2, const HomPoint& v3) : v_{v1, v2, v3} {
    const std::array<Vec3, 3> n{normalize_affine(v1), normalize_affine(v2), normalize_affine(v3)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) to_base_[i][j] = n[j][i];
    if (determinant(to_base_) == 0) {
      throw Error(ErrorKind::DegenerateFrame, v1.str() + ", " + v2.str() + ", " + v3.str());
    }
    to_local_ = adjugate(to_base_);
  }

  const HomPoint& vertex(std::size_t i) const { return v_[i]; }
  const Matrix3& to_base() const { return to_base_; }
  /// Adjugate of to_base(): inverse up to scale.
  const Matrix3& to_local() const { return to_local_; }

  HomPoint local(const HomPoint& p) const { return mul(to_local_, p); }
  HomPoint global(const HomPoint& q) const { return mul(to_base_, q); }
  HomLine local(const HomLine& l) const {
    // Lines transform by the transpose of the point map.
    const Vec3 r = mul(transpose(to_base_), l.rational());
    return HomLine(r);
  }

 private:
  std::array<HomPoint, 3> v_;
  Matrix3 to_base_;
  Matrix3 to_local_;
};

inline HomPoint local_coords(const HomPoint& p, const HomPoint& v1, const HomPoint& v2, const HomPoint& v3) {
  return Frame(v1, v2, v3).local(p);
}

inline HomPoint from_local(const HomPoint& q, const HomPoint& v1, const HomPoint& v2, const HomPoint& v3) {
  return Frame(v1, v2, v3).global(q);
}

}  // namespace tricurve
