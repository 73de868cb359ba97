#pragma once

// Independent oracles for the test suites. Nothing here calls the library's
// elimination, distance or center code: Heronian triangles get exact
// rational Cartesian coordinates, and ranks are recomputed over Q.

#include <array>
#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <stdexcept>
#include <vector>

#include "tricurve/tricurve.hpp"

namespace oracle {

using tricurve::HomPoint;
using tricurve::Integer;
using tricurve::Rational;

struct Cart {
  Rational x, y;
};

inline bool operator==(const Cart& p, const Cart& q) { return p.x == q.x && p.y == q.y; }

inline Rational dist2(const Cart& p, const Cart& q) {
  const Rational dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

/// Twice the signed area of pqr.
inline Rational cross2(const Cart& p, const Cart& q, const Cart& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// Heronian, scalene, non-right triangles: rational area, hence rational
// coordinates A = (0,0), B = (c,0), C = (cx, cy).
inline const std::vector<std::array<int, 3>>& heronian() {
  static const std::vector<std::array<int, 3>> list = {
      {13, 14, 15}, {4, 13, 15}, {7, 15, 20}, {9, 10, 17}, {11, 13, 20},
      {13, 20, 21}, {10, 17, 21}, {17, 25, 28}, {13, 37, 40}, {6, 25, 29},
  };
  return list;
}

inline bool perfect_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

struct CartTriangle {
  Rational a, b, c;
  Cart A, B, C;

  CartTriangle(int ia, int ib, int ic) : a(ia), b(ib), c(ic) {
    const Rational cx = (b * b + c * c - a * a) / (2 * c);
    Rational cy;
    if (!perfect_square(b * b - cx * cx, cy)) throw std::invalid_argument("not Heronian");
    A = {0, 0};
    B = {c, 0};
    C = {cx, cy};
  }

  tricurve::RefTriangle ref() const { return tricurve::RefTriangle(a, b, c); }

  Cart to_cart(const HomPoint& p) const {
    const Rational s = Rational(p.sum());
    if (s == 0) throw std::invalid_argument("point at infinity");
    const Rational u = Rational(p[0]) / s, v = Rational(p[1]) / s, w = Rational(p[2]) / s;
    return {u * A.x + v * B.x + w * C.x, u * A.y + v * B.y + w * C.y};
  }

  /// Barycentrics as ratios of signed areas.
  HomPoint to_bary(const Cart& p) const {
    return HomPoint(cross2(p, B, C), cross2(A, p, C), cross2(A, B, p));
  }

  Cart circumcenter() const {
    // |P - A|² = |P - B|² = |P - C|² as a 2x2 linear system.
    const Rational a1 = 2 * (B.x - A.x), b1 = 2 * (B.y - A.y);
    const Rational c1 = B.x * B.x + B.y * B.y - A.x * A.x - A.y * A.y;
    const Rational a2 = 2 * (C.x - A.x), b2 = 2 * (C.y - A.y);
    const Rational c2 = C.x * C.x + C.y * C.y - A.x * A.x - A.y * A.y;
    const Rational det = a1 * b2 - a2 * b1;
    return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
  }

  Cart centroid() const { return {(A.x + B.x + C.x) / 3, (A.y + B.y + C.y) / 3}; }

  Cart orthocenter() const {
    // Euler line: H = A + B + C - 2 O.
    const Cart o = circumcenter();
    return {A.x + B.x + C.x - 2 * o.x, A.y + B.y + C.y - 2 * o.y};
  }

  Cart incenter() const {
    const Rational p = a + b + c;
    return {(a * A.x + b * B.x + c * C.x) / p, (a * A.y + b * B.y + c * C.y) / p};
  }

  /// Squared distance from p to the line through q and r.
  static Rational line_dist2(const Cart& p, const Cart& q, const Cart& r) {
    const Rational x = cross2(q, r, p);
    return x * x / dist2(q, r);
  }

  /// The barycentric polynomial pulled back to the Cartesian chart:
  /// variables 0, 1, 2 are X, Y and the homogenizing W.
  tricurve::Poly chart(const tricurve::Poly& f) const {
    using tricurve::Poly;
    const Poly X = Poly::variable(0), Y = Poly::variable(1), W = Poly::variable(2);
    const Rational twice = cross2(A, B, C);
    // Signed area of (P, Q, R) is affine in P; expand it for each vertex pair.
    auto area = [&](const Cart& q, const Cart& r) {
      return (1 / twice) * ((q.y - r.y) * X + (r.x - q.x) * Y + (q.x * r.y - r.x * q.y) * W);
    };
    return f.substitute({area(B, C), area(C, A), area(A, B)});
  }
};

/// Rank over Q by plain Gauss-Jordan on Rationals.
inline std::size_t rank_over_q(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Monomial values x^i y^j z^k (i + j + k = D) computed directly.
inline std::vector<Rational> monomial_values(const HomPoint& p, int degree) {
  std::vector<Rational> out;
  for (int i = degree; i >= 0; --i) {
    for (int j = degree - i; j >= 0; --j) {
      const int k = degree - i - j;
      Integer v = 1;
      for (int e = 0; e < i; ++e) v *= p[0];
      for (int e = 0; e < j; ++e) v *= p[1];
      for (int e = 0; e < k; ++e) v *= p[2];
      out.emplace_back(v);
    }
  }
  return out;
}

inline std::size_t incidence_rank(const std::vector<HomPoint>& pts, int degree) {
  std::vector<std::vector<Rational>> m;
  for (const auto& p : pts) m.push_back(monomial_values(p, degree));
  return rank_over_q(std::move(m));
}

/// Second intersection of the conic with the line from p (on the conic) in
/// direction d; rational whenever p is.
inline HomPoint second_intersection(const tricurve::Conic& c, const HomPoint& p, const tricurve::Vec3& d) {
  const auto m = c.matrix();
  auto bilinear = [&](const tricurve::Vec3& u, const tricurve::Vec3& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) s += u[i] * m[i][j] * v[j];
    }
    return s;
  };
  const tricurve::Vec3 pv = p.rational();
  const Rational dd = bilinear(d, d);
  if (dd == 0) throw std::invalid_argument("direction is asymptotic");
  const Rational s = -2 * bilinear(pv, d) / dd;
  return HomPoint(pv[0] + s * d[0], pv[1] + s * d[1], pv[2] + s * d[2]);
}

inline HomPoint random_point(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    const int x = dist(rng), y = dist(rng), z = dist(rng);
    if (x != 0 || y != 0 || z != 0) return HomPoint(x, y, z);
  }
}

struct FitRobustness {
  std::size_t fits = 0;
  std::size_t fitted = 0;
  std::size_t degenerate = 0;
  std::size_t mismatches = 0;  // wrong curve, wrong rank or wrong subset
  std::string first_mismatch;
};

/// Mixed generic and deliberately degenerate point sets for conics and
/// cubics. Every outcome of the library fit is checked against the rank
/// recomputed over Q.
inline FitRobustness fit_robustness(std::size_t count, std::uint64_t seed) {
  using tricurve::Conic;
  using tricurve::Cubic;
  std::mt19937_64 rng(seed);
  FitRobustness out;
  auto on_line = [&](const HomPoint& p, const HomPoint& q, std::size_t n) {
    if (p == q) throw tricurve::Error(tricurve::ErrorKind::CoincidentArguments, "line needs two points");
    std::vector<HomPoint> pts;
    std::uniform_int_distribution<int> d(-7, 7);
    while (pts.size() < n) {
      const int s = d(rng), u = d(rng);
      if (s == 0 && u == 0) continue;
      HomPoint r(Rational(s) * Rational(p[0]) + Rational(u) * Rational(q[0]), Rational(s) * Rational(p[1]) + Rational(u) * Rational(q[1]),
                 Rational(s) * Rational(p[2]) + Rational(u) * Rational(q[2]));
      bool fresh = true;
      for (const auto& x : pts) fresh = fresh && !(x == r);
      if (fresh) pts.push_back(r);
    }
    return pts;
  };
  auto on_conic = [&](std::size_t n) {
    std::vector<HomPoint> base;
    for (int i = 0; i < 5; ++i) base.push_back(random_point(rng, 6));
    const Conic c = tricurve::conic_through(std::span<const HomPoint>(base));
    std::vector<HomPoint> pts{base[0]};
    while (pts.size() < n) {
      const HomPoint d = random_point(rng, 5);
      try {
        const HomPoint q = second_intersection(c, base[0], d.rational());
        bool fresh = true;
        for (const auto& x : pts) fresh = fresh && !(x == q);
        if (fresh) pts.push_back(q);
      } catch (const std::exception&) {
      }
    }
    return pts;
  };

  for (std::size_t k = 0; k < count; ++k) {
    const int degree = k % 2 ? 3 : 2;
    const std::size_t n = degree == 2 ? 5 : 9;
    std::vector<HomPoint> pts;
    try {
      switch ((k / 2) % 4) {
        case 0:
          while (pts.size() < n) pts.push_back(random_point(rng, 8));
          break;
        case 1:
          while (pts.size() < n - 1) pts.push_back(random_point(rng, 8));
        {
          const HomPoint twin = pts[rng() % pts.size()];
          pts.insert(pts.begin() + static_cast<long>(rng() % pts.size()), twin);
        }
          break;
        case 2: {
          pts = on_line(random_point(rng, 5), random_point(rng, 5), degree == 2 ? 4 : 5);
          while (pts.size() < n) pts.push_back(random_point(rng, 8));
          std::shuffle(pts.begin(), pts.end(), rng);
          break;
        }
        default:
          if (degree == 2) {
            pts = on_line(random_point(rng, 5), random_point(rng, 5), 5);
          } else {
            pts = on_conic(8);
            pts.push_back(random_point(rng, 8));
            std::shuffle(pts.begin(), pts.end(), rng);
          }
      }
    } catch (const tricurve::Error&) {
      // The random base for a conic was itself degenerate; draw again.
      --k;
      continue;
    }
    ++out.fits;
    const std::size_t r = incidence_rank(pts, degree);
    auto mismatch = [&](const std::string& why) {
      ++out.mismatches;
      if (out.first_mismatch.empty()) out.first_mismatch = why;
    };
    try {
      bool all_on = true;
      if (degree == 2) {
        const Conic c = tricurve::conic_through(std::span<const HomPoint>(pts));
        for (const auto& p : pts) all_on = all_on && c.contains(p);
      } else {
        const Cubic c = tricurve::cubic_through(std::span<const HomPoint>(pts));
        for (const auto& p : pts) all_on = all_on && c.contains(p);
      }
      ++out.fitted;
      if (r != n) mismatch("fitted although the rank over Q is " + std::to_string(r));
      if (!all_on) mismatch("fitted curve misses an input point");
    } catch (const tricurve::DegeneratePointSetError& e) {
      ++out.degenerate;
      if (r == n) mismatch("full-rank input reported as degenerate");
      if (e.rank() != r) mismatch("reported rank " + std::to_string(e.rank()) + ", rank over Q " + std::to_string(r));
      std::vector<HomPoint> subset;
      for (auto i : e.independent_subset()) subset.push_back(pts.at(i));
      if (subset.size() != r || incidence_rank(subset, degree) != r) mismatch("independent subset is not independent");
    }
  }
  return out;
}

}  // namespace oracle
