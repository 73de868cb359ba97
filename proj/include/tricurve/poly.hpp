#pragma once

// Sparse polynomials in three variables over the rationals, and
// homogeneous forms of fixed degree stored as primitive integer
// coefficient vectors in lexicographic monomial order.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricurve/kernel.hpp"
#include "tricurve/rational.hpp"

namespace tricurve {

using Exponent = std::array<int, 3>;

class Poly {
 public:
  Poly() = default;

  static Poly constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[{0, 0, 0}] = c;
    return p;
  }

  static Poly variable(std::size_t i) {
    Poly p;
    Exponent e{0, 0, 0};
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  static Poly linear(const Rational& u, const Rational& v, const Rational& w) {
    Poly p;
    p.add_term({1, 0, 0}, u);
    p.add_term({0, 1, 0}, v);
    p.add_term({0, 0, 1}, w);
    return p;
  }

  static Poly linear(const HomLine& l) { return linear(Rational(l[0]), Rational(l[1]), Rational(l[2])); }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return out;
  }

  friend Poly operator*(const Rational& k, const Poly& a) {
    Poly out;
    if (k == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_[e] = k * c;
    return out;
  }

  Poly derivative(std::size_t var) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      d[var] -= 1;
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  Rational evaluate(const Vec3& v) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational m = c;
      for (std::size_t i = 0; i < 3; ++i) {
        for (int k = 0; k < e[i]; ++k) m *= v[i];
      }
      acc += m;
    }
    return acc;
  }

  /// Replaces each variable i by sub[i].
  Poly substitute(const std::array<Poly, 3>& sub) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      Poly m = constant(c);
      for (std::size_t i = 0; i < 3; ++i) {
        for (int k = 0; k < e[i]; ++k) m = m * sub[i];
      }
      out += m;
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Exponent, Rational> terms_;
};

/// Substitutes the linear change of variables v -> M v.
inline Poly substitute_linear(const Poly& p, const Matrix3& m) {
  return p.substitute({Poly::linear(m[0][0], m[0][1], m[0][2]), Poly::linear(m[1][0], m[1][1], m[1][2]),
                       Poly::linear(m[2][0], m[2][1], m[2][2])});
}

template <int D>
inline constexpr std::size_t monomial_count = static_cast<std::size_t>((D + 1) * (D + 2) / 2);

/// Degree-D monomials in lexicographic order: x^D, x^(D-1) y, ..., z^D.
template <int D>
constexpr std::array<Exponent, monomial_count<D>> monomials() {
  std::array<Exponent, monomial_count<D>> out{};
  std::size_t k = 0;
  for (int i = D; i >= 0; --i) {
    for (int j = D - i; j >= 0; --j) out[k++] = {i, j, D - i - j};
  }
  return out;
}

/// Values of every degree-D monomial at p.
template <int D>
std::array<Integer, monomial_count<D>> monomial_row(const HomPoint& p) {
  std::array<Integer, monomial_count<D>> row;
  const auto mons = monomials<D>();
  for (std::size_t k = 0; k < row.size(); ++k) {
    Integer v = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      for (int e = 0; e < mons[k][i]; ++e) v *= p[i];
    }
    row[k] = std::move(v);
  }
  return row;
}

/// Nonzero homogeneous form of degree D, up to scale.
template <int D>
class TernaryForm {
 public:
  static constexpr std::size_t kSize = monomial_count<D>;
  using Coefficients = std::array<Integer, kSize>;

  explicit TernaryForm(const Coefficients& c) : c_(primitive(c)) {}
  explicit TernaryForm(const std::array<Rational, kSize>& c) : c_(primitive(c)) {}

  static TernaryForm from_poly(const Poly& p) {
    std::array<Rational, kSize> c;
    const auto mons = monomials<D>();
    for (std::size_t k = 0; k < kSize; ++k) c[k] = p.coefficient(mons[k]);
    for (const auto& [e, v] : p.terms()) {
      if (e[0] + e[1] + e[2] != D) throw Error(ErrorKind::ParseError, "polynomial is not homogeneous of degree " + std::to_string(D));
    }
    return TernaryForm(c);
  }

  Poly to_poly() const {
    Poly p;
    const auto mons = monomials<D>();
    for (std::size_t k = 0; k < kSize; ++k) p.add_term(mons[k], Rational(c_[k]));
    return p;
  }

  const Coefficients& coefficients() const { return c_; }

  Integer evaluate(const HomPoint& p) const {
    const auto row = monomial_row<D>(p);
    Integer acc = 0;
    for (std::size_t k = 0; k < kSize; ++k) acc += c_[k] * row[k];
    return acc;
  }

  bool contains(const HomPoint& p) const { return evaluate(p) == 0; }

  /// Comma-separated decimal coefficients.
  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < kSize; ++k) {
      if (k) s += ",";
      s += c_[k].get_str();
    }
    return s;
  }

  friend bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.c_ == b.c_; }

 private:
  Coefficients c_;
};

using Cubic = TernaryForm<3>;

}  // namespace tricurve
