#pragma once

// Exact scalars. Integer and Rational are GMP's mpz_class / mpq_class;
// mpq_class keeps every value reduced with a positive denominator.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "tricurve/errors.hpp"

namespace tricurve {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Parses "n" or "p/q" (optional leading sign, decimal digits only).
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer n(strip_plus(num), 10);
  Integer d(strip_plus(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::size_t bit_length(const Integer& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

namespace stats {
inline void record(const Integer& v);
}  // namespace stats

/// Scales a nonzero rational vector to coprime integers with the first
/// nonzero entry positive.
template <std::size_t N>
std::array<Integer, N> primitive(const std::array<Rational, N>& v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::array<Integer, N> out;
  Integer g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = v[i].get_num() * (den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) throw Error(ErrorKind::ZeroVector, "all coordinates are zero");
  int sign = 0;
  for (const auto& x : out) {
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  }
  if (sign < 0) g = -g;
  for (auto& x : out) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    stats::record(x);
  }
  return out;
}

template <std::size_t N>
std::array<Integer, N> primitive(std::array<Integer, N> v) {
  Integer g = 0;
  int sign = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sign == 0) sign = sgn(x);
  }
  if (g == 0) throw Error(ErrorKind::ZeroVector, "all coordinates are zero");
  if (sign < 0) g = -g;
  for (auto& x : v) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    stats::record(x);
  }
  return v;
}

namespace stats {

/// Largest integer (in bits) seen by canonicalization and elimination on
/// this thread since the last reset.
inline std::size_t& bit_watermark() {
  thread_local std::size_t mark = 0;
  return mark;
}

inline void record(const Integer& v) {
  auto& mark = bit_watermark();
  mark = std::max(mark, bit_length(v));
}

inline void reset() { bit_watermark() = 0; }

}  // namespace stats

}  // namespace tricurve
