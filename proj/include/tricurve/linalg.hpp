#pragma once

// Fraction-free (Bareiss) row echelon form over the integers, with rank,
// pivot bookkeeping and integer nullspace bases.

#include <cstddef>
#include <utility>
#include <vector>

#include "tricurve/rational.hpp"

namespace tricurve {

using IntMatrix = std::vector<std::vector<Integer>>;

struct Echelon {
  IntMatrix rows;                       // echelon form; rows [0, rank) are nonzero
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // column of each pivot
  std::vector<std::size_t> pivot_rows;  // original row index that supplied each pivot
};

/// Bareiss elimination. Every division is exact; intermediate entries are
/// minors of the input.
inline Echelon echelon(IntMatrix m) {
  Echelon out;
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows ? m[0].size() : 0;
  std::vector<std::size_t> origin(nrows);
  for (std::size_t i = 0; i < nrows; ++i) origin[i] = i;

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    std::swap(origin[p], origin[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        stats::record(v);
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivot_cols.push_back(c);
    out.pivot_rows.push_back(origin[r]);
    ++r;
  }
  out.rank = r;
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const IntMatrix& m) { return echelon(m).rank; }

/// Basis of the right nullspace, one primitive integer vector per free column.
inline std::vector<std::vector<Integer>> nullspace(const Echelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(ncols, Rational(0));
    x[free] = 1;
    for (std::size_t k = e.rank; k-- > 0;) {
      const auto& row = e.rows[k];
      const std::size_t pc = e.pivot_cols[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < ncols; ++j) {
        if (row[j] != 0 && x[j] != 0) acc += row[j] * x[j];
      }
      x[pc] = -acc / row[pc];
    }
    Integer den = 1;
    for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> iv(ncols);
    Integer g = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
      iv[j] = x[j].get_num() * (den / x[j].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
    }
    for (auto& v : iv) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(iv));
  }
  return basis;
}

inline std::vector<std::vector<Integer>> nullspace(const IntMatrix& m, std::size_t ncols) {
  return nullspace(echelon(m), ncols);
}

}  // namespace tricurve
