#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latsum/exact/bigrat.hpp"

namespace latsum {

using IntVector = std::vector<mpz_class>;
using RatMatrix = std::vector<std::vector<BigRat>>;  // row-major

/// Divides out the gcd of the entries and makes the last nonzero entry
/// positive. The zero vector is returned unchanged.
inline void make_primitive(IntVector& v) {
  mpz_class g = 0;
  for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 0) return;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it != 0) {
      if (*it < 0) g = -g;
      break;
    }
  }
  for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators of a rational vector into a primitive integer vector
/// with the same direction (up to sign).
inline IntVector clear_denominators(const std::vector<BigRat>& v) {
  mpz_class l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.den().get_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& e : v) {
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), l.get_mpz_t(), e.den().get_mpz_t());
    out.push_back(t * e.num());
  }
  make_primitive(out);
  return out;
}

/// Row echelon form of an integer matrix by fraction-free (Bareiss)
/// elimination. Every division is exact; entries stay integral throughout.
struct EchelonForm {
  std::vector<IntVector> rows;       // the nonzero rows, in echelon order
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t cols = 0;
};

inline EchelonForm bareiss_echelon(std::vector<IntVector> m, std::size_t cols) {
  EchelonForm out;
  out.cols = cols;
  mpz_class prev = 1;
  std::size_t r = 0;
  mpz_class t;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const mpz_class& pv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      IntVector& row = m[i];
      const mpz_class lead = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        row[j] *= pv;
        if (lead != 0) {
          t = lead * m[r][j];
          row[j] -= t;
        }
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = pv;
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

/// Basis of the right nullspace {v : A v = 0} of an exact rational matrix,
/// one primitive integer vector per free column, ordered by free column.
inline std::vector<IntVector> nullspace(const RatMatrix& a, std::size_t cols) {
  std::vector<IntVector> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    m.push_back(clear_denominators(row));
  }
  EchelonForm ef = bareiss_echelon(std::move(m), cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : ef.pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRat> v(cols);
    v[f] = BigRat(1);
    for (std::size_t k = ef.rows.size(); k-- > 0;) {
      const auto pc = ef.pivots[k];
      const IntVector& row = ef.rows[k];
      mpq_class acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (!v[j].is_zero() && row[j] != 0) acc += mpq_class(row[j]) * v[j].mpq();
      v[pc] = BigRat(mpq_class(-acc / mpq_class(row[pc])));
    }
    IntVector iv = clear_denominators(v);
    for (const auto& row : a) {
      mpq_class dot = 0;
      for (std::size_t j = 0; j < cols; ++j)
        if (iv[j] != 0) dot += row[j].mpq() * iv[j];
      if (dot != 0) throw std::logic_error("nullspace vector fails A v = 0");
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace latsum
