#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latsum/errors.hpp"
#include "latsum/exact/bigrat.hpp"

namespace latsum {

/// Degree of a polynomial; std::nullopt stands for the zero polynomial
/// (and orders below every real degree).
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals, ascending powers.
/// The coefficient list never ends in a zero; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;

  Poly(const BigRat& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }

  template <std::integral I>
  Poly(I c) : Poly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)

  explicit Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The monomial c * x^k.
  static Poly monomial(const BigRat& c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<BigRat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }

  static Poly x() { return monomial(BigRat(1), 1); }

  Degree degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }

  /// Leading coefficient; zero for the zero polynomial.
  BigRat lead() const { return c_.empty() ? BigRat() : c_.back(); }

  BigRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRat(); }
  std::span<const BigRat> coeffs() const noexcept { return c_; }

  BigRat eval(const BigRat& x0) const {
    BigRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x0;
      acc += *it;
    }
    return acc;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].mpq() * b.c_[j].mpq();
    }
    std::vector<BigRat> out;
    out.reserve(acc.size());
    for (auto& q : acc) out.emplace_back(std::move(q));
    return Poly(std::move(out));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const BigRat& s) const {
    if (s.is_zero()) return {};
    Poly out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
  }

  /// Leading coefficient made 1; zero stays zero.
  Poly monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return scaled(BigRat(1) / lead());
  }

  /// Euclidean division over Q: returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
    if (c_.size() < d.c_.size()) return {Poly(), *this};
    std::vector<BigRat> rem = c_;
    std::vector<BigRat> quo(c_.size() - d.c_.size() + 1);
    const BigRat inv = BigRat(1) / d.lead();
    const std::size_t dn = d.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      BigRat t = rem[k + dn] * inv;
      if (t.is_zero()) continue;
      for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= t * d.c_[j];
      quo[k] = std::move(t);
    }
    rem.resize(dn);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// Quotient of a division known to be exact.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw ArgumentError("inexact polynomial division");
    return q;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.pretty(); }

  /// Human-readable rendering in the given variable, highest power first.
  std::string pretty(char var = 'x') const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const BigRat& c = c_[k];
      if (c.is_zero()) continue;
      BigRat mag = c.sign() < 0 ? -c : c;
      if (s.empty()) {
        if (c.sign() < 0) s += "-";
      } else {
        s += c.sign() < 0 ? " - " : " + ";
      }
      bool unit = mag.is_one() && k > 0;
      if (!unit) s += mag.str();
      if (k > 0) {
        if (!unit) s += "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<BigRat> c_;
};

namespace detail {

using ZPoly = std::vector<mpz_class>;  // ascending, no trailing zeros

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  mpz_class g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators and removes content; leading coefficient positive.
inline ZPoly primitive_part(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class v;
    mpz_divexact(v.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    out.push_back(v * c.num());
  }
  make_primitive(out);
  return out;
}

/// Pseudo-remainder of a by b (deg a >= deg b, b nonzero), in place on a.
inline void pseudo_rem(ZPoly& a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  mpz_class t;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class la = a.back();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    mpz_class ma = lb / g;
    mpz_class mb = la / g;
    for (auto& c : a) c *= ma;
    for (std::size_t j = 0; j <= db; ++j) {
      t = mb * b[j];
      a[shift + j] -= t;
    }
    ztrim(a);
  }
}

}  // namespace detail

/// Monic greatest common divisor over Q (zero when both inputs are zero).
/// Computed by the primitive polynomial remainder sequence over Z.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(BigRat(1));
  detail::ZPoly u = detail::primitive_part(a);
  detail::ZPoly v = detail::primitive_part(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return Poly(BigRat(1));
    detail::pseudo_rem(u, v);
    detail::make_primitive(u);
    std::swap(u, v);
  }
  std::vector<BigRat> out;
  out.reserve(u.size());
  for (auto& c : u) out.emplace_back(c, u.back());
  return Poly(std::move(out));
}

}  // namespace latsum
