#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "latsum/errors.hpp"
#include "latsum/exact/bigrat.hpp"
#include "latsum/exact/poly.hpp"

namespace latsum {

/// Rational function num/den in x over Q, in canonical form: coprime,
/// den monic, zero represented as 0/1. Equal values are field-wise identical.
class RatFunc {
 public:
  RatFunc() : den_(BigRat(1)) {}

  RatFunc(const BigRat& c) : num_(c), den_(BigRat(1)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I>
  RatFunc(I c) : RatFunc(BigRat(c)) {}  // NOLINT(google-explicit-constructor)

  RatFunc(Poly p) : num_(std::move(p)), den_(BigRat(1)) {}  // NOLINT(google-explicit-constructor)

  /// Reduces num/den to canonical form. Throws DivisionByZero when den = 0.
  static RatFunc normalize(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return {};
    if (!den.is_constant()) {
      Poly g = gcd(num, den);
      if (!g.is_one()) {
        num = num.exact_div(g);
        den = den.exact_div(g);
      }
    }
    return from_coprime(std::move(num), std::move(den));
  }

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  /// Exact value at x0. Throws PoleError when the (reduced) denominator vanishes.
  BigRat eval(const BigRat& x0) const {
    BigRat d = den_.eval(x0);
    if (d.is_zero()) throw PoleError(x0.str(), den_.pretty());
    return num_.eval(x0) / d;
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, Trusted{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, Poly(BigRat(1)), Trusted{});
    // Cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den).
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n1 = g1.is_one() ? a.num_ : a.num_.exact_div(g1);
    Poly d2 = g1.is_one() ? b.den_ : b.den_.exact_div(g1);
    Poly n2 = g2.is_one() ? b.num_ : b.num_.exact_div(g2);
    Poly d1 = g2.is_one() ? a.den_ : a.den_.exact_div(g2);
    return from_coprime(n1 * n2, d1 * d2);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function divided by zero");
    return a * RatFunc(b.den_, b.num_, Trusted{}).rescaled();
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string pretty() const {
    if (den_.is_one()) return num_.pretty();
    return "(" + num_.pretty() + ")/(" + den_.pretty() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.pretty(); }

 private:
  struct Trusted {};
  RatFunc(Poly n, Poly d, Trusted) : num_(std::move(n)), den_(std::move(d)) {}

  // Coprime input with arbitrary scaling; makes den monic.
  static RatFunc from_coprime(Poly num, Poly den) {
    if (num.is_zero()) return {};
    BigRat l = den.lead();
    if (!l.is_one()) {
      BigRat inv = BigRat(1) / l;
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    return RatFunc(std::move(num), std::move(den), Trusted{});
  }

  // Swapped num/den pair that is coprime but not yet monic.
  RatFunc rescaled() const { return from_coprime(num_, den_); }

  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    auto combine = [&](const Poly& x, const Poly& y) { return subtract ? x - y : x + y; };
    if (a.den_ == b.den_) {
      Poly n = combine(a.num_, b.num_);
      if (a.den_.is_one()) return RatFunc(std::move(n), a.den_, Trusted{});
      return normalize(std::move(n), a.den_);
    }
    // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
      Poly n = combine(a.num_ * b.den_, b.num_ * a.den_);
      return from_coprime(std::move(n), a.den_ * b.den_);
    }
    Poly bq = a.den_.exact_div(g);
    Poly dq = b.den_.exact_div(g);
    Poly n = combine(a.num_ * dq, b.num_ * bq);
    if (n.is_zero()) return {};
    Poly h = gcd(n, g);
    Poly den = a.den_ * dq;
    if (!h.is_one()) {
      n = n.exact_div(h);
      den = den.exact_div(h);
    }
    return from_coprime(std::move(n), std::move(den));
  }

  Poly num_;
  Poly den_;
};

}  // namespace latsum
