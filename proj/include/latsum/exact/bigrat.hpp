#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "latsum/errors.hpp"

namespace latsum {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator (zero is 0/1).
class BigRat {
 public:
  BigRat() = default;

  template <std::signed_integral I>
  BigRat(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral U>
  BigRat(U v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  BigRat(const mpz_class& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  BigRat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero(num.get_str() + "/0");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
  }

  explicit BigRat(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DivisionByZero();
    q_.canonicalize();
  }

  /// Parses "a" or "a/b" (optional leading '-', decimal digits only).
  /// Non-reduced input such as "4/6" is accepted and reduced.
  static BigRat parse(std::string_view text) {
    auto bad = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };
    auto integer = [&](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw bad();
      for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw bad();
      std::string digits(s[0] == '+' ? s.substr(1) : s);
      return mpz_class(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRat(integer(text, true));
    mpz_class den = integer(text.substr(slash + 1), false);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return BigRat(integer(text.substr(0, slash), true), den);
  }

  const mpz_class& num() const noexcept { return q_.get_num(); }
  const mpz_class& den() const noexcept { return q_.get_den(); }
  const mpq_class& mpq() const noexcept { return q_; }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_.get_num() == 1 && q_.get_den() == 1; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  /// Canonical text: "a/b", or "a" when the denominator is 1.
  std::string str() const { return q_.get_str(10); }

  BigRat operator-() const { return BigRat(mpq_class(-q_), Trusted{}); }

  BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
  BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
  BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DivisionByZero(str() + " / 0");
    q_ /= o.q_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

 private:
  struct Trusted {};
  BigRat(mpq_class q, Trusted) : q_(std::move(q)) {}

  mpq_class q_;
};

}  // namespace latsum
