#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "latsum/exact/bigrat.hpp"
#include "latsum/exact/ratfunc.hpp"

namespace latsum {

/// Exact field element usable by the summation engines.
template <class S>
concept ExactScalar = std::regular<S> && std::constructible_from<S, BigRat> &&
                      requires(const S& a, const S& b) {
                        { a + b } -> std::convertible_to<S>;
                        { a - b } -> std::convertible_to<S>;
                        { a * b } -> std::convertible_to<S>;
                        { a / b } -> std::convertible_to<S>;
                        { -a } -> std::convertible_to<S>;
                        { a.is_zero() } -> std::convertible_to<bool>;
                      };

/// Computation with x replaced by a fixed rational x0 before any arithmetic.
struct FixedX {
  using scalar_type = BigRat;
  static constexpr std::string_view name = "fixed";

  BigRat x0;

  BigRat x() const { return x0; }
  std::string where() const { return x0.str(); }
};

/// Computation with x kept as a formal variable.
struct SymbolicX {
  using scalar_type = RatFunc;
  static constexpr std::string_view name = "symbolic";

  RatFunc x() const { return RatFunc::x(); }
  std::string where() const { return "x (symbolic)"; }
};

template <class M>
concept ScalarMode = ExactScalar<typename M::scalar_type> && requires(const M& m) {
  { m.x() } -> std::convertible_to<typename M::scalar_type>;
  { m.where() } -> std::convertible_to<std::string>;
  { M::name } -> std::convertible_to<std::string_view>;
};

template <ScalarMode M>
using scalar_t = typename M::scalar_type;

inline bool is_symbolic(const FixedX&) { return false; }
inline bool is_symbolic(const SymbolicX&) { return true; }

/// Running exact sum of scalars.
template <ExactScalar S>
class SumAccumulator {
 public:
  void add(const S& t) { acc_ = acc_ + t; }
  S value() const { return acc_; }

 private:
  S acc_;
};

/// Rational sums defer reduction to lowest terms until value() is read; the
/// running denominator stays the lcm of the addends' denominators, so each
/// step costs one gcd instead of two.
template <>
class SumAccumulator<BigRat> {
 public:
  void add(const BigRat& t) {
    if (t.is_zero()) return;
    mpz_gcd(g_.get_mpz_t(), den_.get_mpz_t(), t.den().get_mpz_t());
    if (g_ == t.den()) {
      mpz_divexact(q_.get_mpz_t(), den_.get_mpz_t(), g_.get_mpz_t());
      mpz_addmul(num_.get_mpz_t(), q_.get_mpz_t(), t.num().get_mpz_t());
      return;
    }
    mpz_divexact(q_.get_mpz_t(), den_.get_mpz_t(), g_.get_mpz_t());
    mpz_divexact(g_.get_mpz_t(), t.den().get_mpz_t(), g_.get_mpz_t());
    num_ *= g_;
    mpz_addmul(num_.get_mpz_t(), q_.get_mpz_t(), t.num().get_mpz_t());
    den_ *= g_;
  }

  BigRat value() const { return BigRat(num_, den_); }

 private:
  mpz_class num_ = 0;
  mpz_class den_ = 1;
  mpz_class g_, q_;
};

/// num/den, reporting a vanishing denominator as a pole at the mode's x.
template <ScalarMode M>
scalar_t<M> checked_quotient(const M& mode, const scalar_t<M>& num, const scalar_t<M>& den,
                             std::string_view what) {
  if (den.is_zero()) throw PoleError(mode.where(), std::string(what));
  return num / den;
}

}  // namespace latsum
