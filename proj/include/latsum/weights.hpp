#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "latsum/chain.hpp"
#include "latsum/errors.hpp"
#include "latsum/exact/scalar.hpp"

namespace latsum {

/// A Markovian weight scheme: W multiplies by f2 and V adds g2 each time a
/// chain is extended by a new maximum; f1 and g1 seed singleton chains.
///
/// Evaluations are memoized per argument. The cache is shared between
/// copies and guarded for concurrent readers; it never changes a result.
template <ScalarMode M>
class WeightSystem {
 public:
  using mode_type = M;
  using scalar_type = scalar_t<M>;
  using Unary = std::function<scalar_type(Index)>;
  using Binary = std::function<scalar_type(Index, Index)>;

  struct Functions {
    Unary f1;
    Binary f2;
    Unary g1;
    Binary g2;
  };

  WeightSystem(std::string name, M mode, Functions fns, bool memoize = true)
      : name_(std::move(name)),
        mode_(std::move(mode)),
        fns_(std::move(fns)),
        state_(std::make_shared<State>()),
        memoize_(memoize) {}

  const std::string& name() const noexcept { return name_; }
  const M& mode() const noexcept { return mode_; }

  scalar_type f1(Index j) const { return unary(0, j, fns_.f1, "f1"); }
  scalar_type g1(Index j) const { return unary(1, j, fns_.g1, "g1"); }

  scalar_type f2(Index i, Index j) const {
    state_->f2_calls.fetch_add(1, std::memory_order_relaxed);
    return binary(0, i, j, fns_.f2, "f2");
  }
  scalar_type g2(Index i, Index j) const { return binary(1, i, j, fns_.g2, "g2"); }

  /// Every f2 request, cached or not.
  std::uint64_t f2_calls() const noexcept { return state_->f2_calls.load(); }
  /// f2 requests that reached the underlying function (cache misses).
  std::uint64_t f2_evaluations() const noexcept { return state_->f2_evals.load(); }

  void reset_counters() const noexcept {
    state_->f2_calls = 0;
    state_->f2_evals = 0;
  }

 private:
  struct State {
    std::shared_mutex mu;
    std::map<Index, scalar_type> unary[2];
    std::map<std::pair<Index, Index>, scalar_type> binary[2];
    std::atomic<std::uint64_t> f2_calls{0};
    std::atomic<std::uint64_t> f2_evals{0};
  };

  scalar_type unary(int slot, Index j, const Unary& fn, const char* label) const {
    if (j < 1) throw ArgumentError(std::string(label) + " requires j >= 1, got " + std::to_string(j));
    if (!memoize_) return fn(j);
    {
      std::shared_lock lock(state_->mu);
      auto it = state_->unary[slot].find(j);
      if (it != state_->unary[slot].end()) return it->second;
    }
    scalar_type v = fn(j);
    std::unique_lock lock(state_->mu);
    state_->unary[slot].emplace(j, v);
    return v;
  }

  scalar_type binary(int slot, Index i, Index j, const Binary& fn, const char* label) const {
    if (i < 1 || i >= j)
      throw ArgumentError(std::string(label) + " requires 1 <= i < j, got (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    auto eval = [&] {
      if (slot == 0) state_->f2_evals.fetch_add(1, std::memory_order_relaxed);
      return fn(i, j);
    };
    if (!memoize_) return eval();
    const auto key = std::make_pair(i, j);
    {
      std::shared_lock lock(state_->mu);
      auto it = state_->binary[slot].find(key);
      if (it != state_->binary[slot].end()) return it->second;
    }
    scalar_type v = eval();
    std::unique_lock lock(state_->mu);
    state_->binary[slot].emplace(key, v);
    return v;
  }

  std::string name_;
  M mode_;
  Functions fns_;
  std::shared_ptr<State> state_;
  bool memoize_;
};

// ---------------------------------------------------------------------------
// The BCMV weights.

enum class Form { raw, reduced };

namespace detail {

inline BigRat frac(long n, long d) { return BigRat(mpz_class(n), mpz_class(d)); }

inline std::string with_arg(const char* den, const char* var, Index v) {
  return std::string(den) + " at " + var + " = " + std::to_string(v);
}

inline std::string with_args(const char* den, Index i, Index j) {
  return std::string(den) + " at (X, Y) = (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace detail

/// x-dependent subexpressions shared by the BCMV weights, computed once per mode.
template <ScalarMode M>
struct BcmvTerms {
  using S = scalar_t<M>;

  explicit BcmvTerms(const M& m)
      : mode(m), x(m.x()), x2(x * x), cube(x2 * x - x), five_x(S(BigRat(5)) * x) {}

  M mode;
  S x;
  S x2;    // x^2
  S cube;  // x^3 - x
  S five_x;
};

/// f1(X) = -12 X^2 (x - X) / (x^3 - x + X - X^3); reduced: -12 X^2 / (x^2 + xX + X^2 - 1).
template <ScalarMode M>
scalar_t<M> bcmv_f1(const BcmvTerms<M>& t, Index j, Form form = Form::reduced) {
  using S = scalar_t<M>;
  if (j < 1) throw ArgumentError("f1 requires j >= 1");
  const BigRat X(j);
  const S num = S(BigRat(-12) * X * X);
  if (form == Form::raw) {
    S den = t.cube + S(X - X * X * X);
    return checked_quotient(t.mode, num * (t.x - S(X)), den, detail::with_arg("x^3 - x + X - X^3", "X", j));
  }
  S den = t.x2 + t.x * S(X) + S(X * X - BigRat(1));
  return checked_quotient(t.mode, num, den, detail::with_arg("x^2 + x*X + X^2 - 1", "X", j));
}

/// f2(X,Y) = -12 Y (Y - X)(x - Y) / ((x - X)(x^3 - x + Y - Y^3));
/// reduced: -12 Y (Y - X) / ((x - X)(x^2 + xY + Y^2 - 1)).
template <ScalarMode M>
scalar_t<M> bcmv_f2(const BcmvTerms<M>& t, Index i, Index j, Form form = Form::reduced) {
  using S = scalar_t<M>;
  if (i < 1 || i >= j) throw ArgumentError("f2 requires 1 <= i < j");
  const BigRat X(i);
  const BigRat Y(j);
  const S shift = t.x - S(X);
  if (shift.is_zero()) throw PoleError(t.mode.where(), detail::with_args("x - X", i, j));
  const S num = S(BigRat(-12) * Y * (Y - X));
  if (form == Form::raw) {
    S den = shift * (t.cube + S(Y - Y * Y * Y));
    return checked_quotient(t.mode, num * (t.x - S(Y)), den,
                            detail::with_args("(x - X)(x^3 - x + Y - Y^3)", i, j));
  }
  S den = shift * (t.x2 + t.x * S(Y) + S(Y * Y - BigRat(1)));
  return checked_quotient(t.mode, num, den, detail::with_args("(x - X)(x^2 + x*Y + Y^2 - 1)", i, j));
}

/// g1(X) = -28x^2/9 + 29/45 + 274X^2/45 - (x^3 - x)/(6X)
///         + (x^3 - x)(x + X)/(5X^2 + 5xX + 5x^2 - 5) - 13xX/9
template <ScalarMode M>
scalar_t<M> bcmv_g1(const BcmvTerms<M>& t, Index j) {
  using S = scalar_t<M>;
  using detail::frac;
  if (j < 1) throw ArgumentError("g1 requires j >= 1");
  const BigRat X(j);
  S out = S(frac(-28, 9)) * t.x2 + S(frac(29, 45) + frac(274, 45) * X * X);
  out = out - checked_quotient(t.mode, t.cube, S(BigRat(6) * X), detail::with_arg("6X", "X", j));
  S den = S(BigRat(5)) * t.x2 + t.five_x * S(X) + S(BigRat(5) * X * X - BigRat(5));
  out = out + checked_quotient(t.mode, t.cube * (t.x + S(X)), den,
                               detail::with_arg("5X^2 + 5xX + 5x^2 - 5", "X", j));
  out = out - S(frac(13, 9) * X) * t.x;
  return out;
}

/// g2(X,Y) = (5x^3/18 - 5x/18)/Y + 38Y^2/15 + (x^3 - x)(x + Y)/(5Y^2 + 5xY + 5x^2 - 5)
///           - 13XY/9 - 13(Y - X)x/9 + 49/45
template <ScalarMode M>
scalar_t<M> bcmv_g2(const BcmvTerms<M>& t, Index i, Index j) {
  using S = scalar_t<M>;
  using detail::frac;
  if (i < 1 || i >= j) throw ArgumentError("g2 requires 1 <= i < j");
  const BigRat X(i);
  const BigRat Y(j);
  S out = checked_quotient(t.mode, S(frac(5, 18)) * t.cube, S(Y), detail::with_args("Y", i, j));
  S den = S(BigRat(5)) * t.x2 + t.five_x * S(Y) + S(BigRat(5) * Y * Y - BigRat(5));
  out = out + checked_quotient(t.mode, t.cube * (t.x + S(Y)), den,
                               detail::with_args("5Y^2 + 5xY + 5x^2 - 5", i, j));
  out = out + S(frac(38, 15) * Y * Y - frac(13, 9) * X * Y + frac(49, 45));
  out = out - S(frac(13, 9) * (Y - X)) * t.x;
  return out;
}

template <ScalarMode M>
scalar_t<M> bcmv_f1(const M& mode, Index j, Form form = Form::reduced) {
  return bcmv_f1(BcmvTerms<M>(mode), j, form);
}
template <ScalarMode M>
scalar_t<M> bcmv_f2(const M& mode, Index i, Index j, Form form = Form::reduced) {
  return bcmv_f2(BcmvTerms<M>(mode), i, j, form);
}
template <ScalarMode M>
scalar_t<M> bcmv_g1(const M& mode, Index j) {
  return bcmv_g1(BcmvTerms<M>(mode), j);
}
template <ScalarMode M>
scalar_t<M> bcmv_g2(const M& mode, Index i, Index j) {
  return bcmv_g2(BcmvTerms<M>(mode), i, j);
}

/// The BCMV instance as a weight system, named "bcmv".
template <ScalarMode M>
WeightSystem<M> make_bcmv(const M& mode, Form form = Form::reduced, bool memoize = true) {
  auto t = std::make_shared<const BcmvTerms<M>>(mode);
  typename WeightSystem<M>::Functions fns{
      [t, form](Index j) { return bcmv_f1(*t, j, form); },
      [t, form](Index i, Index j) { return bcmv_f2(*t, i, j, form); },
      [t](Index j) { return bcmv_g1(*t, j); },
      [t](Index i, Index j) { return bcmv_g2(*t, i, j); },
  };
  return WeightSystem<M>("bcmv", mode, std::move(fns), memoize);
}

/// N(x; j_1..j_q) from its closed product formula:
/// (-12)^q j_1...j_q * j_1 (j_2 - j_1)...(j_q - j_{q-1}) (x - j_q)
///   / prod_k (x^3 - x + j_k - j_k^3).
template <ScalarMode M>
scalar_t<M> bcmv_product_N(const M& mode, const Chain& chain) {
  using S = scalar_t<M>;
  const S x = mode.x();
  mpz_class coeff = 1;
  Index prev = 0;
  for (Index j : chain.entries()) {
    coeff *= -12;
    coeff *= mpz_class(static_cast<long>(j));
    coeff *= mpz_class(static_cast<long>(j - prev));
    prev = j;
  }
  S den = S(BigRat(1));
  const S cube = x * x * x - x;
  for (Index j : chain.entries()) {
    mpz_class jj(static_cast<long>(j));
    den = den * (cube + S(BigRat(mpz_class(jj - jj * jj * jj))));
  }
  S num = S(BigRat(coeff)) * (x - S(BigRat(chain.max())));
  return checked_quotient(mode, num, den, "prod_k (x^3 - x + j_k - j_k^3) for chain " + chain.str());
}

/// G(x; j_1..j_q) from its direct multi-term formula, all displayed terms
/// read as one sum.
template <ScalarMode M>
scalar_t<M> bcmv_direct_G(const M& mode, const Chain& chain) {
  using S = scalar_t<M>;
  using detail::frac;
  const S x = mode.x();
  const S cube = x * x * x - x;
  const auto q = static_cast<long>(chain.size());
  const S j1 = S(BigRat(chain.front()));

  S out = S(frac(-28, 9)) * x * x + S(frac(49, 45)) * S(BigRat(q)) + S(frac(32, 9)) * j1 * j1 -
          S(frac(4, 9));
  out = out - S(frac(4, 9)) * checked_quotient(mode, cube, j1, "j_1");

  S reciprocals, squares, fractions, products;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const S j = S(BigRat(chain[k]));
    reciprocals = reciprocals + S(BigRat(mpz_class(1), mpz_class(static_cast<long>(chain[k]))));
    squares = squares + j * j;
    fractions = fractions + checked_quotient(mode, x + j, x * x + j * j + x * j - S(BigRat(1)),
                                             "x^2 + j^2 + x*j - 1 at j = " + std::to_string(chain[k]));
    const S next = k + 1 < chain.size() ? S(BigRat(chain[k + 1])) : x;
    products = products + j * next;
  }
  out = out + S(frac(5, 18)) * cube * reciprocals;
  out = out + S(frac(38, 15)) * squares;
  out = out + checked_quotient(mode, cube, S(BigRat(5)), "5") * fractions;
  out = out - S(frac(13, 9)) * products;
  return out;
}

}  // namespace latsum
