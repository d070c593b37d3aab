#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "latsum/dp.hpp"
#include "latsum/linalg.hpp"
#include "latsum/recguess.hpp"
#include "latsum/serialize.hpp"

using namespace latsum;

namespace {

BigRat q(long n, long d = 1) { return BigRat(mpz_class(n), mpz_class(d)); }

Poly P(std::initializer_list<long> c) {
  std::vector<BigRat> v;
  for (long k : c) v.emplace_back(k);
  return Poly(std::move(v));
}

std::vector<BigRat> fibonacci(int n, long a = 1, long b = 1) {
  std::vector<BigRat> out{q(a), q(b)};
  while (static_cast<int>(out.size()) < n) out.push_back(out[out.size() - 1] + out[out.size() - 2]);
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<BigRat> cubic(int n) {
  std::vector<BigRat> out;
  for (long p = 1; p <= n; ++p) out.push_back(q(p * (p + 1) * (p + 1)));
  return out;
}

RecurrenceCandidate fib_candidate() { return make_candidate({P({-1}), P({-1}), P({1})}); }

}  // namespace

TEST(Guess, Fibonacci) {
  auto c = guess(fibonacci(20), GuessOptions{2, 0, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, fib_candidate());
  EXPECT_EQ(c->window_last, 8);
}

TEST(Guess, CubicIsOrderOne) {
  auto c = guess(cubic(20), GuessOptions{1, 3, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order(), 1u);
  // The minimal fit has degree 2; the degree-3 form (n+1)(n+2)^2 u_n - n(n+1)^2 u_{n+1}
  // is the same recurrence times (n + 1).
  EXPECT_EQ(c->degree(), Degree(2));
  auto scaled = make_candidate({c->coeffs[0] * P({1, 1}), c->coeffs[1] * P({1, 1})});
  auto textbook = make_candidate({P({1, 1}) * P({2, 1}) * P({2, 1}), P({0, -1}) * P({1, 1}) * P({1, 1})});
  EXPECT_EQ(scaled, textbook);
}

TEST(Guess, MinimalOrderWithinBounds) {
  auto c = guess(cubic(30), GuessOptions{2, 3, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order(), 1u);
}

TEST(Guess, AllZeroAndTooShort) {
  EXPECT_FALSE(guess(std::vector<BigRat>(20), GuessOptions{2, 0, 5}));
  try {
    guess(fibonacci(10), GuessOptions{2, 2, 5});
    FAIL();
  } catch (const InsufficientTerms& e) {
    EXPECT_NE(std::string(e.what()).find("16"), std::string::npos) << e.what();
  }
}

TEST(Guess, NoFitReturnsNone) {
  std::vector<BigRat> primes;
  for (long n = 2; primes.size() < 30; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    if (prime) primes.push_back(q(n));
  }
  EXPECT_FALSE(guess(primes, GuessOptions{2, 1, 5}));
}

TEST(Verify, Examples) {
  EXPECT_FALSE(verify(fib_candidate(), fibonacci(100)));
  auto lucas = fibonacci(40, 2, 1);
  lucas[16] += q(1);  // u_17
  // equations n = 15, 16, 17 touch u_17; the first is n = 15
  EXPECT_EQ(verify(fib_candidate(), lucas), Index(15));
  EXPECT_THROW(verify(fib_candidate(), fibonacci(2)), ArgumentError);
}

TEST(Extend, Examples) {
  EXPECT_EQ(extend(fib_candidate(), fibonacci(2), 10), fibonacci(10));
  auto c = guess(cubic(20), GuessOptions{1, 3, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ(extend(*c, std::vector<BigRat>{q(4)}, 5), cubic(5));
  EXPECT_THROW(extend(fib_candidate(), fibonacci(1), 10), ArgumentError);
}

TEST(Extend, SingularLeadingCoefficient) {
  auto c = make_candidate({P({-1}), P({-3, 1})});  // (n - 3) u_{n+1} = u_n
  try {
    extend(c, std::vector<BigRat>{q(1)}, 10);
    FAIL();
  } catch (const SingularLeadingCoefficient& e) {
    EXPECT_EQ(e.n(), 3);
  }
}

TEST(Normalize, CanonicalRepresentative) {
  auto a = make_candidate({P({2, 4}), P({-6})});
  auto b = make_candidate({Poly(std::vector<BigRat>{q(-1, 3), q(-2, 3)}), P({1})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.coeffs[1], P({3}));
  EXPECT_EQ(a.coeffs[0], P({-1, -2}));
  EXPECT_THROW(make_candidate({P({1}), Poly()}), ArgumentError);
  EXPECT_THROW(make_candidate({P({1})}), ArgumentError);
}

TEST(GuessProperty, SoundAndRoundTrips) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    // u_{n+1} = (a n + b) u_n + c u_{n-1}, with nonzero start
    const long a = small(rng), b = small(rng), c = small(rng);
    std::vector<BigRat> seq{q(1), q(small(rng))};
    for (long n = 2; seq.size() < 30; ++n) seq.push_back(q(a * n + b) * seq.back() + q(c) * seq[seq.size() - 2]);
    auto cand = guess(seq, GuessOptions{2, 1, 5});
    if (!cand) {
      ADD_FAILURE() << "no fit for a=" << a << " b=" << b << " c=" << c;
      continue;
    }
    EXPECT_FALSE(verify(*cand, seq));
    const auto r = cand->order();
    try {
      EXPECT_EQ(extend(*cand, std::span(seq).first(r), 30), seq);
    } catch (const SingularLeadingCoefficient&) {
    }
  }
}

TEST(GuessProperty, JsonRoundTrip) {
  auto c = guess(cubic(20), GuessOptions{1, 3, 5});
  ASSERT_TRUE(c);
  auto back = candidate_from_json(to_json(*c));
  EXPECT_EQ(back, *c);
  EXPECT_EQ(back.window_last, c->window_last);
}

TEST(Guess, DSequenceAtSevenThirds) {
  auto ws = make_bcmv(FixedX{q(7, 3)});
  auto b = dp_b(ws, 260);
  auto d = dp_d<FixedX>(ws, 260, b);
  std::vector<BigRat> first(d.begin(), d.begin() + 60);
  auto c = guess(first, GuessOptions{2, 16, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order(), 2u);
  EXPECT_FALSE(verify(*c, d));
}

TEST(Nullspace, Examples) {
  RatMatrix a{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}};
  auto ns = nullspace(a, 3);
  ASSERT_EQ(ns.size(), 2u);
  EXPECT_EQ(ns[0], (IntVector{-2, 1, 0}));
  EXPECT_EQ(ns[1], (IntVector{-3, 0, 1}));
  EXPECT_TRUE(nullspace(RatMatrix{{q(1), q(0)}, {q(0), q(1, 2)}}, 2).empty());
}

TEST(NullspaceProperty, RandomRankDeficient) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> e(-5, 5), d(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 6;
    RatMatrix a;
    for (int r = 0; r < 3; ++r) {
      std::vector<BigRat> row;
      for (std::size_t c = 0; c < cols; ++c) row.push_back(q(e(rng), d(rng)));
      a.push_back(row);
    }
    // a dependent row
    std::vector<BigRat> dep(cols);
    for (std::size_t c = 0; c < cols; ++c) dep[c] = a[0][c] * q(2) - a[1][c];
    a.push_back(dep);
    auto ns = nullspace(a, cols);
    EXPECT_GE(ns.size(), 3u);
    for (const auto& v : ns) {
      for (const auto& row : a) {
        mpq_class dot = 0;
        for (std::size_t c = 0; c < cols; ++c) dot += row[c].mpq() * v[c];
        EXPECT_EQ(dot, 0);
      }
    }
  }
}
