#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "latsum/oracle.hpp"
#include "latsum/weights.hpp"

using namespace latsum;

namespace {

BigRat q(long n, long d = 1) { return BigRat(mpz_class(n), mpz_class(d)); }

Poly P(std::initializer_list<long> c) {
  std::vector<BigRat> v;
  for (long k : c) v.emplace_back(k);
  return Poly(std::move(v));
}

RatFunc R(const Poly& n, const Poly& d) { return RatFunc::normalize(n, d); }

const SymbolicX sym;
const RatFunc X = RatFunc::x();
RatFunc K(long n, long d = 1) { return RatFunc(q(n, d)); }

// Random strictly increasing chains with q <= 6 and entries <= 10.
std::vector<Chain> random_chains(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Chain> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Index> e;
    for (Index j = 1; j <= 10; ++j)
      if (rng() % 3 == 0) e.push_back(j);
    if (e.empty() || e.size() > 6) continue;
    out.emplace_back(e);
  }
  return out;
}

}  // namespace

TEST(BcmvF1, Examples) {
  EXPECT_EQ(bcmv_f1(sym, 1, Form::raw), R(P({-12}), P({0, 1, 1})));
  EXPECT_EQ(bcmv_f1(sym, 2, Form::reduced), R(P({-48}), P({3, 2, 1})));
  EXPECT_EQ(bcmv_f1(FixedX{q(2)}, 1, Form::reduced), q(-2));
}

TEST(BcmvF1, RawFormHasRemovablePoleAtXEqualsJ) {
  EXPECT_THROW(bcmv_f1(FixedX{q(5)}, 5, Form::raw), PoleError);
  EXPECT_NO_THROW(bcmv_f1(FixedX{q(5)}, 5, Form::reduced));
}

TEST(BcmvF2, Examples) {
  EXPECT_EQ(bcmv_f2(sym, 1, 2, Form::reduced), R(P({-24}), P({-1, 1}) * P({3, 2, 1})));
  EXPECT_EQ(bcmv_f2(sym, 1, 3, Form::reduced), R(P({-72}), P({-1, 1}) * P({8, 3, 1})));
  EXPECT_THROW(bcmv_f2(sym, 2, 2), ArgumentError);
  EXPECT_THROW(bcmv_f2(sym, 3, 2), ArgumentError);
}

TEST(BcmvF2, PoleAtXEqualsFirstArgument) {
  try {
    bcmv_f2(FixedX{q(3)}, 3, 5);
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_EQ(e.at(), "3");
    EXPECT_NE(e.denominator().find("x - X"), std::string::npos);
  }
}

TEST(BcmvG1, Examples) {
  // -28x^2/9 + 303/45 - (x^3 - x)/6 + (x^2 - 1)/5 - 13x/9
  RatFunc expected = K(-28, 9) * X * X + K(303, 45) - (X * X * X - X) / K(6) + (X * X - K(1)) / K(5) - K(13, 9) * X;
  EXPECT_EQ(bcmv_g1(sym, 1), expected);
  EXPECT_EQ(bcmv_g1(FixedX{q(2)}, 1), q(-9));
}

TEST(BcmvG1, QuadraticCoefficientIs274Over45) {
  // g1(j) - g1-without-the-X^2-term has second difference 2 * 274/45 in j
  // when x is fixed at a non-pole value and the other j-terms are removed.
  const SymbolicX m;
  for (Index j = 1; j <= 6; ++j) {
    const RatFunc J{BigRat(j)};
    RatFunc rest = K(-28, 9) * X * X + K(29, 45) - (X * X * X - X) / (K(6) * J) +
                   (X * X * X - X) * (X + J) / (K(5) * J * J + K(5) * X * J + K(5) * X * X - K(5)) -
                   K(13, 9) * X * J;
    EXPECT_EQ((bcmv_g1(m, j) - rest) / (J * J), K(274, 45)) << "j = " << j;
  }
}

TEST(BcmvG2, Examples) {
  EXPECT_EQ(bcmv_g2(FixedX{q(3)}, 1, 2), q(26, 3));
  EXPECT_THROW(bcmv_g2(sym, 3, 2), ArgumentError);
  // Removing every x- and Y-dependent display term leaves the constant 49/45.
  const RatFunc Xv = K(1), Y = K(2);
  RatFunc rest = K(5, 18) * (X * X * X - X) / Y + K(38, 15) * Y * Y +
                 (X * X * X - X) * (X + Y) / (K(5) * Y * Y + K(5) * X * Y + K(5) * X * X - K(5)) -
                 K(13, 9) * Xv * Y - K(13, 9) * (Y - Xv) * X;
  EXPECT_EQ(bcmv_g2(sym, 1, 2) - rest, K(49, 45));
}

TEST(WeightConsistency, ProductFormN) {
  EXPECT_EQ(bcmv_product_N(sym, Chain{1}), R(P({-12}), P({0, 1, 1})));
  EXPECT_EQ(bcmv_product_N(FixedX{q(2)}, Chain{1}), q(-2));
  EXPECT_EQ(bcmv_product_N(sym, Chain{1, 2}), R(P({288}), P({0, 1}) * P({1, 1}) * P({-1, 1}) * P({3, 2, 1})));
}

TEST(WeightConsistency, DirectG) {
  EXPECT_EQ(bcmv_direct_G(FixedX{q(2)}, Chain{1}), q(-9));
  auto ws = make_bcmv(sym);
  EXPECT_TRUE((bcmv_direct_G(sym, Chain{1, 2}) - (ws.g1(1) + ws.g2(1, 2))).is_zero());
}

TEST(WeightConsistency, DirectGLengthCoefficient) {
  // Inserting 2 into [1, 3] changes G by the increment of every display term;
  // the q-term contributes exactly 49/45.
  const RatFunc cube = X * X * X - X;
  RatFunc increment = K(49, 45) + K(5, 18) * cube / K(2) + K(38, 15) * K(4) +
                      cube / K(5) * (X + K(2)) / (X * X + K(4) + K(2) * X - K(1)) - K(13, 9) * K(1 * 2 + 2 * 3 - 1 * 3);
  EXPECT_EQ(bcmv_direct_G(sym, Chain{1, 2, 3}) - bcmv_direct_G(sym, Chain{1, 3}), increment);
}

TEST(WeightProperty, RawEqualsReducedUpTo50) {
  for (Index j = 1; j <= 50; ++j) {
    ASSERT_EQ(bcmv_f1(sym, j, Form::raw), bcmv_f1(sym, j, Form::reduced)) << "j = " << j;
    for (Index i = 1; i < j; i += (j > 20 ? 7 : 1))
      ASSERT_EQ(bcmv_f2(sym, i, j, Form::raw), bcmv_f2(sym, i, j, Form::reduced)) << i << "," << j;
  }
}

TEST(WeightProperty, TelescopingNAndG) {
  auto ws = make_bcmv(sym);
  for (const Chain& c : random_chains(60, 7)) {
    EXPECT_EQ(bcmv_product_N(sym, c), chain_weight_W(ws, c)) << c.str();
    EXPECT_EQ(bcmv_direct_G(sym, c), chain_value_V(ws, c)) << c.str();
  }
}

TEST(WeightProperty, FixedAndSymbolicCommute) {
  const BigRat x0 = q(7, 3);
  const FixedX fx{x0};
  for (Index j = 1; j <= 8; ++j) {
    EXPECT_EQ(bcmv_f1(sym, j).eval(x0), bcmv_f1(fx, j));
    EXPECT_EQ(bcmv_f1(sym, j, Form::raw).eval(x0), bcmv_f1(fx, j, Form::raw));
    EXPECT_EQ(bcmv_g1(sym, j).eval(x0), bcmv_g1(fx, j));
    for (Index i = 1; i < j; ++i) {
      EXPECT_EQ(bcmv_f2(sym, i, j).eval(x0), bcmv_f2(fx, i, j));
      EXPECT_EQ(bcmv_f2(sym, i, j, Form::raw).eval(x0), bcmv_f2(fx, i, j, Form::raw));
      EXPECT_EQ(bcmv_g2(sym, i, j).eval(x0), bcmv_g2(fx, i, j));
    }
  }
  for (const Chain& c : random_chains(20, 11)) {
    EXPECT_EQ(bcmv_product_N(sym, c).eval(x0), bcmv_product_N(fx, c));
    EXPECT_EQ(bcmv_direct_G(sym, c).eval(x0), bcmv_direct_G(fx, c));
  }
}

TEST(WeightSystem, RejectsBadArguments) {
  auto ws = make_bcmv(sym);
  EXPECT_THROW(ws.f1(0), ArgumentError);
  EXPECT_THROW(ws.f2(2, 2), ArgumentError);
  EXPECT_THROW(ws.g2(3, 1), ArgumentError);
}

TEST(WeightSystem, MemoizationIsTransparent) {
  auto cached = make_bcmv(FixedX{q(7, 3)}, Form::reduced, true);
  auto plain = make_bcmv(FixedX{q(7, 3)}, Form::reduced, false);
  for (int round = 0; round < 2; ++round)
    for (Index j = 2; j <= 12; ++j)
      for (Index i = 1; i < j; ++i) {
        EXPECT_EQ(cached.f2(i, j), plain.f2(i, j));
        EXPECT_EQ(cached.g2(i, j), plain.g2(i, j));
      }
  EXPECT_EQ(cached.f2_calls(), plain.f2_calls());
  EXPECT_EQ(cached.f2_evaluations(), 66u);
  EXPECT_EQ(plain.f2_evaluations(), 132u);
}

TEST(WeightSystem, ConcurrentReadersAgree) {
  auto ws = make_bcmv(FixedX{q(7, 3)});
  std::vector<std::vector<BigRat>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (Index j = 2; j <= 15; ++j)
        for (Index i = 1; i < j; ++i) results[t].push_back(ws.f2(i, j) + ws.g2(i, j));
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(results[t], results[0]);
}
