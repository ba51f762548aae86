#include <gtest/gtest.h>

#include "support.hpp"

using namespace qsuper;
using qtest::random_laurent;

TEST(Laurent, ArithmeticAndNormalForm) {
  LaurentPoly a{{-2, 1}, {2, -1}};
  LaurentPoly b = LaurentPoly::q(2) - LaurentPoly::q(-2);
  EXPECT_EQ(a + b, LaurentPoly());
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ(a * a, (LaurentPoly{{-4, 1}, {0, -2}, {4, 1}}));
  EXPECT_EQ(LaurentPoly(3) - 3, LaurentPoly());
  EXPECT_EQ(a.min_exp(), -2);
  EXPECT_EQ(a.max_exp(), 2);
}

TEST(Laurent, BarIsAnInvolutiveRingMap) {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly f = random_laurent(rng), g = random_laurent(rng);
    EXPECT_EQ(f.bar().bar(), f);
    EXPECT_EQ((f * g).bar(), f.bar() * g.bar());
    EXPECT_EQ((f + g).bar(), f.bar() + g.bar());
  }
}

TEST(Laurent, RingAxioms) {
  std::mt19937 rng(2);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly f = random_laurent(rng), g = random_laurent(rng), h = random_laurent(rng);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
  }
}

TEST(Laurent, ExactDivisionInvertsMultiplication) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly f = random_laurent(rng), g = random_laurent(rng);
    if (g.is_zero()) continue;
    EXPECT_EQ(exact_div(f * g, g), f);
  }
}

TEST(Laurent, QBinomialSatisfiesPascal) {
  // [s,t] = [s-1,t-1] + q^{base t} [s-1,t]
  for (int base : {2, 4})
    for (int s = 1; s <= 7; ++s)
      for (int t = 1; t < s; ++t)
        EXPECT_EQ(q_binom(s, t, base), q_binom(s - 1, t - 1, base) + LaurentPoly::q(base * t) * q_binom(s - 1, t, base));
  EXPECT_EQ(q_binom(2, 1), (LaurentPoly{{0, 1}, {2, 1}}));
  EXPECT_THROW(q_binom(2, 3), UsageError);
}

TEST(Laurent, BarEquationSolution) {
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly h = random_laurent(rng).positive_part();
    LaurentPoly k = h - h.bar();
    EXPECT_EQ(solve_bar_equation(k, Variant::PLUS_Q), h);
    LaurentPoly hm = solve_bar_equation(k, Variant::MINUS_Q);
    EXPECT_TRUE(hm.in_qinvZqinv());
    EXPECT_EQ(hm - hm.bar(), k);
  }
  EXPECT_THROW(solve_bar_equation(LaurentPoly(1), Variant::PLUS_Q), BarEquationUnsolvable);
  EXPECT_THROW(solve_bar_equation(LaurentPoly::q(1), Variant::PLUS_Q), BarEquationUnsolvable);
}

TEST(Laurent, BigCoefficientsStayExact) {
  LaurentPoly p = LaurentPoly{{0, 1}, {1, 1}};
  LaurentPoly r = 1;
  for (int i = 0; i < 80; ++i) r *= p;
  std::vector<Int> row{1};
  for (int n = 1; n <= 80; ++n) {
    std::vector<Int> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = next;
  }
  for (int e = 0; e <= 80; ++e) EXPECT_EQ(r.coeff(e), row[static_cast<std::size_t>(e)]);
}

TEST(Laurent, Printing) {
  EXPECT_EQ((LaurentPoly{{-2, 1}, {2, -1}}).str(), "-q^2 + q^-2");
  EXPECT_EQ(LaurentPoly().str(), "0");
}
