#include <gtest/gtest.h>

#include "support.hpp"

using namespace qsuper;

namespace {

int sgn(int p) { return (p & 1) ? -1 : 1; }

// the defining relation for x_ij x_kl, (i,j) < (k,l), as lhs - rhs
AlgebraElement relation_defect(const SuperAlgebra& A, int i, int j, int k, int l) {
  const Shape& s = A.shape();
  auto P = [&](int t) { return s.parity(t); };
  int pij = (P(i) + P(j)) & 1, pkl = (P(k) + P(l)) & 1;
  AlgebraElement lhs = A.mul(A.gen(i, j), A.gen(k, l));
  AlgebraElement swapped = A.mul(A.gen(k, l), A.gen(i, j));
  AlgebraElement rhs;
  if (i == k) {
    rhs.add(swapped, LaurentPoly::monomial(2 * sgn(P(i)), sgn(pij * pkl)));
  } else if (j == l) {
    rhs.add(swapped, LaurentPoly::monomial(2 * sgn(P(j)), sgn(pij * pkl)));
  } else if (j > l) {
    rhs.add(swapped, sgn(pij * pkl));
  } else {
    rhs.add(swapped, sgn(pij * pkl));
    LaurentPoly c = LaurentPoly::q(2) - LaurentPoly::q(-2);
    rhs.add(A.mul(A.gen(i, l), A.gen(k, j)), c * sgn(P(k) * P(j) + P(k) * P(l) + P(j) * P(l)));
  }
  return lhs - rhs;
}

Int dimension_oracle(int m, int n, int k) {
  // choose r even generators with repetition, k-r distinct odd ones
  auto C = [](long a, long b) {
    if (b < 0 || a < 0 || b > a) return Int(0);
    Int r = 1;
    for (long t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
  };
  Int total = 0;
  for (int r = 0; r <= k; ++r) total += C(m * m + n * n + r - 1, r) * C(2 * m * n, k - r);
  return total;
}

}  // namespace

TEST(SuperAlgebra, DefiningRelationsHold) {
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    int N = s.N();
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = i; k <= N; ++k)
          for (int l = 1; l <= N; ++l) {
            if (k == i && l <= j) continue;
            EXPECT_TRUE(relation_defect(A, i, j, k, l).is_zero())
                << "shape (" << s.m << "," << s.n << ") x" << i << j << " x" << k << l;
          }
  }
}

TEST(SuperAlgebra, DeterminantExample) {
  SuperAlgebra A(Shape(2, 1));
  AlgebraElement x11x22 = A.mul(A.gen(1, 1), A.gen(2, 2));
  AlgebraElement x22x11 = A.mul(A.gen(2, 2), A.gen(1, 1));
  AlgebraElement x12x21 = A.mul(A.gen(1, 2), A.gen(2, 1));
  EXPECT_EQ(x11x22 - x22x11, x12x21.scaled(LaurentPoly::q(2) - LaurentPoly::q(-2)));
}

TEST(SuperAlgebra, OddGeneratorsSquareToZero) {
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    for (int g = 0; g < s.num_gens(); ++g) {
      AlgebraElement sq = A.mul_word({g, g});
      EXPECT_EQ(sq.is_zero(), s.gpar(g) == 1);
    }
  }
}

TEST(SuperAlgebra, NormalFormCountsMatchDimension) {
  for (auto s : qtest::small_shapes())
    for (int k = 0; k <= 5; ++k)
      EXPECT_EQ(Int(enumerate_degree(s, k).size()), dimension_oracle(s.m, s.n, k)) << "k=" << k;
}

TEST(SuperAlgebra, Associativity) {
  std::mt19937 rng(11);
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    for (int t = 0; t < 40; ++t) {
      AlgebraElement f = qtest::random_word(A, rng), g = qtest::random_word(A, rng), h = qtest::random_word(A, rng);
      EXPECT_EQ(A.mul(A.mul(f, g), h), A.mul(f, A.mul(g, h)));
    }
  }
}

TEST(SuperAlgebra, BarIsASuperAntiInvolution) {
  std::mt19937 rng(12);
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    for (int t = 0; t < 40; ++t) {
      AlgebraElement f = qtest::random_word(A, rng), g = qtest::random_word(A, rng);
      if (f.is_zero() || g.is_zero()) continue;
      int pf = A.parity(f), pg = A.parity(g);
      EXPECT_EQ(A.bar(A.bar(f)), f);
      EXPECT_EQ(A.bar(A.mul(f, g)), A.mul(A.bar(g), A.bar(f)).scaled(sgn(pf * pg)));
    }
  }
}

TEST(SuperAlgebra, BarOfX11X22) {
  SuperAlgebra A(Shape(2, 1));
  AlgebraElement f = A.mul(A.gen(1, 1), A.gen(2, 2));
  AlgebraElement expect = f;
  expect.add(A.mul(A.gen(1, 2), A.gen(2, 1)), LaurentPoly::q(-2) - LaurentPoly::q(2));
  EXPECT_EQ(A.bar(f), expect);
}

TEST(SuperAlgebra, ProductsPreserveBiweight) {
  std::mt19937 rng(13);
  SuperAlgebra A(Shape(2, 2));
  for (int t = 0; t < 50; ++t) {
    std::vector<int> w;
    for (int k = 0; k < 4; ++k) w.push_back(static_cast<int>(rng() % 16));
    AlgebraElement f = A.mul_word(w);
    ExpMatrix W = ExpMatrix::from_word(4, w);
    for (auto& [M, c] : f) {
      EXPECT_EQ(M.ro(), W.ro());
      EXPECT_EQ(M.co(), W.co());
    }
  }
}

TEST(SuperAlgebra, RejectsBadInput) {
  EXPECT_THROW(Shape(0, 1), UsageError);
  SuperAlgebra A(Shape(1, 1));
  ExpMatrix M(2);
  M(1, 2) = 2;
  EXPECT_THROW(A.monomial(M), UsageError);
}
