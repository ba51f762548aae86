#include <gtest/gtest.h>

#include "support.hpp"

using namespace qsuper;

TEST(Kashiwara, EvenMinorPowersExpand) {
  for (auto s : {Shape(2, 1), Shape(3, 1)}) {
    SuperAlgebra A(s);
    for (int sp = 1; sp <= 3; ++sp)
      for (int i = 1; i <= s.m; ++i)
        for (int k = i + 1; k <= s.m; ++k)
          for (int j = 1; j <= s.m; ++j)
            for (int l = j + 1; l <= s.m; ++l)
              EXPECT_EQ(minor_power(A, i, j, k, l, sp), minor_power_expansion(A, i, j, k, l, sp));
  }
}

TEST(Kashiwara, FirstPowerOfAMixedMinorIsItself) {
  Shape s(2, 1);
  SuperAlgebra A(s);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) EXPECT_EQ(minor_power(A, i, j, 3, 3, 1), minor_power_expansion(A, i, j, 3, 3, 1));
}

TEST(Kashiwara, NeedsOneOddIndex) {
  SuperAlgebra A(Shape(1, 2));
  EXPECT_THROW(TwoRowAdapted{A}, PreconditionError);
}

TEST(Kashiwara, AdaptedFamilyIsABasisInLowDegree) {
  SuperAlgebra A(Shape(2, 1));
  TwoRowAdapted T(A);
  std::mt19937 rng(41);
  for (int k = 1; k <= 2; ++k)
    for (auto& [ro, co] : biweights(A.shape(), k)) {
      auto B = T.basis(ro, co);
      auto block = enumerate_block(A.shape(), ro, co);
      ASSERT_EQ(B.size(), block.size());
      AlgebraElement f;
      for (auto& M : block) f.add(M, qtest::random_laurent(rng, 2, 2));
      auto c = T.coordinates(f, B);
      AlgebraElement back;
      for (std::size_t t = 0; t < B.size(); ++t) back.add(B[t].value, c[t]);
      EXPECT_EQ(back, f);
    }
}

TEST(Kashiwara, OperatorsMoveOneBoxBetweenRows) {
  SuperAlgebra A(Shape(2, 1));
  TwoRowAdapted T(A);
  auto unit = [&](int i, int j) {
    ExpMatrix M(3);
    M(i, j) = 1;
    return M;
  };
  for (int j = 1; j <= 3; ++j) {
    auto B = T.basis(unit(1, j).ro(), unit(1, j).co());
    ASSERT_EQ(B.size(), 1u);
    EXPECT_TRUE(T.e1(B[0]).is_zero());
    EXPECT_EQ(T.f1(B[0]), A.gen(2, j));
    auto C = T.basis(unit(2, j).ro(), unit(2, j).co());
    EXPECT_EQ(T.e1(C[0]), A.gen(1, j));
    EXPECT_TRUE(T.f1(C[0]).is_zero());
  }
}

TEST(Kashiwara, InvariantsAreKilledInLowDegree) {
  SuperAlgebra A(Shape(2, 1));
  LocalAlgebra L(A);
  Actions Ac(L);
  for (auto S : {SubalgebraSpec{{{GenSymbol::E, 1}}, {}}, SubalgebraSpec{{{GenSymbol::F, 1}}, {}},
                 SubalgebraSpec{{{GenSymbol::E, 1}, {GenSymbol::F, 1}}, {}}}) {
    auto rep = kashiwara_window_check(Ac, S, 2);
    EXPECT_TRUE(rep.pass()) << subset_name(S);
    EXPECT_GT(rep.invariants, 0);
  }
}
