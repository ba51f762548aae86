#include <gtest/gtest.h>

#include "support.hpp"

using namespace qsuper;

namespace {

LocalElement random_mixed(const LocalAlgebra& L, std::mt19937& rng, int len) {
  auto gens = L.generators();
  LocalElement f = L.one();
  for (int k = 0; k < len; ++k) f = L.mul(f, gens[rng() % gens.size()]);
  return f;
}

int sgn(int p) { return (p & 1) ? -1 : 1; }

}  // namespace

TEST(Localization, DeterminantsAreInvertible) {
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    EXPECT_EQ(L.mul(L.detA_pow(1), L.detA_pow(-1)), L.one());
    EXPECT_EQ(L.mul(L.detD_pow(-2), L.detD_pow(2)), L.one());
    EXPECT_EQ(L.to_mixed(L.minors().det_q_A()), L.detA_pow(1));
  }
}

TEST(Localization, SchurComplementDefinesY) {
  // y = D - C A^{-1} B, so y_{mu nu} x11 = x_{mu nu} x11 - q^-2 x_{mu 1} x_{1 nu} when m = 1
  for (auto s : {Shape(1, 1), Shape(1, 2)}) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    for (int mu = 2; mu <= s.N(); ++mu)
      for (int nu = 2; nu <= s.N(); ++nu) {
        AlgebraElement rhs = A.mul(A.gen(mu, nu), A.gen(1, 1));
        rhs.add(A.mul(A.gen(mu, 1), A.gen(1, nu)), LaurentPoly::monomial(-2, -1));
        EXPECT_EQ(L.mul(L.y(mu, nu), L.x(1, 1)), L.to_mixed(rhs));
      }
  }
}

TEST(Localization, GL11CorrectionCoefficient) {
  SuperAlgebra A(Shape(1, 1));
  LocalAlgebra L(A);
  auto c = gl11_y22_coefficient(L);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, LaurentPoly(1));
}

TEST(Localization, MixedRoundTrip) {
  std::mt19937 rng(21);
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    for (int t = 0; t < 20; ++t) {
      AlgebraElement f = qtest::random_word(A, rng);
      auto [F, k] = L.from_mixed(L.to_mixed(f));
      AlgebraElement g = f;
      for (int i = 0; i < k; ++i) g = A.mul(g, L.detA());
      EXPECT_EQ(F, g);
    }
  }
}

TEST(Localization, ToMixedIsAHomomorphism) {
  std::mt19937 rng(22);
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    for (int t = 0; t < 20; ++t) {
      AlgebraElement f = qtest::random_word(A, rng), g = qtest::random_word(A, rng);
      EXPECT_EQ(L.to_mixed(A.mul(f, g)), L.mul(L.to_mixed(f), L.to_mixed(g)));
    }
  }
}

TEST(Localization, AssociativityAndBar) {
  std::mt19937 rng(23);
  for (auto s : {Shape(1, 1), Shape(2, 1), Shape(1, 2)}) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    for (int t = 0; t < 25; ++t) {
      LocalElement f = random_mixed(L, rng, 2), g = random_mixed(L, rng, 2), h = random_mixed(L, rng, 1);
      EXPECT_EQ(L.mul(L.mul(f, g), h), L.mul(f, L.mul(g, h)));
      EXPECT_EQ(L.bar(L.bar(f)), f);
    }
    for (auto& g : L.generators())
      for (auto& h : L.generators()) {
        int pg = g.begin()->first.M.odd_count(s), ph = h.begin()->first.M.odd_count(s);
        EXPECT_EQ(L.bar(L.mul(g, h)), L.mul(L.bar(h), L.bar(g)).scaled(sgn(pg * ph)));
      }
  }
}

TEST(Localization, ReduceIsAProjection) {
  std::mt19937 rng(24);
  for (auto s : {Shape(2, 1), Shape(2, 2)}) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    for (int t = 0; t < 20; ++t) {
      LocalElement f = random_mixed(L, rng, 3);
      for (auto& [k, c] : f) EXPECT_TRUE(L.is_reduced(k));
      EXPECT_EQ(L.reduce(f), f);
    }
  }
}

TEST(Localization, BerezinianIsCentralAndTrivialInSL) {
  for (auto s : qtest::small_shapes()) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    EXPECT_TRUE(L.is_central(L.berezinian()));
    EXPECT_EQ(L.sl_project(L.berezinian()), L.one());
    EXPECT_EQ(L.bar(L.berezinian()), L.berezinian());
  }
}

TEST(Localization, DeterminantsQCommute) {
  for (auto s : {Shape(2, 1), Shape(1, 2)}) {
    SuperAlgebra A(s);
    LocalAlgebra L(A);
    for (int i = 1; i <= s.N(); ++i)
      for (int j = 1; j <= s.N(); ++j) {
        bool D = i > s.m && j > s.m;
        LocalElement g = D ? L.y(i, j) : L.x(i, j);
        int e = (!D && (i > s.m || j > s.m)) ? 2 : 0;
        EXPECT_EQ(L.mul(L.detA_pow(1), g), L.mul(g, L.detA_pow(1)).scaled(LaurentPoly::q(e)));
        EXPECT_EQ(L.mul(L.detD_pow(1), g), L.mul(g, L.detD_pow(1)).scaled(LaurentPoly::q(e)));
      }
  }
}
