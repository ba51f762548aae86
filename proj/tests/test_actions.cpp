#include <gtest/gtest.h>

#include "support.hpp"

using namespace qsuper;

namespace {

struct Fixture {
  explicit Fixture(Shape s) : A(s), L(A), Ac(L) {}
  SuperAlgebra A;
  LocalAlgebra L;
  Actions Ac;
  LocalElement gen(int i, int j) const { return L.to_mixed(A.gen(i, j)); }
};

}  // namespace

TEST(Actions, GeneratorTables) {
  for (auto s : qtest::small_shapes()) {
    Fixture F(s);
    int N = s.N();
    for (int i = 1; i < N; ++i)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          LocalElement x = F.gen(k, l);
          LocalElement z;
          EXPECT_EQ(F.Ac.act_left({GenSymbol::E, i}, x), k == i + 1 ? F.gen(i, l) : z);
          EXPECT_EQ(F.Ac.act_left({GenSymbol::F, i}, x), k == i ? F.gen(i + 1, l) : z);
          EXPECT_EQ(F.Ac.act_right({GenSymbol::E, i}, x), l == i ? F.gen(k, i + 1) : z);
          EXPECT_EQ(F.Ac.act_right({GenSymbol::F, i}, x), l == i + 1 ? F.gen(k, i) : z);
        }
  }
}

TEST(Actions, CartanActsByWeights) {
  Fixture F(Shape(2, 1));
  for (int a = 1; a <= 3; ++a)
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        int sg = a > 2 ? -1 : 1;
        LocalElement x = F.gen(k, l);
        EXPECT_EQ(F.Ac.act_left({GenSymbol::K, a}, x), x.scaled(LaurentPoly::q(k == a ? 2 * sg : 0)));
        EXPECT_EQ(F.Ac.act_left({GenSymbol::KINV, a}, x), x.scaled(LaurentPoly::q(k == a ? -2 * sg : 0)));
        EXPECT_EQ(F.Ac.act_right({GenSymbol::K, a}, x), x.scaled(LaurentPoly::q(l == a ? 2 * sg : 0)));
      }
}

TEST(Actions, DeterminantsAndBerezinianAreAnnihilated) {
  for (auto s : qtest::small_shapes()) {
    Fixture F(s);
    for (int i = 1; i < s.N(); ++i) {
      for (auto f : {F.L.detA_pow(1), F.L.detD_pow(1), F.L.berezinian(), F.L.detA_pow(-1)}) {
        EXPECT_TRUE(F.Ac.act_left({GenSymbol::E, i}, f).is_zero());
        EXPECT_TRUE(F.Ac.act_right({GenSymbol::F, i}, f).is_zero());
      }
    }
  }
}

TEST(Actions, LeftAndRightCommute) {
  std::mt19937 rng(31);
  for (auto s : {Shape(1, 1), Shape(2, 1)}) {
    Fixture F(s);
    auto gens = F.L.generators();
    for (int t = 0; t < 20; ++t) {
      LocalElement f = F.L.mul(gens[rng() % gens.size()], gens[rng() % gens.size()]);
      for (int i = 1; i < s.N(); ++i)
        for (int j = 1; j < s.N(); ++j)
          for (auto a : {GenSymbol::E, GenSymbol::F})
            for (auto b : {GenSymbol::E, GenSymbol::F}) {
              GenSymbol g{a, i}, h{b, j};
              EXPECT_EQ(F.Ac.act_left(g, F.Ac.act_right(h, f)), F.Ac.act_right(h, F.Ac.act_left(g, f)));
            }
    }
  }
}

TEST(Actions, SerreFreeCommutatorRelation) {
  // (q_i^2 - q_i^-2)(E_i F_i -+ F_i E_i) = K_i K_{i+1}^-1 - K_i^-1 K_{i+1}, q_i = q^{(-1)^[i]}, super bracket for i = m
  std::mt19937 rng(32);
  for (auto s : {Shape(2, 1), Shape(1, 2)}) {
    Fixture F(s);
    for (int t = 0; t < 15; ++t) {
      LocalElement f = F.L.to_mixed(qtest::random_word(F.A, rng, 3));
      for (int i = 1; i < s.N(); ++i) {
        GenSymbol E{GenSymbol::E, i}, Fi{GenSymbol::F, i};
        GenSymbol Ki{GenSymbol::K, i}, Kj{GenSymbol::K, i + 1}, Kiinv{GenSymbol::KINV, i}, Kjinv{GenSymbol::KINV, i + 1};
        LocalElement lhs = F.Ac.act_left(E, F.Ac.act_left(Fi, f));
        lhs.add(F.Ac.act_left(Fi, F.Ac.act_left(E, f)), i == s.m ? 1 : -1);
        int qi = s.parity(i) ? -1 : 1;
        lhs = lhs.scaled(LaurentPoly::q(2 * qi) - LaurentPoly::q(-2 * qi));
        LocalElement rhs = F.Ac.act_left(Ki, F.Ac.act_left(Kjinv, f));
        rhs.add(F.Ac.act_left(Kiinv, F.Ac.act_left(Kj, f)), -1);
        EXPECT_EQ(lhs, rhs) << "i=" << i;
      }
    }
  }
}

TEST(Actions, CounitOnOne) {
  Fixture F(Shape(2, 2));
  for (int i = 1; i < 4; ++i) {
    EXPECT_TRUE(F.Ac.act_left({GenSymbol::E, i}, F.L.one()).is_zero());
    EXPECT_TRUE(F.Ac.act_right({GenSymbol::F, i}, F.L.one()).is_zero());
  }
  EXPECT_EQ(F.Ac.act_left({GenSymbol::K, 1}, F.L.one()), F.L.one());
}

TEST(Actions, InvariantSubspaceOfASmallWindow) {
  Fixture F(Shape(2, 1));
  SubalgebraSpec S{{{GenSymbol::E, 1}, {GenSymbol::E, 2}}, {{GenSymbol::F, 1}, {GenSymbol::F, 2}}};
  EXPECT_TRUE(F.Ac.is_invariant(F.L.berezinian(), S));
  EXPECT_TRUE(F.Ac.is_invariant(F.gen(1, 1), S));
  EXPECT_FALSE(F.Ac.is_invariant(F.gen(2, 2), S));
  std::vector<LocalElement> span{F.gen(1, 1), F.gen(1, 2), F.gen(2, 1)};
  EXPECT_EQ(F.Ac.invariants(span, S).size(), 1u);
}

TEST(Actions, GeneratorParsing) {
  EXPECT_EQ(GenSymbol::parse("E2").str(), "E2");
  EXPECT_EQ(GenSymbol::parse("Kinv3").kind, GenSymbol::KINV);
  EXPECT_THROW(GenSymbol::parse("G1"), UsageError);
  EXPECT_THROW(GenSymbol::parse("E"), UsageError);
  EXPECT_THROW(GenSymbol::parse("E1x"), UsageError);
  EXPECT_THROW(GenSymbol::parse("E3").check(Shape(2, 1)), UsageError);
}
