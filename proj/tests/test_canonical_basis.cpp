#include <gtest/gtest.h>

#include "support.hpp"

using namespace qsuper;

namespace {

struct Fixture {
  explicit Fixture(Shape s) : A(s), L(A), CB(L) {}
  SuperAlgebra A;
  LocalAlgebra L;
  CanonicalBasis CB;
};

bool target_ok(const LaurentPoly& c, Variant v) {
  for (auto& [e, k] : c.terms())
    if (v == Variant::PLUS_Q ? e <= 0 : e >= 0) return false;
  return true;
}

}  // namespace

TEST(Order, MovesAgreeWithCornerSumDominance) {
  for (auto s : {Shape(1, 1), Shape(2, 1)})
    for (int k = 1; k <= 3; ++k)
      for (auto& [ro, co] : biweights(s, k)) {
        auto block = enumerate_block(s, ro, co);
        for (auto& M : block)
          for (auto& N : block) EXPECT_EQ(leq(M, N), dominated(M, N)) << M.str() << " " << N.str();
      }
}

TEST(Order, PartialOrderAndLinearExtension) {
  Shape s(2, 1);
  for (auto& [ro, co] : biweights(s, 3)) {
    BlockOrder O(s, enumerate_block(s, ro, co));
    auto ext = O.linear_extension();
    for (std::size_t a = 0; a < ext.size(); ++a)
      for (std::size_t b = 0; b < ext.size(); ++b) {
        if (a != b && O.leq(ext[a], ext[b]) && O.leq(ext[b], ext[a])) ADD_FAILURE() << "not antisymmetric";
        if (a < b) EXPECT_FALSE(O.leq(ext[a], ext[b]) && ext[a] != ext[b]) << "extension puts a smaller matrix first";
      }
  }
}

TEST(Order, MovesPreserveBiweight) {
  ExpMatrix M = ExpMatrix::from_rows({{2, 1, 0}, {1, 1, 1}, {0, 1, 1}});
  for (auto& R : all_moves(M)) {
    EXPECT_EQ(R.ro(), M.ro());
    EXPECT_EQ(R.co(), M.co());
    EXPECT_LT(potential(R), potential(M));
  }
}

TEST(CanonicalBasis, BlockElementsAreBarInvariantAndUnitriangular) {
  for (auto s : {Shape(1, 1), Shape(2, 1), Shape(1, 2)}) {
    Fixture F(s);
    for (int k = 1; k <= 3; ++k)
      for (auto& [ro, co] : biweights(s, k))
        for (Variant v : {Variant::PLUS_Q, Variant::MINUS_Q})
          for (auto& e : F.CB.solve_block(ro, co, v)) {
            EXPECT_EQ(F.A.bar(e.poly), e.poly);
            EXPECT_EQ(e.coords.at(e.M), LaurentPoly(1));
            AlgebraElement rebuilt;
            for (auto& [N, c] : e.coords) {
              EXPECT_TRUE(dominated(N, e.M));
              if (N != e.M) EXPECT_TRUE(target_ok(c, v)) << c.str();
              rebuilt.add(F.A.x_norm(N), c);
            }
            EXPECT_EQ(rebuilt, e.poly);
          }
  }
}

TEST(CanonicalBasis, IndependentOfTieBreaking) {
  Fixture F(Shape(2, 1));
  for (auto& [ro, co] : biweights(Shape(2, 1), 3)) {
    auto a = F.CB.solve_block(ro, co, Variant::PLUS_Q, false);
    auto b = F.CB.solve_block(ro, co, Variant::PLUS_Q, true);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].poly, b[i].poly);
  }
}

TEST(CanonicalBasis, MinusVariantIsTheBarMirror) {
  // q <-> q^{-1} on coordinates exchanges the two triangularity targets
  Fixture F(Shape(2, 1));
  for (auto& [ro, co] : biweights(Shape(2, 1), 2))
    for (auto& e : F.CB.solve_block(ro, co, Variant::MINUS_Q))
      for (auto& [N, c] : e.coords)
        if (N != e.M) EXPECT_TRUE(c.bar().in_qZq());
}

TEST(CanonicalBasis, GlobalElementsAreBarInvariantAndTriangular) {
  Fixture F(Shape(2, 1));
  int checked = 0;
  for (int k = 0; k <= 2; ++k)
    for (auto& M : enumerate_degree(F.A.shape(), k))
      for (int a = -1; a <= 1; ++a)
        for (int d = -1; d <= 1; ++d) {
          if (!F.CB.is_global_index(LocalKey{M, a, d})) continue;
          CBElement e = F.CB.omega_global(M, a, d, Variant::PLUS_Q);
          EXPECT_EQ(F.L.bar(e.local), e.local);
          EXPECT_EQ(e.gcoords.at(LocalKey{M, a, d}), LaurentPoly(1));
          for (auto& [K, c] : e.gcoords)
            if (!(K == LocalKey{M, a, d})) EXPECT_TRUE(target_ok(c, Variant::PLUS_Q));
          ++checked;
        }
  EXPECT_GT(checked, 50);
}

TEST(CanonicalBasis, BerezinianShiftsSectors) {
  Fixture F(Shape(2, 1));
  for (int k = 0; k <= 2; ++k)
    for (auto& M : enumerate_degree(F.A.shape(), k))
      for (int a = -1; a <= 0; ++a)
        for (int d = 0; d <= 1; ++d) {
          if (!F.CB.is_global_index(LocalKey{M, a, d})) continue;
          CBElement e = F.CB.omega_global(M, a, d, Variant::PLUS_Q);
          CBElement sh = F.CB.omega_global(M, a + 1, d - 1, Variant::PLUS_Q);
          EXPECT_EQ(F.L.mul(e.local, F.L.berezinian()), sh.local) << M.str() << " a=" << a << " d=" << d;
        }
}

TEST(CanonicalBasis, GL11ClosedFamily) {
  Fixture F(Shape(1, 1));
  LocalAlgebra& L = F.L;
  for (int a = -2; a <= 2; ++a)
    for (int d = -2; d <= 2; ++d)
      for (int b = 0; b <= 1; ++b)
        for (int c = 0; c <= 1; ++c) {
          ExpMatrix M(2);
          M(1, 2) = b;
          M(2, 1) = c;
          LocalElement want = L.detA_pow(a);
          if (b) want = L.mul(want, L.x(1, 2));
          if (c) want = L.mul(want, L.x(2, 1));
          want = L.mul(want, L.detD_pow(d)).scaled(LaurentPoly::q((d - a) * (b + c)));
          EXPECT_EQ(F.CB.omega_global(M, a, d, Variant::PLUS_Q).local, want);
        }
}

TEST(CanonicalBasis, RejectsNonIndices) {
  Fixture F(Shape(2, 1));
  ExpMatrix M = ExpMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  EXPECT_FALSE(F.CB.is_global_index(LocalKey{M, 0, 0}));
}
