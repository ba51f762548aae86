#pragma once

#include <utility>
#include <vector>

#include "element.hpp"
#include "memo.hpp"
#include "shape.hpp"

namespace qsuper {

using AlgebraElement = Poly<ExpMatrix>;

struct BiWeight {
  std::vector<int> ro;
  std::vector<int> co;
  friend bool operator==(const BiWeight&, const BiWeight&) = default;
  friend auto operator<=>(const BiWeight&, const BiWeight&) = default;
};

struct GenKey {
  ExpMatrix M;
  int g;
  friend bool operator==(const GenKey&, const GenKey&) = default;
};
struct GenKeyHash {
  std::size_t operator()(const GenKey& k) const { return k.M.hash() * 31u + static_cast<std::size_t>(k.g); }
};

/// Straightening kernel for O_q(M_{m|n}).
///
/// Elements are combinations of ordered monomials x^M, generators ordered
/// lexicographically by (row, column).
class SuperAlgebra {
 public:
  struct PairTerm {
    LaurentPoly coeff;
    int a, b;  // a <= b
  };

  explicit SuperAlgebra(Shape s) : s_(s) {}
  const Shape& shape() const { return s_; }

  /// x_{g1} x_{g2} for g1 > g2 rewritten as ordered two-letter words.
  std::vector<PairTerm> pair_terms(int g1, int g2) const {
    if (g1 <= g2) throw UsageError("pair_terms expects g1 > g2");
    int i = s_.row(g2), j = s_.col(g2), k = s_.row(g1), l = s_.col(g1);
    auto P = [&](int t) { return s_.parity(t); };
    int sgn = (s_.gpar(g1) & s_.gpar(g2)) ? -1 : 1;
    if (i == k) {
      int e = P(i) == 0 ? 2 : -2;
      return {{LaurentPoly::monomial(-e, sgn), g2, g1}};
    }
    if (j == l) {
      int e = P(j) == 0 ? 2 : -2;
      return {{LaurentPoly::monomial(-e, sgn), g2, g1}};
    }
    if (j > l) return {{LaurentPoly(sgn), g2, g1}};
    int sp = ((P(k) * P(j) + P(k) * P(l) + P(j) * P(l)) & 1) ? -1 : 1;
    LaurentPoly c2 = LaurentPoly::monomial(2, -sgn * sp) + LaurentPoly::monomial(-2, sgn * sp);
    return {{LaurentPoly(sgn), g2, g1}, {c2, s_.gen(i, l), s_.gen(k, j)}};
  }

  /// normal form of x_{ij} x_{kl}
  AlgebraElement straighten_pair(int i, int j, int k, int l) const {
    return mul_word({s_.gen(i, j), s_.gen(k, l)});
  }

  AlgebraElement one() const { return AlgebraElement(ExpMatrix(s_.N())); }
  AlgebraElement gen(int i, int j) const {
    ExpMatrix M(s_.N());
    M(i, j) = 1;
    return AlgebraElement(M);
  }
  AlgebraElement monomial(const ExpMatrix& M) const {
    check(M);
    return AlgebraElement(M);
  }

  /// x^M times x_g
  const AlgebraElement& mulgen(const ExpMatrix& M, int g) const {
    GenKey key{M, g};
    if (auto* hit = memo_.find(key)) return *hit;
    AlgebraElement r;
    int h = M.last_gen();
    if (h < 0 || g > h) {
      ExpMatrix R = M;
      ++R.at(g);
      r.add(R, 1);
    } else if (g == h) {
      if (!s_.gpar(g)) {
        ExpMatrix R = M;
        ++R.at(g);
        r.add(R, 1);
      }
    } else {
      ExpMatrix Mp = M;
      --Mp.at(h);
      for (auto& t : pair_terms(h, g))
        for (auto& [R1, c1] : mulgen(Mp, t.a))
          for (auto& [R2, c2] : mulgen(R1, t.b)) r.add(R2, t.coeff * c1 * c2);
    }
    return memo_.insert(key, std::move(r));
  }

  AlgebraElement mul_mono(const ExpMatrix& A, const ExpMatrix& B) const {
    AlgebraElement cur(A);
    for (int g : B.word()) cur = mulgen_elem(cur, g);
    return cur;
  }

  AlgebraElement mulgen_elem(const AlgebraElement& f, int g) const {
    AlgebraElement r;
    for (auto& [M, c] : f)
      for (auto& [R, c2] : mulgen(M, g)) r.add(R, c * c2);
    return r;
  }

  AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& h) const {
    AlgebraElement r;
    for (auto& [B, cb] : h) {
      AlgebraElement cur = f;
      for (int g : B.word()) cur = mulgen_elem(cur, g);
      r.add(cur, cb);
    }
    return r;
  }

  /// product of generators in the given order
  AlgebraElement mul_word(const std::vector<int>& w) const {
    AlgebraElement cur = one();
    for (int g : w) cur = mulgen_elem(cur, g);
    return cur;
  }

  /// bar anti-automorphism
  AlgebraElement bar(const AlgebraElement& f) const {
    AlgebraElement r;
    for (auto& [M, c] : f) r.add(bar_mono(M), c.bar());
    return r;
  }

  const AlgebraElement& bar_mono(const ExpMatrix& M) const {
    if (auto* hit = bar_memo_.find(M)) return *hit;
    std::vector<int> w = M.word();
    AlgebraElement cur = one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = mulgen_elem(cur, *it);
    int k = M.odd_count(s_);
    if ((k * (k - 1) / 2) & 1) cur = cur.scaled(-1);
    return bar_memo_.insert(M, std::move(cur));
  }

  /// exponent e with x(M) = q^e x^M
  int x_norm_exponent(const ExpMatrix& M) const {
    int N = s_.N(), e = 0;
    for (int i = 1; i <= N; ++i) {
      int sg = s_.parity(i) ? -1 : 1;
      for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) e -= sg * M(i, j) * M(i, k);
    }
    for (int l = 1; l <= N; ++l) {
      int sg = s_.parity(l) ? -1 : 1;
      for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) e -= sg * M(a, l) * M(b, l);
    }
    return e;
  }
  AlgebraElement x_norm(const ExpMatrix& M) const {
    check(M);
    return AlgebraElement(M, LaurentPoly::q(x_norm_exponent(M)));
  }

  BiWeight biweight(const AlgebraElement& f) const {
    BiWeight w{std::vector<int>(static_cast<std::size_t>(s_.N()), 0), std::vector<int>(static_cast<std::size_t>(s_.N()), 0)};
    bool first = true;
    for (auto& [M, c] : f) {
      BiWeight b{M.ro(), M.co()};
      if (first) {
        w = b;
        first = false;
      } else if (!(b == w)) {
        throw NonHomogeneous("element is not biweight-homogeneous");
      }
    }
    return w;
  }

  /// parity of a homogeneous element (0 for zero)
  int parity(const AlgebraElement& f) const {
    int p = -1;
    for (auto& [M, c] : f) {
      int pm = M.parity(s_);
      if (p >= 0 && p != pm) throw NonHomogeneous("element has mixed parity");
      p = pm;
    }
    return p < 0 ? 0 : p;
  }

  void check(const ExpMatrix& M) const {
    if (!M.valid(s_)) throw UsageError("invalid exponent matrix for shape: " + M.str());
  }

 private:
  Shape s_;
  mutable MemoTable<GenKey, AlgebraElement, GenKeyHash> memo_;
  mutable MemoTable<ExpMatrix, AlgebraElement> bar_memo_;
};

}  // namespace qsuper
