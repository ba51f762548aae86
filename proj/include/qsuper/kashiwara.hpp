#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "actions.hpp"
#include "linalg.hpp"
#include "superalgebra.hpp"

namespace qsuper {

/// (x_ij x_kl - q^2 x_il x_kj)^s by direct multiplication
inline AlgebraElement minor_power(const SuperAlgebra& A, int i, int j, int k, int l, int s) {
  AlgebraElement base = A.mul(A.gen(i, j), A.gen(k, l));
  base.add(A.mul(A.gen(i, l), A.gen(k, j)), LaurentPoly::monomial(2, -1));
  AlgebraElement r = A.one();
  for (int t = 0; t < s; ++t) r = A.mul(r, base);
  return r;
}

/// sum_t (-q^2)^t binom(s,t)_{q^4} q^{4t(t-s)} x_ij^{s-t} x_il^t x_kj^t x_kl^{s-t}
inline AlgebraElement minor_power_expansion(const SuperAlgebra& A, int i, int j, int k, int l, int s) {
  const Shape& sh = A.shape();
  AlgebraElement r;
  for (int t = 0; t <= s; ++t) {
    ExpMatrix M(sh.N());
    M(i, j) += s - t;
    M(i, l) += t;
    M(k, j) += t;
    M(k, l) += s - t;
    if (!M.valid(sh)) continue;  // odd square
    LaurentPoly c = q_binom(s, t, 4) * LaurentPoly::monomial(2 * t + 4 * t * (t - s), (t & 1) ? -1 : 1);
    r.add(M, c);
  }
  return r;
}

/// index of a two-row adapted element: staircase rows, 2x2 minors M_{jk}, tail rows >= 3
struct AdaptedIndex {
  std::vector<int> row1, row2;
  std::vector<std::pair<int, int>> minors;  // sorted by (k, j)
  ExpMatrix tail;
  friend bool operator==(const AdaptedIndex&, const AdaptedIndex&) = default;
  friend auto operator<=>(const AdaptedIndex&, const AdaptedIndex&) = default;
};

struct AdaptedElement {
  AdaptedIndex index;
  int l = 0;
  AlgebraElement value;  // q^l x(staircase) prod M x^tail
  ExpMatrix diag;        // the monomial carrying the unit coefficient
};

/// Two-row adapted basis of O_q(M_{m|1}) blocks and the operators E~_1, F~_1.
class TwoRowAdapted {
 public:
  explicit TwoRowAdapted(const SuperAlgebra& A) : A_(A), s_(A.shape()) {
    if (s_.n != 1) throw PreconditionError("two-row adapted basis needs n = 1");
  }

  /// M_{jk} = x_{1j}x_{2k} - q^2 x_{1k}x_{2j}
  AlgebraElement minor(int j, int k) const {
    AlgebraElement r = A_.mul(A_.gen(1, j), A_.gen(2, k));
    r.add(A_.mul(A_.gen(1, k), A_.gen(2, j)), LaurentPoly::monomial(2, -1));
    return r;
  }

  bool staircase(const std::vector<int>& u, const std::vector<int>& v) const {
    int lo = s_.N() + 1, hi = 0;
    for (int t = 1; t <= s_.N(); ++t) {
      if (u[static_cast<std::size_t>(t - 1)]) lo = std::min(lo, t);
      if (v[static_cast<std::size_t>(t - 1)]) hi = std::max(hi, t);
    }
    return hi <= lo;
  }

  ExpMatrix stair_matrix(const std::vector<int>& u, const std::vector<int>& v) const {
    ExpMatrix S(s_.N());
    for (int t = 1; t <= s_.N(); ++t) {
      S(1, t) = u[static_cast<std::size_t>(t - 1)];
      S(2, t) = v[static_cast<std::size_t>(t - 1)];
    }
    return S;
  }

  /// x(staircase) prod M x^tail, without the q^l factor
  AlgebraElement raw(const AdaptedIndex& ix) const {
    ExpMatrix S = stair_matrix(ix.row1, ix.row2);
    if (!S.valid(s_)) return {};
    AlgebraElement r = A_.x_norm(S);
    for (auto& [j, k] : ix.minors) r = A_.mul(r, minor(j, k));
    return A_.mul(r, AlgebraElement(ix.tail));
  }

  /// the unique l making q^l raw = x(diag) + qZ[q]-combination
  AdaptedElement element(const AdaptedIndex& ix) const {
    AlgebraElement r = raw(ix);
    if (r.is_zero()) throw UniquenessFailure("adapted element vanishes");
    int lo = 0;
    bool first = true;
    for (auto& [M, c] : r) {
      lo = first ? c.min_exp() : std::min(lo, c.min_exp());
      first = false;
    }
    AdaptedElement e;
    e.index = ix;
    e.l = -lo;
    e.value = r.scaled(LaurentPoly::q(e.l));
    int hits = 0;
    for (auto& [M, c] : e.value)
      if (c.coeff(0) != 0) {
        ++hits;
        e.diag = M;
        if (!(c == LaurentPoly(1))) throw UniquenessFailure("constant term is not a lone 1");
      }
    if (hits != 1) throw UniquenessFailure("no unique diagonal monomial for the adapted element");
    return e;
  }

  std::vector<AdaptedIndex> indices(const std::vector<int>& ro, const std::vector<int>& co) const {
    int N = s_.N();
    std::vector<AdaptedIndex> out;
    // tails: rows >= 3 with the given row sums
    std::vector<int> tro(static_cast<std::size_t>(N), 0);
    for (int t = 3; t <= N; ++t) tro[static_cast<std::size_t>(t - 1)] = ro[static_cast<std::size_t>(t - 1)];
    std::vector<ExpMatrix> tails;
    int tdeg = 0;
    for (int v : tro) tdeg += v;
    for (auto& T : enumerate_degree(s_, tdeg))
      if (T.ro() == tro) tails.push_back(T);
    std::vector<std::pair<int, int>> pairs;
    for (int k = 2; k <= N; ++k)
      for (int j = 1; j < k; ++j) pairs.push_back({j, k});
    int r1 = ro[0], r2 = N >= 2 ? ro[1] : 0;
    for (auto& T : tails) {
      std::vector<int> rest = co;
      bool ok = true;
      auto tc = T.co();
      for (int t = 0; t < N; ++t) {
        rest[static_cast<std::size_t>(t)] -= tc[static_cast<std::size_t>(t)];
        if (rest[static_cast<std::size_t>(t)] < 0) ok = false;
      }
      if (!ok) continue;
      for (int p = 0; p <= std::min(r1, r2); ++p) {
        std::vector<std::pair<int, int>> chosen;
        multisets(pairs, 0, p, chosen, [&](const std::vector<std::pair<int, int>>& ms) {
          std::vector<int> left = rest;
          for (auto& [j, k] : ms) {
            --left[static_cast<std::size_t>(j - 1)];
            --left[static_cast<std::size_t>(k - 1)];
          }
          for (int v : left)
            if (v < 0) return;
          for (auto& uv : split_rows(left, r1 - p, r2 - p)) {
            if (!staircase(uv.first, uv.second)) continue;
            if (!stair_matrix(uv.first, uv.second).valid(s_)) continue;
            out.push_back(AdaptedIndex{uv.first, uv.second, ms, T});
          }
        });
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// adapted basis of a biweight block; the diagonal monomials must match the block
  std::vector<AdaptedElement> basis(const std::vector<int>& ro, const std::vector<int>& co) const {
    std::vector<AdaptedElement> out;
    std::set<ExpMatrix> diags;
    for (auto& ix : indices(ro, co)) {
      AdaptedElement e = element(ix);
      if (!diags.insert(e.diag).second) throw UniquenessFailure("two adapted elements share a diagonal monomial");
      out.push_back(std::move(e));
    }
    auto block = enumerate_block(s_, ro, co);
    if (block.size() != out.size() || !std::equal(block.begin(), block.end(), diags.begin()))
      throw UniquenessFailure("adapted family does not match the monomial block");
    return out;
  }

  /// coordinates of f over a block basis
  std::vector<LaurentPoly> coordinates(const AlgebraElement& f, const std::vector<AdaptedElement>& B) const {
    std::map<ExpMatrix, std::size_t> row;
    for (auto& e : B)
      for (auto& [M, c] : e.value) row.try_emplace(M, 0);
    for (auto& [M, c] : f)
      if (!row.count(M)) throw NotAdapted("element leaves the adapted block");
    std::size_t k = 0;
    for (auto& [M, v] : row) v = k++;
    LMatrix Mx(row.size(), LVector(B.size()));
    LVector rhs(row.size());
    for (std::size_t c = 0; c < B.size(); ++c)
      for (auto& [M, v] : B[c].value) Mx[row.at(M)][c] = v;
    for (auto& [M, v] : f) rhs[row.at(M)] = v;
    try {
      return solve_linear(Mx, rhs, B.size());
    } catch (const LinearSolveFailure&) {
      throw NotAdapted("element is not a Laurent combination of the adapted basis");
    }
  }

  /// E~_1 on one adapted element
  AlgebraElement e1(const AdaptedElement& e) const { return shift(e, true); }
  /// F~_1 on one adapted element
  AlgebraElement f1(const AdaptedElement& e) const { return shift(e, false); }

  /// E~_1 or F~_1 extended linearly over the block basis
  AlgebraElement apply(const AlgebraElement& f, const std::vector<AdaptedElement>& B, bool raise) const {
    auto c = coordinates(f, B);
    AlgebraElement r;
    for (std::size_t k = 0; k < B.size(); ++k)
      if (!c[k].is_zero()) r.add(shift(B[k], raise), c[k]);
    return r;
  }

 private:
  AlgebraElement shift(const AdaptedElement& e, bool raise) const {
    const auto& u = e.index.row1;
    const auto& v = e.index.row2;
    int N = s_.N();
    AlgebraElement r;
    for (int k = 1; k <= N; ++k) {
      int pw = 0;
      std::vector<int> u2 = u, v2 = v;
      if (raise) {
        if (v[static_cast<std::size_t>(k - 1)] < 1) continue;
        for (int t = 1; t < k; ++t) pw += 2 * v[static_cast<std::size_t>(t - 1)];
        --v2[static_cast<std::size_t>(k - 1)];
        ++u2[static_cast<std::size_t>(k - 1)];
      } else {
        if (u[static_cast<std::size_t>(k - 1)] < 1) continue;
        for (int t = k + 1; t <= N; ++t) pw += 2 * u[static_cast<std::size_t>(t - 1)];
        --u2[static_cast<std::size_t>(k - 1)];
        ++v2[static_cast<std::size_t>(k - 1)];
      }
      AdaptedIndex ix = e.index;
      ix.row1 = u2;
      ix.row2 = v2;
      r.add(raw(ix), LaurentPoly::q(pw + e.l));
    }
    return r;
  }

  template <class F>
  void multisets(const std::vector<std::pair<int, int>>& pool, std::size_t from, int left,
                 std::vector<std::pair<int, int>>& cur, F&& emit) const {
    if (left == 0) {
      emit(cur);
      return;
    }
    for (std::size_t p = from; p < pool.size(); ++p) {
      cur.push_back(pool[p]);
      multisets(pool, p, left - 1, cur, emit);
      cur.pop_back();
    }
  }

  // all (u, v) with u + v = c, |u| = a, |v| = b
  std::vector<std::pair<std::vector<int>, std::vector<int>>> split_rows(const std::vector<int>& c, int a,
                                                                        int b) const {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    int total = 0;
    for (int v : c) total += v;
    if (a < 0 || b < 0 || a + b != total) return out;
    std::vector<int> u(c.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t t, int left) {
      if (t == c.size()) {
        if (left == 0) {
          std::vector<int> v(c.size());
          for (std::size_t k = 0; k < c.size(); ++k) v[k] = c[k] - u[k];
          out.push_back({u, v});
        }
        return;
      }
      for (int x = 0; x <= std::min(c[t], left); ++x) {
        u[t] = x;
        rec(t + 1, left - x);
      }
      u[t] = 0;
    };
    rec(0, a);
    return out;
  }

  const SuperAlgebra& A_;
  Shape s_;
};

struct KashiwaraReport {
  int blocks = 0;      // blocks with nonzero invariants
  int invariants = 0;  // invariant elements tested
  int violations = 0;  // nonzero E~_1 / F~_1 images
  int unadapted = 0;   // blocks where the adapted family is not a basis
  std::vector<std::string> notes;
  bool pass() const { return violations == 0 && unadapted == 0; }
};

/// E~_1 f = 0 (E_1 in S) and F~_1 f = 0 (F_1 in S) for left S-invariants of O_q(M_{m|1}) up to max_degree
inline KashiwaraReport kashiwara_window_check(const Actions& Ac, const SubalgebraSpec& S, int max_degree) {
  const LocalAlgebra& L = Ac.local();
  const SuperAlgebra& A = L.algebra();
  const Shape& sh = A.shape();
  TwoRowAdapted T(A);
  bool e1 = false, f1 = false;
  for (auto& g : S.left) {
    if (g.kind == GenSymbol::E && g.index == 1) e1 = true;
    if (g.kind == GenSymbol::F && g.index == 1) f1 = true;
  }
  KashiwaraReport rep;
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> weights;
    for (auto& M : enumerate_degree(sh, deg)) weights.insert({M.ro(), M.co()});
    for (auto& [ro, co] : weights) {
      auto block = enumerate_block(sh, ro, co);
      std::vector<LocalElement> span;
      for (auto& M : block) span.push_back(L.to_mixed(AlgebraElement(M)));
      auto vecs = Ac.invariant_coefficients(span, S);
      if (vecs.empty()) continue;
      ++rep.blocks;
      std::string tag = "block " + vec_str(ro) + "/" + vec_str(co);
      std::vector<AdaptedElement> B;
      try {
        B = T.basis(ro, co);
      } catch (const UniquenessFailure& e) {
        ++rep.unadapted;
        rep.notes.push_back(tag + ": " + e.what());
        continue;
      }
      for (auto& v : vecs) {
        AlgebraElement f;
        for (std::size_t c = 0; c < block.size(); ++c) f.add(block[c], v[c]);
        ++rep.invariants;
        if (e1 && !T.apply(f, B, true).is_zero()) {
          ++rep.violations;
          rep.notes.push_back(tag + ": E~_1 f != 0");
        }
        if (f1 && !T.apply(f, B, false).is_zero()) {
          ++rep.violations;
          rep.notes.push_back(tag + ": F~_1 f != 0");
        }
      }
    }
  }
  return rep;
}

}  // namespace qsuper
