#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "superalgebra.hpp"

namespace qsuper {

using ExpVec = std::vector<int>;
// element of O_q(M) (x) A_q or O_q(M) (x) A_q^*, keyed by superspace monomial
using CoactionMap = std::map<ExpVec, AlgebraElement>;

inline int perm_length(const std::vector<int>& p) {
  int L = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++L;
  return L;
}

/// (a,b) = sum_{i>j} (a_i b_j - a_j b_i)
inline int pairing(const ExpVec& a, const ExpVec& b) {
  int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) r += a[i] * b[j] - a[j] * b[i];
  return r;
}

inline ExpVec indicator(int N, const std::vector<int>& idx) {
  ExpVec v(static_cast<std::size_t>(N), 0);
  for (int i : idx) {
    if (i < 1 || i > N) throw UsageError("minor index out of range");
    ++v[static_cast<std::size_t>(i - 1)];
  }
  return v;
}

inline std::vector<int> interval(int lo, int hi) {
  std::vector<int> r;
  for (int i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

/// Quantum superspaces A_q (star = false) and A_q^* (star = true) and the
/// coaction-defined minors.
class Minors {
 public:
  explicit Minors(const SuperAlgebra& alg) : alg_(alg), s_(alg.shape()) {}

  const SuperAlgebra& algebra() const { return alg_; }

  // parity of the i-th superspace variable (1-based)
  int var_parity(int i, bool star) const { return star ? 1 - s_.parity(i) : s_.parity(i); }

  bool valid_vec(const ExpVec& a, bool star) const {
    if (static_cast<int>(a.size()) != s_.N()) return false;
    for (int i = 1; i <= s_.N(); ++i) {
      int v = a[static_cast<std::size_t>(i - 1)];
      if (v < 0) return false;
      if (var_parity(i, star) && v > 1) return false;
    }
    return true;
  }

  int vec_parity(const ExpVec& a, bool star) const {
    int p = 0;
    for (int i = 1; i <= s_.N(); ++i) p += a[static_cast<std::size_t>(i - 1)] * var_parity(i, star);
    return p & 1;
  }

  /// x^c x^{c'} = kappa * x^{c+c'} in A_q (or A_q^*)
  LaurentPoly reorder_coeff(const ExpVec& c, const ExpVec& cp, bool star) const {
    int N = s_.N();
    int e = 0, sg = 1;
    for (int j = 1; j <= N; ++j) {
      int pj = var_parity(j, star);
      if (pj && c[static_cast<std::size_t>(j - 1)] + cp[static_cast<std::size_t>(j - 1)] > 1) return {};
      for (int k = j + 1; k <= N; ++k) {
        int cnt = c[static_cast<std::size_t>(k - 1)] * cp[static_cast<std::size_t>(j - 1)];
        if (!cnt) continue;
        int pk = var_parity(k, star);
        if ((pk * pj * cnt) & 1) sg = -sg;
        // x_k x_j = s q^{-2} x_j x_k in A_q; xi_k xi_j = s q^{2} xi_j xi_k in A_q^*
        e += (star ? 2 : -2) * cnt;
      }
    }
    return LaurentPoly::monomial(e, sg);
  }

  /// delta(x^a) = sum_b Delta(a,b) (x) x^b
  const CoactionMap& coact(const ExpVec& a) const { return coact_impl(a, false); }
  /// delta^*(xi^a) = sum_b Delta(a,b)^* (x) xi^b
  const CoactionMap& coact_star(const ExpVec& a) const { return coact_impl(a, true); }

  AlgebraElement minor(const ExpVec& a, const ExpVec& b, bool star) const {
    const auto& m = coact_impl(a, star);
    auto it = m.find(b);
    return it == m.end() ? AlgebraElement() : it->second;
  }
  AlgebraElement minor_rows_cols(const std::vector<int>& rows, const std::vector<int>& cols, bool star) const {
    return minor(indicator(s_.N(), rows), indicator(s_.N(), cols), star);
  }

  /// sum_sigma (-q^e)^{l(sigma)} x_{r_1 c_sigma(1)} ... x_{r_k c_sigma(k)}
  AlgebraElement qdet(const std::vector<int>& rows, const std::vector<int>& cols, int e) const {
    if (rows.size() != cols.size()) throw UsageError("qdet needs as many rows as columns");
    std::vector<int> p(rows.size());
    std::iota(p.begin(), p.end(), 0);
    AlgebraElement r;
    do {
      int L = perm_length(p);
      std::vector<int> w;
      for (std::size_t t = 0; t < rows.size(); ++t) w.push_back(s_.gen(rows[t], cols[static_cast<std::size_t>(p[t])]));
      r.add(alg_.mul_word(w), LaurentPoly::monomial(e * L, (L & 1) ? -1 : 1));
    } while (std::next_permutation(p.begin(), p.end()));
    return r;
  }

  AlgebraElement det_q_A() const { return qdet(interval(1, s_.m), interval(1, s_.m), 2); }
  AlgebraElement det_qinv_D() const { return qdet(interval(s_.m + 1, s_.N()), interval(s_.m + 1, s_.N()), -2); }

  /// det_q of A with row l and column k removed
  AlgebraElement sub_minor_A(int l, int k) const {
    if (l < 1 || l > s_.m || k < 1 || k > s_.m) throw UsageError("sub_minor_A index out of range");
    std::vector<int> rows, cols;
    for (int i = 1; i <= s_.m; ++i) {
      if (i != l) rows.push_back(i);
      if (i != k) cols.push_back(i);
    }
    if (rows.empty()) return alg_.one();
    return qdet(rows, cols, 2);
  }

  /// Delta([1,r],[m+n-r+1,m+n])^*
  AlgebraElement covariant_minor_star(int r) const {
    if (r < 1 || r > std::min(s_.m, s_.n)) throw UsageError("covariant minor size out of range");
    return minor_rows_cols(interval(1, r), interval(s_.N() - r + 1, s_.N()), true);
  }
  /// Delta([m+n-s+1,m+n],[1,s])
  AlgebraElement covariant_minor(int sz) const {
    if (sz < 1 || sz > std::min(s_.m, s_.n)) throw UsageError("covariant minor size out of range");
    return minor_rows_cols(interval(s_.N() - sz + 1, s_.N()), interval(1, sz), false);
  }

  struct LaplaceEntry {
    ExpVec b;
    bool pass;
  };
  struct LaplaceReport {
    std::vector<LaplaceEntry> entries;
    bool all_pass() const {
      return std::all_of(entries.begin(), entries.end(), [](const LaplaceEntry& e) { return e.pass; });
    }
  };

  /// Laplace expansion of Delta(a+a',b) with the pairing (a,a') taken literally:
  /// sign (-1)^{[c]([a']+[c'])} and power q^{2(a,a')-2(c,c')}.
  LaplaceReport laplace_verify(const ExpVec& a, const ExpVec& ap, bool star) const {
    return laplace_impl(a, ap, star, false);
  }

  /// Same expansion with the reordering scalars of the superspace itself:
  /// kappa(a,a') Delta(a+a',b) = sum sign kappa(c,c') Delta(a,c) Delta(a',c').
  LaplaceReport laplace_verify_reordered(const ExpVec& a, const ExpVec& ap, bool star) const {
    return laplace_impl(a, ap, star, true);
  }

 private:
  const CoactionMap& coact_impl(const ExpVec& a, bool star) const {
    if (!valid_vec(a, star)) throw UsageError("invalid superspace exponent vector");
    {
      std::lock_guard lk(mu_);
      auto& cache = star ? star_cache_ : cache_;
      auto it = cache.find(a);
      if (it != cache.end()) return it->second;
    }
    int N = s_.N();
    CoactionMap cur;
    cur.emplace(ExpVec(static_cast<std::size_t>(N), 0), alg_.one());
    for (int i = 1; i <= N; ++i) {
      for (int rep = 0; rep < a[static_cast<std::size_t>(i - 1)]; ++rep) {
        CoactionMap nxt;
        for (auto& [b, F] : cur) {
          int pb = vec_parity(b, star);
          for (int j = 1; j <= N; ++j) {
            ExpVec ej(static_cast<std::size_t>(N), 0);
            ej[static_cast<std::size_t>(j - 1)] = 1;
            LaurentPoly kap = reorder_coeff(b, ej, star);
            if (kap.is_zero()) continue;
            int g = s_.gen(i, j);
            if (pb & s_.gpar(g)) kap = -kap;
            ExpVec b2 = b;
            ++b2[static_cast<std::size_t>(j - 1)];
            AlgebraElement t = alg_.mulgen_elem(F, g).scaled(kap);
            auto [it, fresh] = nxt.try_emplace(b2, t);
            if (!fresh) it->second += t;
          }
        }
        cur.clear();
        for (auto& [b, F] : nxt)
          if (!F.is_zero()) cur.emplace(b, std::move(F));
      }
    }
    std::lock_guard lk(mu_);
    auto& cache = star ? star_cache_ : cache_;
    return cache.try_emplace(a, std::move(cur)).first->second;
  }

  int brace(const ExpVec& a) const {
    int p = 0;
    for (int i = 1; i <= s_.N(); ++i) p += a[static_cast<std::size_t>(i - 1)] * (s_.parity(i) + 1);
    return p;
  }
  int bracket(const ExpVec& a) const {
    int p = 0;
    for (int i = 1; i <= s_.N(); ++i) p += a[static_cast<std::size_t>(i - 1)] * s_.parity(i);
    return p;
  }

  LaplaceReport laplace_impl(const ExpVec& a, const ExpVec& ap, bool star, bool reordered) const {
    int N = s_.N();
    ExpVec sum(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + ap[static_cast<std::size_t>(i)];
    LaplaceReport rep;
    if (!valid_vec(a, star) || !valid_vec(ap, star)) throw UsageError("invalid Laplace exponent vectors");
    bool sum_valid = valid_vec(sum, star);
    const auto& ca = coact_impl(a, star);
    const auto& cap = coact_impl(ap, star);
    std::map<ExpVec, AlgebraElement> rhs;
    for (auto& [c, Fc] : ca) {
      for (auto& [cp, Fcp] : cap) {
        ExpVec b(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) b[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + cp[static_cast<std::size_t>(i)];
        int sgnexp = star ? brace(c) * (brace(ap) + brace(cp)) : bracket(c) * (bracket(ap) + bracket(cp));
        LaurentPoly coef;
        if (reordered) {
          coef = reorder_coeff(c, cp, star);
        } else {
          coef = LaurentPoly::monomial(2 * pairing(a, ap) - 2 * pairing(c, cp));
        }
        if (sgnexp & 1) coef = -coef;
        AlgebraElement t = alg_.mul(Fc, Fcp).scaled(coef);
        auto [it, fresh] = rhs.try_emplace(b, t);
        if (!fresh) it->second += t;
      }
    }
    std::map<ExpVec, AlgebraElement> lhs;
    if (sum_valid) {
      LaurentPoly k = reordered ? reorder_coeff(a, ap, star) : LaurentPoly(1);
      for (auto& [b, F] : coact_impl(sum, star)) lhs.emplace(b, F.scaled(k));
    }
    std::map<ExpVec, bool> keys;
    for (auto& [b, F] : lhs) keys[b] = true;
    for (auto& [b, F] : rhs) keys[b] = true;
    for (auto& [b, unused] : keys) {
      AlgebraElement l = lhs.count(b) ? lhs.at(b) : AlgebraElement();
      AlgebraElement r = rhs.count(b) ? rhs.at(b) : AlgebraElement();
      rep.entries.push_back({b, l == r});
    }
    return rep;
  }

  const SuperAlgebra& alg_;
  Shape s_;
  mutable std::mutex mu_;
  mutable std::map<ExpVec, CoactionMap> cache_, star_cache_;
};

}  // namespace qsuper
