#pragma once

#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "minors.hpp"

namespace qsuper {

/// Index of P(M;a,d) = (det_q A)^a x^{M_ABC} y^{M_4} (det_{q^-1} D')^d.
/// The D-block of M holds y-exponents.
struct LocalKey {
  ExpMatrix M;
  int a = 0;
  int d = 0;
  friend bool operator==(const LocalKey&, const LocalKey&) = default;
  friend std::strong_ordering operator<=>(const LocalKey& x, const LocalKey& y) {
    if (auto c = x.M <=> y.M; c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.d <=> y.d;
  }
  std::size_t hash() const { return M.hash() * 131u + static_cast<std::size_t>(a * 7919 + d * 104729); }
};
struct LocalKeyHash {
  std::size_t operator()(const LocalKey& k) const { return k.hash(); }
};

using LocalElement = Poly<LocalKey>;
using YPoly = Poly<ExpMatrix>;  // polynomial in the y-entries only

// one factor of a mixed word
struct Letter {
  enum Kind { A, X, Y, D } kind;
  int v;  // power for A/D, generator for X/Y
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct KeyLetter {
  LocalKey k;
  Letter l;
  friend bool operator==(const KeyLetter&, const KeyLetter&) = default;
};
struct KeyLetterHash {
  std::size_t operator()(const KeyLetter& x) const {
    return x.k.hash() * 1000003u + static_cast<std::size_t>(x.l.kind * 97 + x.l.v + 50);
  }
};

/// O_q(GL_{m|n}) in mixed coordinates: x_{ij} with i<=m or j<=m, the entries
/// y_{mu nu} of D' = D - C A^{-1} B, and powers of det_q A and det_{q^-1} D'.
class LocalAlgebra {
 public:
  explicit LocalAlgebra(const SuperAlgebra& alg) : alg_(alg), s_(alg.shape()), mn_(alg) { bootstrap(); }

  const Shape& shape() const { return s_; }
  const SuperAlgebra& algebra() const { return alg_; }
  const Minors& minors() const { return mn_; }

  bool is_D(int g) const { return s_.in_D(g); }

  // ---- O_q(M) data -------------------------------------------------------

  const AlgebraElement& detA() const { return detA_; }

  /// sum_{k,l} (-q^2)^{k-l} x_{mu k} A_{lk} x_{l nu}
  AlgebraElement Zp(int mu, int nu) const {
    AlgebraElement r;
    for (int k = 1; k <= s_.m; ++k)
      for (int l = 1; l <= s_.m; ++l) {
        AlgebraElement t = alg_.mul(alg_.mul(alg_.gen(mu, k), mn_.sub_minor_A(l, k)), alg_.gen(l, nu));
        int e = k - l;
        r.add(t, LaurentPoly::monomial(2 * e, (e & 1) ? -1 : 1));
      }
    return r;
  }
  /// y_{mu nu} det_q A as an element of O_q(M)
  AlgebraElement W(int mu, int nu) const {
    AlgebraElement r = alg_.mul(alg_.gen(mu, nu), detA_);
    r.add(Zp(mu, nu), LaurentPoly::monomial(-2, -1));
    return r;
  }

  // ---- constructors -------------------------------------------------------

  LocalElement one() const { return LocalElement(LocalKey{ExpMatrix(s_.N()), 0, 0}); }
  LocalElement key(const LocalKey& k) const { return reduce_key(k); }
  LocalElement detA_pow(int e) const { return LocalElement(LocalKey{ExpMatrix(s_.N()), e, 0}); }
  LocalElement detD_pow(int e) const { return LocalElement(LocalKey{ExpMatrix(s_.N()), 0, e}); }
  LocalElement berezinian() const { return LocalElement(LocalKey{ExpMatrix(s_.N()), 1, -1}); }

  /// x_{ij}; D-block entries are expressed through y
  LocalElement x(int i, int j) const {
    int g = s_.gen(i, j);
    if (is_D(g)) return xD_.at(g);
    return reduce_key(LocalKey{unit_matrix(g), 0, 0});
  }
  LocalElement y(int mu, int nu) const {
    int g = s_.gen(mu, nu);
    if (!is_D(g)) throw UsageError("y index must lie in the D block");
    return reduce_key(LocalKey{unit_matrix(g), 0, 0});
  }

  /// y_{mu nu} written with the single (det_q A)^{-1} rightmost, in O_q(M) terms
  std::pair<AlgebraElement, int> y_entry(int mu, int nu) const {
    if (!is_D(s_.gen(mu, nu))) throw UsageError("y index must lie in the D block");
    return {W(mu, nu), 1};
  }

  // ---- arithmetic ---------------------------------------------------------

  LocalElement mul(const LocalElement& f, const LocalElement& g) const {
    LocalElement r;
    for (auto& [k2, c2] : g) {
      auto L = letters(k2);
      for (auto& [k1, c1] : f) r.add(mul_letters(k1, L), c1 * c2);
    }
    return r;
  }

  LocalElement pow(const LocalElement& f, int e) const {
    if (e < 0) throw UsageError("negative power of a general element");
    LocalElement r = one();
    for (int i = 0; i < e; ++i) r = mul(r, f);
    return r;
  }

  /// bar: letters reversed with super sign, coefficients conjugated
  LocalElement bar(const LocalElement& f) const {
    LocalElement r;
    for (auto& [k, c] : f) r.add(bar_key(k), c.bar());
    return r;
  }

  const LocalElement& bar_key(const LocalKey& k) const {
    if (auto* hit = bar_memo_.find(k)) return *hit;
    auto L = letters(k);
    LocalElement cur = one();
    for (auto it = L.rbegin(); it != L.rend(); ++it) cur = mul_letter_elem(cur, *it);
    int odd = k.M.odd_count(s_);
    if ((odd * (odd - 1) / 2) & 1) cur = cur.scaled(-1);
    return bar_memo_.insert(k, std::move(cur));
  }

  /// O_q(M) element in mixed coordinates
  LocalElement to_mixed(const AlgebraElement& f) const {
    LocalElement r;
    for (auto& [M, c] : f) r.add(to_mixed_mono(M), c);
    return r;
  }

  /// f = F (det_q A)^{-k} with F in O_q(M); needs d >= 0 in every term
  std::pair<AlgebraElement, int> from_mixed(const LocalElement& f) const {
    int k = 0;
    for (auto& [K, c] : f) {
      if (K.d < 0) throw UsageError("from_mixed: negative power of det D' has no polynomial form");
      int ny = 0;
      for (int g = 0; g < s_.num_gens(); ++g)
        if (is_D(g)) ny += K.M.at(g);
      k = std::max(k, ny + s_.n * K.d - K.a);
    }
    AlgebraElement F;
    for (auto& [K, c] : f) F.add(from_mixed_key(K, k), c);
    return {F, k};
  }

  /// reduce arbitrary keys to the constrained P-basis
  LocalElement reduce(const LocalElement& f) const {
    LocalElement r;
    for (auto& [k, c] : f) r.add(reduce_key(k), c);
    return r;
  }
  bool is_reduced(const LocalKey& k) const {
    bool fullA = true, fullD = true;
    for (int i = 1; i <= s_.m; ++i) fullA = fullA && k.M(i, i) >= 1;
    for (int i = s_.m + 1; i <= s_.N(); ++i) fullD = fullD && k.M(i, i) >= 1;
    return !fullA && !fullD;
  }

  /// f commutes with every mixed generator and both determinant powers
  bool is_central(const LocalElement& f) const {
    for (auto& g : generators())
      if (!(mul(f, g) == mul(g, f))) return false;
    return true;
  }

  std::vector<LocalElement> generators() const {
    std::vector<LocalElement> gs;
    for (int g = 0; g < s_.num_gens(); ++g) {
      int i = s_.row(g), j = s_.col(g);
      gs.push_back(is_D(g) ? y(i, j) : x(i, j));
      if (is_D(g)) gs.push_back(x(i, j));
    }
    for (int e : {1, -1}) {
      gs.push_back(detA_pow(e));
      gs.push_back(detD_pow(e));
    }
    return gs;
  }

  /// image in O_q(SL): (det D')^d replaced through Ber_q = 1
  LocalElement sl_project(const LocalElement& f) const {
    LocalElement r;
    for (auto& [k, c] : f) {
      int w = k.M.odd_count(s_);
      r.add(LocalKey{k.M, k.a + k.d, 0}, c * LaurentPoly::q(-2 * w * k.d));
    }
    return r;
  }

  // ---- y-subalgebra (raw, no determinant extraction) ----------------------

  const YPoly& detDp_y() const { return detDp_y_; }

  YPoly ymul(const YPoly& f, const YPoly& g) const {
    YPoly r;
    for (auto& [B, cb] : g) {
      YPoly cur = f;
      for (int h : B.word()) {
        YPoly nxt;
        for (auto& [Y, c] : cur)
          for (auto& [Y2, c2] : ymulgen_raw(Y, h)) nxt.add(Y2, c * c2);
        cur = std::move(nxt);
      }
      r.add(cur, cb);
    }
    return r;
  }
  YPoly ybar(const YPoly& f) const {
    YPoly r;
    for (auto& [Y, c] : f) {
      std::vector<int> w = Y.word();
      YPoly cur{ExpMatrix(s_.N())};
      for (auto it = w.rbegin(); it != w.rend(); ++it) cur = ymul(cur, YPoly(unit_matrix(*it)));
      r.add(cur, c.bar());
    }
    return r;
  }
  LocalElement embed_y(const YPoly& f) const {
    LocalElement r;
    for (auto& [Y, c] : f) r.add(reduce_key(LocalKey{Y, 0, 0}), c);
    return r;
  }
  LocalElement detD_as_y() const { return embed_y(detDp_y_); }

  // ---- tables (for inspection and tests) ----------------------------------

  const LocalElement& xD(int g) const { return xD_.at(g); }
  const LocalElement& YX(int gy, int gx) const { return YX_.at({gy, gx}); }
  const YPoly& YYraw(int g1, int g2) const { return YYraw_.at({g1, g2}); }

  std::vector<Letter> letters(const LocalKey& k) const {
    std::vector<Letter> L;
    if (k.a) L.push_back({Letter::A, k.a});
    for (int g = 0; g < s_.num_gens(); ++g)
      if (!is_D(g))
        for (int t = 0; t < k.M.at(g); ++t) L.push_back({Letter::X, g});
    for (int g = 0; g < s_.num_gens(); ++g)
      if (is_D(g))
        for (int t = 0; t < k.M.at(g); ++t) L.push_back({Letter::Y, g});
    if (k.d) L.push_back({Letter::D, k.d});
    return L;
  }

  LocalElement mul_letter_elem(const LocalElement& f, const Letter& l) const {
    LocalElement r;
    for (auto& [k, c] : f) r.add(mul_letter(k, l), c);
    return r;
  }

  LocalElement mul_letters(const LocalKey& k, const std::vector<Letter>& L) const {
    LocalElement cur(k);
    for (auto& l : L) cur = mul_letter_elem(cur, l);
    return cur;
  }

  /// P(key) times one letter on the right
  const LocalElement& mul_letter(const LocalKey& k, const Letter& l) const {
    KeyLetter kl{k, l};
    if (auto* hit = ml_memo_.find(kl)) return *hit;
    LocalElement r;
    switch (l.kind) {
      case Letter::A: {
        int w = k.M.odd_count(s_);
        r.add(LocalKey{k.M, k.a + l.v, k.d}, LaurentPoly::q(-2 * l.v * w));
        break;
      }
      case Letter::D:
        r.add(LocalKey{k.M, k.a, k.d + l.v}, 1);
        break;
      case Letter::Y: {
        ExpMatrix X = xpart(k.M), Y = ypart(k.M);
        for (auto& [Y2, c] : ymulgen_raw(Y, l.v)) {
          if (reduce_enabled_) {
            for (auto& [k3, c3] : reduce_y(Y2)) r.add(LocalKey{X + k3.M, k.a, k.d + k3.d}, c * c3);
          } else {
            r.add(LocalKey{X + Y2, k.a, k.d}, c);
          }
        }
        break;
      }
      case Letter::X: {
        if (is_D(l.v)) throw AlgebraError("D-block x letter in mixed word");
        int w = s_.gpar(l.v);
        LaurentPoly shift = LaurentPoly::q(2 * k.d * w);
        ExpMatrix X = xpart(k.M), Y = ypart(k.M);
        LocalElement body;
        if (Y.is_zero()) {
          for (auto& [X2, c] : alg_.mulgen(X, l.v))
            for (auto& [k3, c3] : reduce_x(X2)) body.add(LocalKey{k3.M, k.a + k3.a, 0}, c * c3);
        } else {
          int h = Y.last_gen();
          ExpMatrix Yp = Y;
          --Yp.at(h);
          LocalKey base{X + Yp, k.a, 0};
          for (auto& [k2, c2] : YX_.at({h, l.v})) body.add(mul_letters(base, letters(k2)), c2);
        }
        for (auto& [k4, c4] : body) r.add(LocalKey{k4.M, k4.a, k4.d + k.d}, c4 * shift);
        break;
      }
    }
    return ml_memo_.insert(kl, std::move(r));
  }

  LocalElement reduce_key(const LocalKey& k) const {
    LocalElement r;
    ExpMatrix X = xpart(k.M), Y = ypart(k.M);
    const LocalElement& rx = reduce_x(X);
    if (!reduce_enabled_) {
      for (auto& [kx, cx] : rx) r.add(LocalKey{kx.M + Y, k.a + kx.a, k.d}, cx);
      return r;
    }
    const LocalElement& ry = reduce_y(Y);
    for (auto& [kx, cx] : rx)
      for (auto& [ky, cy] : ry) r.add(LocalKey{kx.M + ky.M, k.a + kx.a, k.d + ky.d}, cx * cy);
    return r;
  }

  ExpMatrix xpart(const ExpMatrix& M) const {
    ExpMatrix X = M;
    for (int g = 0; g < s_.num_gens(); ++g)
      if (is_D(g)) X.at(g) = 0;
    return X;
  }
  ExpMatrix ypart(const ExpMatrix& M) const { return M - xpart(M); }

 private:
  ExpMatrix unit_matrix(int g) const {
    ExpMatrix M(s_.N());
    M.at(g) = 1;
    return M;
  }

  /// x^X = sum (det_q A)^{da} x^{X'} with X' reduced; keys (X', da, 0)
  const LocalElement& reduce_x(const ExpMatrix& X) const {
    if (auto* hit = rx_memo_.find(X)) return *hit;
    LocalElement r;
    bool full = s_.m > 0;
    for (int i = 1; i <= s_.m; ++i) full = full && X(i, i) >= 1;
    if (!full) {
      r.add(LocalKey{X, 0, 0}, 1);
    } else {
      ExpMatrix rest = X - identity_block(s_, true);
      AlgebraElement T = alg_.mul(detA_, AlgebraElement(rest));
      LaurentPoly lead = T.coeff(X);
      if (!lead.is_unit()) throw LinearSolveFailure("det_q A leading coefficient is not a unit at " + X.str());
      LaurentPoly inv = LaurentPoly::monomial(-lead.min_exp(), lead.terms()[0].second);
      for (auto& [k, c] : reduce_x(rest)) r.add(LocalKey{k.M, k.a + 1, 0}, c * inv);
      for (auto& [w, c] : T) {
        if (w == X) continue;
        r.add(reduce_x(w), -(c * inv));
      }
    }
    return rx_memo_.insert(X, std::move(r));
  }

  /// y^Y = sum y^{Y'} (det D')^{dd}; keys (Y', 0, dd)
  const LocalElement& reduce_y(const ExpMatrix& Y) const {
    if (auto* hit = ry_memo_.find(Y)) return *hit;
    LocalElement r;
    bool full = !Y.is_zero();
    for (int i = s_.m + 1; i <= s_.N(); ++i) full = full && Y(i, i) >= 1;
    if (!full) {
      r.add(LocalKey{Y, 0, 0}, 1);
    } else {
      ExpMatrix rest = Y - identity_block(s_, false);
      YPoly T = ymul(detDp_y_, YPoly(rest));
      LaurentPoly lead = T.coeff(Y);
      if (!lead.is_unit()) throw LinearSolveFailure("det D' leading coefficient is not a unit at " + Y.str());
      LaurentPoly inv = LaurentPoly::monomial(-lead.min_exp(), lead.terms()[0].second);
      for (auto& [k, c] : reduce_y(rest)) r.add(LocalKey{k.M, 0, k.d + 1}, c * inv);
      for (auto& [w, c] : T) {
        if (w == Y) continue;
        r.add(reduce_y(w), -(c * inv));
      }
    }
    return ry_memo_.insert(Y, std::move(r));
  }

  /// raw y-monomial times y_g, straightened with the y-y table
  const YPoly& ymulgen_raw(const ExpMatrix& Y, int g) const {
    GenKey key{Y, g};
    if (auto* hit = ym_memo_.find(key)) return *hit;
    YPoly r;
    int h = Y.last_gen();
    if (h < 0 || g >= h) {
      ExpMatrix R = Y;
      ++R.at(g);
      r.add(R, 1);
    } else {
      ExpMatrix Yp = Y;
      --Yp.at(h);
      const YPoly& rel = yy_pair(h, g);
      for (auto& [P, c] : rel) {
        std::vector<int> w = P.word();
        if (w.size() != 2) throw AlgebraError("y-y relation is not quadratic");
        for (auto& [R1, c1] : ymulgen_raw(Yp, w[0]))
          for (auto& [R2, c2] : ymulgen_raw(R1, w[1])) r.add(R2, c * c1 * c2);
      }
    }
    return ym_memo_.insert(key, std::move(r));
  }

  const YPoly& yy_pair(int g1, int g2) const {
    auto it = YYraw_.find({g1, g2});
    if (it != YYraw_.end()) return it->second;
    if (bootstrapping_) {
      compute_yy(g1, g2);
      return YYraw_.at({g1, g2});
    }
    throw AlgebraError("missing y-y relation");
  }

  LocalElement to_mixed_mono(const ExpMatrix& M) const {
    // D-block entries commute to the right of the C entries without sign
    ExpMatrix X = xpart(M);
    LocalElement t = reduce_key(LocalKey{X, 0, 0});
    for (int g = 0; g < s_.num_gens(); ++g)
      if (is_D(g))
        for (int r = 0; r < M.at(g); ++r) t = mul(t, xD_.at(g));
    return t;
  }

  AlgebraElement from_mixed_key(const LocalKey& K, int k) const {
    // A^a X Y D^d (det A)^k ; A^a X = q^{2 a w} X A^a ; y = W A^{-1}, W commutes with A
    int w = K.M.odd_count(s_);
    AlgebraElement F(xpart(K.M), LaurentPoly::q(2 * K.a * w));
    int ny = 0;
    for (int g = 0; g < s_.num_gens(); ++g)
      if (is_D(g))
        for (int t = 0; t < K.M.at(g); ++t) {
          F = alg_.mul(F, W(s_.row(g), s_.col(g)));
          ++ny;
        }
    AlgebraElement dW;
    for (auto& [Y, c] : detDp_y_) {
      AlgebraElement t = alg_.one();
      for (int g : Y.word()) t = alg_.mul(t, W(s_.row(g), s_.col(g)));
      dW.add(t, c);
    }
    for (int t = 0; t < K.d; ++t) F = alg_.mul(F, dW);
    int e = K.a - ny - s_.n * K.d + k;
    for (int t = 0; t < e; ++t) F = alg_.mul(F, detA_);
    return F;
  }

  void compute_yy(int g1, int g2) const {
    if (yy_busy_.count({g1, g2})) throw AlgebraError("cyclic dependency in y-y relations");
    yy_busy_.insert({g1, g2});
    AlgebraElement P = alg_.mul(W(s_.row(g1), s_.col(g1)), W(s_.row(g2), s_.col(g2)));
    LocalElement res;
    for (auto& [Mw, c] : P) res.add(to_mixed_mono(Mw), c);
    res = mul(res, detA_pow(-2));
    YPoly raw;
    for (auto& [k, c] : res) {
      if (k.a != 0 || k.d != 0 || !xpart(k.M).is_zero())
        throw AlgebraError("y-y product left the y-subalgebra");
      raw.add(k.M, c);
    }
    YYraw_[{g1, g2}] = raw;
    yy_busy_.erase({g1, g2});
  }

  void bootstrap() {
    bootstrapping_ = true;
    reduce_enabled_ = false;
    detA_ = mn_.det_q_A();
    int N = s_.N();
    std::vector<int> dgens;
    for (int g = 0; g < N * N; ++g)
      if (is_D(g)) dgens.push_back(g);
    for (int g : dgens) {
      int mu = s_.row(g), nu = s_.col(g);
      AlgebraElement Z = Zp(mu, nu);
      LocalElement e(LocalKey{unit_matrix(g), 0, 0});
      for (auto& [w, c] : Z)
        for (auto& [k, c2] : reduce_x(w)) e.add(LocalKey{k.M, k.a - 1, 0}, c * c2 * LaurentPoly::q(2));
      xD_[g] = e;
    }
    for (int gy : dgens) {
      AlgebraElement Wy = W(s_.row(gy), s_.col(gy));
      for (int gx = 0; gx < N * N; ++gx) {
        if (is_D(gx)) continue;
        AlgebraElement P = alg_.mulgen_elem(Wy, gx);
        LocalElement res;
        for (auto& [Mw, c] : P) res.add(to_mixed_mono(Mw), c);
        res = mul(res, detA_pow(-1)).scaled(LaurentPoly::q(-2 * s_.gpar(gx)));
        YX_[{gy, gx}] = res;
      }
    }
    for (int g1 : dgens)
      for (int g2 : dgens)
        if (g1 > g2 && !YYraw_.count({g1, g2})) compute_yy(g1, g2);
    // det_{q^-1} D' = sum_tau (-q^{-2})^{l(tau)} y_{m+1,m+tau(1)} ... y_{m+n,m+tau(n)}
    std::vector<int> p(static_cast<std::size_t>(s_.n));
    std::iota(p.begin(), p.end(), 0);
    YPoly dp;
    do {
      int L = perm_length(p);
      YPoly t{ExpMatrix(N)};
      for (int r = 0; r < s_.n; ++r) t = ymul(t, YPoly(unit_matrix(s_.gen(s_.m + 1 + r, s_.m + 1 + p[static_cast<std::size_t>(r)]))));
      dp.add(t, LaurentPoly::monomial(-2 * L, (L & 1) ? -1 : 1));
    } while (std::next_permutation(p.begin(), p.end()));
    detDp_y_ = dp;
    bootstrapping_ = false;
    reduce_enabled_ = true;
    ml_memo_.clear();
    bar_memo_.clear();
    for (auto& [k, v] : YX_) v = reduce(v);
    for (auto& [k, v] : xD_) v = reduce(v);
  }

  const SuperAlgebra& alg_;
  Shape s_;
  Minors mn_;
  AlgebraElement detA_;
  YPoly detDp_y_;
  std::map<int, LocalElement> xD_;
  std::map<std::pair<int, int>, LocalElement> YX_;
  mutable std::map<std::pair<int, int>, YPoly> YYraw_;
  mutable std::set<std::pair<int, int>> yy_busy_;
  bool bootstrapping_ = false;
  bool reduce_enabled_ = false;
  mutable MemoTable<ExpMatrix, LocalElement> rx_memo_, ry_memo_;
  mutable MemoTable<GenKey, YPoly, GenKeyHash> ym_memo_;
  mutable MemoTable<KeyLetter, LocalElement, KeyLetterHash> ml_memo_;
  mutable MemoTable<LocalKey, LocalElement, LocalKeyHash> bar_memo_;
};

}  // namespace qsuper
