#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "actions.hpp"
#include "canonical_basis.hpp"
#include "linalg.hpp"

namespace qsuper {

/// reduced mixed keys with |M| <= max_degree and a, d in [lo, hi]
inline std::vector<LocalKey> window_keys(const CanonicalBasis& CB, int max_degree, int lo, int hi) {
  std::vector<LocalKey> out;
  for (int a = lo; a <= hi; ++a)
    for (int d = lo; d <= hi; ++d)
      for (int k = 0; k <= max_degree; ++k)
        for (auto& M : enumerate_degree(CB.shape(), k))
          if (CB.is_global_index(LocalKey{M, a, d})) out.push_back(LocalKey{M, a, d});
  return out;
}

inline std::string subset_name(const SubalgebraSpec& S) {
  std::string r;
  for (auto& g : S.left) r += (r.empty() ? "" : ",") + g.str();
  if (!S.right.empty()) {
    r += " |";
    for (auto& g : S.right) r += " " + g.str();
  }
  return r.empty() ? "{}" : r;
}

struct SpanReport {
  SubalgebraSpec S;
  int invariant_dim = 0;           // dimension of the joint kernel on the window
  std::vector<LocalKey> selected;  // basis elements that are invariant on their own
  bool pass() const { return invariant_dim == static_cast<int>(selected.size()); }
};

/// Invariants of a window of B_q* elements against generator subsets, with cached images.
class SpanChecker {
 public:
  SpanChecker(const Actions& Ac, const CanonicalBasis& CB, std::vector<LocalKey> keys, Variant v = Variant::PLUS_Q)
      : Ac_(Ac), keys_(std::move(keys)) {
    for (auto& k : keys_) elems_.push_back(CB.omega_global(k.M, k.a, k.d, v).local);
    for (auto& e : elems_) weights_.push_back(Ac_.element_weight(e));
  }

  const std::vector<LocalKey>& keys() const { return keys_; }
  const std::vector<LocalElement>& elements() const { return elems_; }

  /// (g - eps(g)) applied to window element c
  const LocalElement& defect(Side side, const GenSymbol& g, std::size_t c) const {
    auto key = std::make_tuple(side == Side::LEFT, g.kind, g.index, c);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    LocalElement img = Ac_.act(side, g, elems_[c]);
    img.add(elems_[c], -Actions::epsilon(g));
    return cache_.emplace(key, std::move(img)).first->second;
  }

  /// the joint kernel dimension versus the individually invariant elements
  SpanReport check(const SubalgebraSpec& S) const {
    SpanReport rep;
    rep.S = S;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < elems_.size(); ++c) groups[weights_[c]].push_back(c);
    for (auto& [w, cols] : groups) {
      std::map<std::pair<int, LocalKey>, std::size_t> rowid;
      std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> colv(cols.size());
      int gid = 0;
      auto collect = [&](Side side, const GenSymbol& g) {
        for (std::size_t c = 0; c < cols.size(); ++c)
          for (auto& [k, v] : defect(side, g, cols[c])) {
            auto it = rowid.try_emplace({gid, k}, rowid.size()).first;
            colv[c].push_back({it->second, v});
          }
        ++gid;
      };
      for (auto& g : S.left) collect(Side::LEFT, g);
      for (auto& g : S.right) collect(Side::RIGHT, g);
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (colv[c].empty()) rep.selected.push_back(keys_[cols[c]]);
      if (rowid.empty()) {
        rep.invariant_dim += static_cast<int>(cols.size());
        continue;
      }
      LMatrix A(rowid.size(), LVector(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto& [r, v] : colv[c]) A[r][c] = v;
      rep.invariant_dim += static_cast<int>(cols.size()) - rank_of(A);
    }
    return rep;
  }

 private:
  const Actions& Ac_;
  std::vector<LocalKey> keys_;
  std::vector<LocalElement> elems_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> weights_;
  mutable std::map<std::tuple<bool, GenSymbol::Kind, int, std::size_t>, LocalElement> cache_;
};

/// every subset of {E_i, F_i, K_i} without F_m, as left generator sets
inline std::vector<SubalgebraSpec> left_subsets_without_Fm(const Shape& s) {
  std::vector<GenSymbol> pool;
  for (int i = 1; i < s.N(); ++i) pool.push_back({GenSymbol::E, i});
  for (int i = 1; i < s.N(); ++i)
    if (i != s.m) pool.push_back({GenSymbol::F, i});
  for (int i = 1; i <= s.N(); ++i) pool.push_back({GenSymbol::K, i});
  std::vector<SubalgebraSpec> out;
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    SubalgebraSpec S;
    for (std::size_t b = 0; b < pool.size(); ++b)
      if (mask & (1u << b)) S.left.push_back(pool[b]);
    out.push_back(S);
  }
  return out;
}

/// all E_i on the left and all F_i on the right
inline SubalgebraSpec kac_spec(const Shape& s) {
  SubalgebraSpec S;
  for (int i = 1; i < s.N(); ++i) {
    S.left.push_back({GenSymbol::E, i});
    S.right.push_back({GenSymbol::F, i});
  }
  return S;
}

struct KacReport {
  int window_dim = 0;     // joint kernel dimension on the window
  int generated_dim = 0;  // dimension of the span of generator monomials inside the window
  int generated_not_invariant = 0;
  int invariants_outside = 0;  // kernel dimension not covered by the generator monomials
  std::vector<std::string> notes;
  bool pass() const { return generated_not_invariant == 0 && invariants_outside == 0; }
};

/// principal q^{-1}-minor of D' of size s, as a y-polynomial
inline LocalElement principal_Dprime_minor(const LocalAlgebra& L, int sz) {
  const Shape& sh = L.shape();
  std::vector<int> idx(static_cast<std::size_t>(sz));
  std::iota(idx.begin(), idx.end(), 0);
  LocalElement r;
  do {
    int len = perm_length(idx);
    LocalElement t = L.one();
    for (int k = 0; k < sz; ++k) t = L.mul(t, L.y(sh.m + 1 + k, sh.m + 1 + idx[static_cast<std::size_t>(k)]));
    r.add(t, LaurentPoly::monomial(-2 * len, (len & 1) ? -1 : 1));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return r;
}

/// L_{n+} x R_{n-} invariants of a mixed window against monomials in
/// Ber^{+-1}, Delta([1,r],[1,r])^*, det_{q^{-1}} D'_s
inline KacReport kac_generator_check(const Actions& Ac, const CanonicalBasis& CB, int max_degree, int lo, int hi) {
  const LocalAlgebra& L = Ac.local();
  const Shape& sh = L.shape();
  KacReport rep;
  SubalgebraSpec S = kac_spec(sh);
  auto keys = window_keys(CB, max_degree, lo, hi);
  std::set<LocalKey> inwin(keys.begin(), keys.end());
  std::vector<LocalElement> span;
  for (auto& k : keys) span.push_back(L.key(k));
  auto inv = Ac.invariants(span, S);
  rep.window_dim = static_cast<int>(inv.size());

  std::vector<LocalElement> gens;
  for (int r = 1; r <= sh.m; ++r)
    gens.push_back(L.to_mixed(L.minors().minor_rows_cols(interval(1, r), interval(1, r), true)));
  for (int s = 1; s <= sh.n; ++s) gens.push_back(principal_Dprime_minor(L, s));
  std::vector<LocalElement> mons;
  std::set<LocalElement::Map> seen;
  // products of generator powers, then Ber^k, kept when every term lies in the window
  std::function<void(std::size_t, LocalElement, int)> rec = [&](std::size_t t, LocalElement cur, int deg) {
    if (t == gens.size()) {
      for (int k = lo - hi; k <= hi - lo; ++k) {
        LocalElement e = L.mul(cur, L.mul(L.detA_pow(k), L.detD_pow(-k)));
        bool ok = !e.is_zero();
        for (auto& [key, c] : e)
          if (!inwin.count(key)) ok = false;
        if (ok && seen.insert(e.terms()).second) mons.push_back(e);
      }
      return;
    }
    LocalElement p = cur;
    for (int e = 0; deg + e <= max_degree + sh.N() * (hi - lo); ++e) {
      rec(t + 1, p, deg + e);
      p = L.mul(p, gens[t]);
      if (p.is_zero()) break;
    }
  };
  rec(0, L.one(), 0);
  for (auto& g : mons)
    if (!Ac.is_invariant(g, S)) ++rep.generated_not_invariant;
  rep.generated_dim = rank_of(mons);
  std::vector<LocalElement> both = mons;
  both.insert(both.end(), inv.begin(), inv.end());
  rep.invariants_outside = rank_of(both) - rep.generated_dim;
  if (rep.invariants_outside > 0) {
    for (auto& f : inv) {
      std::vector<LocalElement> t = mons;
      t.push_back(f);
      if (rank_of(t) > rep.generated_dim) {
        auto [lw, rw] = Ac.element_weight(f);
        rep.notes.push_back("invariant outside the generated span, left weight " + vec_str(lw));
        if (rep.notes.size() >= 8) break;
      }
    }
  }
  return rep;
}

struct ListReport {
  int tested = 0;
  int invariant = 0;
  std::vector<std::string> failures;
  bool pass() const { return tested == invariant; }
};

/// the GL(2|1) L_{n+} x R_{n-} list with w = x12 x23 - q^2 x13 x22 and x'_33 = y33
inline ListReport gl21_list_check(const Actions& Ac, int max_l) {
  const LocalAlgebra& L = Ac.local();
  const Shape& sh = L.shape();
  if (sh.m != 2 || sh.n != 1) throw PreconditionError("the GL(2|1) list needs shape (2,1)");
  SubalgebraSpec S = kac_spec(sh);
  LocalElement w = L.mul(L.x(1, 2), L.x(2, 3));
  w.add(L.mul(L.x(1, 3), L.x(2, 2)), LaurentPoly::monomial(2, -1));
  auto ypow = [&](int b) { return L.detD_pow(b); };  // y33 = det_{q^-1} D' for n = 1
  auto x12l = [&](int l) { return L.pow(L.x(1, 2), l); };
  ListReport rep;
  auto test = [&](const std::string& name, const LocalElement& f) {
    if (f.is_zero()) return;
    ++rep.tested;
    if (Ac.is_invariant(f, S))
      ++rep.invariant;
    else
      rep.failures.push_back(name);
  };
  for (int beta = -1; beta <= 1; ++beta)
    for (int a = 0; a <= 1; ++a) {
      LocalElement wa = a ? w : L.one();
      std::string sfx = " w^" + std::to_string(a) + " y33^" + std::to_string(beta);
      for (int l = 1; l <= max_l; ++l) {
        test("x12^" + std::to_string(l) + " w^a x13 y^b:" + sfx,
             L.mul(L.mul(L.mul(x12l(l), wa), L.x(1, 3)), ypow(beta)));
        test("x12^" + std::to_string(l) + " x13 y^b w^a:" + sfx,
             L.mul(L.mul(L.mul(x12l(l), L.x(1, 3)), ypow(beta)), wa));
        if (a == 0)
          test("x12^" + std::to_string(l) + " x13 x23 y^b:" + sfx,
               L.mul(L.mul(L.mul(x12l(l), L.x(1, 3)), L.x(2, 3)), ypow(beta)));
      }
      for (int b = 0; b <= 1; ++b)
        test("w^a x13^" + std::to_string(b) + " y^b:" + sfx,
             L.mul(L.mul(wa, b ? L.x(1, 3) : L.one()), ypow(beta)));
    }
  return rep;
}

}  // namespace qsuper
