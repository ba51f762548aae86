#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "canonical_basis.hpp"
#include "linalg.hpp"
#include "localization.hpp"

namespace qsuper {

enum class Side { LEFT, RIGHT };

struct GenSymbol {
  enum Kind { E, F, K, KINV } kind = E;
  int index = 1;

  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;

  std::string str() const {
    static const char* names[] = {"E", "F", "K", "Kinv"};
    return names[kind] + std::to_string(index);
  }
  /// "E1", "F2", "K3", "Kinv1"
  static GenSymbol parse(const std::string& s) {
    GenSymbol g;
    std::size_t p = 0;
    if (s.rfind("Kinv", 0) == 0) {
      g.kind = KINV;
      p = 4;
    } else if (!s.empty() && (s[0] == 'E' || s[0] == 'F' || s[0] == 'K')) {
      g.kind = s[0] == 'E' ? E : s[0] == 'F' ? F : K;
      p = 1;
    } else {
      throw UsageError("bad generator name: " + s);
    }
    try {
      std::size_t used = 0;
      g.index = std::stoi(s.substr(p), &used);
      if (used != s.size() - p) throw UsageError("bad generator name: " + s);
    } catch (const std::logic_error&) {
      throw UsageError("bad generator name: " + s);
    }
    return g;
  }
  void check(const Shape& s) const {
    int hi = (kind == E || kind == F) ? s.N() - 1 : s.N();
    if (index < 1 || index > hi) throw UsageError("generator index out of range: " + str());
  }
  bool odd(const Shape& s) const { return (kind == E || kind == F) && index == s.m; }
};

struct SubalgebraSpec {
  std::vector<GenSymbol> left;
  std::vector<GenSymbol> right;
};

/// Left and right U_q(gl_{m|n}) actions on O_q(GL_{m|n}) in mixed coordinates.
///
/// Generators: E_i.x_{kl} = d_{k,i+1} x_{il}, F_i.x_{kl} = d_{ki} x_{i+1,l};
/// x_{kl}.E_i = d_{li} x_{k,i+1}, x_{kl}.F_i = d_{l,i+1} x_{ki};
/// K_a scales by q^{2(e_a, weight)}. Products follow
/// D(E) = E (x) K_iK_{i+1}^{-1} + 1 (x) E and D(F) = F (x) 1 + K_i^{-1}K_{i+1} (x) F.
class Actions {
 public:
  explicit Actions(const LocalAlgebra& L) : L_(L), s_(L.shape()) {}

  const LocalAlgebra& local() const { return L_; }

  static LaurentPoly epsilon(const GenSymbol& g) {
    return (g.kind == GenSymbol::K || g.kind == GenSymbol::KINV) ? LaurentPoly(1) : LaurentPoly();
  }

  LocalElement act(Side side, const GenSymbol& g, const LocalElement& f) const {
    g.check(s_);
    LocalElement r;
    for (auto& [k, c] : f) {
      if (g.kind == GenSymbol::K || g.kind == GenSymbol::KINV) {
        auto w = side == Side::LEFT ? left_weight(k) : right_weight(k);
        int e = 2 * sgn(g.index) * w[static_cast<std::size_t>(g.index - 1)];
        r.add(k, c * LaurentPoly::q(g.kind == GenSymbol::K ? e : -e));
      } else {
        r.add(act_word(side, g.kind, g.index, word(k)), c);
      }
    }
    return r;
  }
  LocalElement act_left(const GenSymbol& g, const LocalElement& f) const { return act(Side::LEFT, g, f); }
  LocalElement act_right(const GenSymbol& g, const LocalElement& f) const { return act(Side::RIGHT, g, f); }

  /// action on a single generator x_{kl}
  LocalElement act_gen(Side side, const GenSymbol& g, int k, int l) const {
    return act(side, g, L_.x(k, l));
  }

  std::vector<int> left_weight(const LocalKey& k) const { return weight(k, true); }
  std::vector<int> right_weight(const LocalKey& k) const { return weight(k, false); }

  /// basis of the S-invariants inside the span of the given elements
  std::vector<LocalElement> invariants(const std::vector<LocalElement>& span, const SubalgebraSpec& S) const {
    std::vector<LocalElement> out;
    for (auto& v : invariant_coefficients(span, S)) {
      LocalElement e;
      for (std::size_t c = 0; c < span.size(); ++c)
        if (!v[c].is_zero()) e.add(span[c], v[c]);
      out.push_back(std::move(e));
    }
    return out;
  }

  /// the same basis as coefficient vectors over span
  std::vector<LVector> invariant_coefficients(const std::vector<LocalElement>& span, const SubalgebraSpec& S) const {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < span.size(); ++c) {
      if (span[c].is_zero()) continue;
      groups[element_weight(span[c])].push_back(c);
    }
    std::vector<LVector> out;
    for (auto& [w, cols] : groups) {
      std::map<std::pair<int, LocalKey>, std::size_t> rowid;
      std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> colv(cols.size());
      int gid = 0;
      auto collect = [&](Side side, const GenSymbol& g) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          LocalElement img = act(side, g, span[cols[c]]);
          img.add(span[cols[c]], -epsilon(g));
          for (auto& [k, v] : img) {
            auto it = rowid.try_emplace({gid, k}, rowid.size()).first;
            colv[c].push_back({it->second, v});
          }
        }
        ++gid;
      };
      for (auto& g : S.left) collect(Side::LEFT, g);
      for (auto& g : S.right) collect(Side::RIGHT, g);
      // rank of the group itself, to discard dependent inputs
      LMatrix A(rowid.size(), LVector(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto& [r, v] : colv[c]) A[r][c] = v;
      std::vector<LVector> ker;
      if (rowid.empty()) {
        for (std::size_t f = 0; f < cols.size(); ++f) {
          LVector v(cols.size());
          v[f] = 1;
          ker.push_back(v);
        }
      } else {
        ker = kernel_of(A, cols.size());
      }
      // independent elements only
      std::vector<LocalElement> kept;
      for (auto& v : ker) {
        LocalElement e;
        for (std::size_t c = 0; c < cols.size(); ++c) e.add(span[cols[c]], v[c]);
        if (e.is_zero()) continue;
        kept.push_back(e);
        if (rank_of(kept) < static_cast<int>(kept.size())) {
          kept.pop_back();
          continue;
        }
        LVector full(span.size());
        for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
        out.push_back(std::move(full));
      }
    }
    return out;
  }

  bool is_invariant(const LocalElement& f, const SubalgebraSpec& S) const {
    for (auto& g : S.left) {
      LocalElement d = act(Side::LEFT, g, f);
      d.add(f, -epsilon(g));
      if (!d.is_zero()) return false;
    }
    for (auto& g : S.right) {
      LocalElement d = act(Side::RIGHT, g, f);
      d.add(f, -epsilon(g));
      if (!d.is_zero()) return false;
    }
    return true;
  }

  std::pair<std::vector<int>, std::vector<int>> element_weight(const LocalElement& f) const {
    std::pair<std::vector<int>, std::vector<int>> w;
    bool first = true;
    for (auto& [k, c] : f) {
      auto x = std::make_pair(left_weight(k), right_weight(k));
      if (first) {
        w = x;
        first = false;
      } else if (x != w) {
        throw NonHomogeneous("element is not weight-homogeneous");
      }
    }
    return w;
  }

 private:
  int sgn(int a) const { return s_.parity(a) ? -1 : 1; }
  // exponent of K_a on index idx
  int kexp(int a, int idx) const { return a == idx ? 2 * sgn(a) : 0; }

  std::vector<int> weight(const LocalKey& k, bool left) const {
    std::vector<int> w = left ? k.M.ro() : k.M.co();
    for (int i = 1; i <= s_.N(); ++i) w[static_cast<std::size_t>(i - 1)] += i <= s_.m ? k.a : k.d;
    return w;
  }

  std::vector<Letter> word(const LocalKey& k) const {
    std::vector<Letter> w;
    for (int t = 0; t < std::abs(k.a); ++t) w.push_back({Letter::A, k.a > 0 ? 1 : -1});
    for (auto& l : L_.letters(LocalKey{k.M, 0, 0})) w.push_back(l);
    for (int t = 0; t < std::abs(k.d); ++t) w.push_back({Letter::D, k.d > 0 ? 1 : -1});
    return w;
  }

  int kw(Side side, int i, const std::vector<Letter>& ls, std::size_t lo, std::size_t hi) const {
    int e = 0;
    for (std::size_t p = lo; p < hi; ++p) {
      const Letter& l = ls[p];
      auto add = [&](int idx, int mult) { e += mult * (kexp(i, idx) - kexp(i + 1, idx)); };
      if (l.kind == Letter::X || l.kind == Letter::Y) {
        add(side == Side::LEFT ? s_.row(l.v) : s_.col(l.v), 1);
      } else {
        int lo2 = l.kind == Letter::A ? 1 : s_.m + 1, hi2 = l.kind == Letter::A ? s_.m : s_.N();
        for (int a = lo2; a <= hi2; ++a) add(a, l.v);
      }
    }
    return e;
  }

  int lpar(const Letter& l) const { return l.kind == Letter::X ? s_.gpar(l.v) : 0; }

  LocalElement letter_elem(const Letter& l) const {
    switch (l.kind) {
      case Letter::A: return L_.detA_pow(l.v);
      case Letter::D: return L_.detD_pow(l.v);
      case Letter::Y: return L_.y(s_.row(l.v), s_.col(l.v));
      case Letter::X: return L_.x(s_.row(l.v), s_.col(l.v));
    }
    return {};
  }
  LocalElement word_elem(const std::vector<Letter>& ls, std::size_t lo, std::size_t hi) const {
    LocalElement r = L_.one();
    for (std::size_t p = lo; p < hi; ++p) r = L_.mul(r, letter_elem(ls[p]));
    return r;
  }

  LocalElement act_word(Side side, GenSymbol::Kind X, int i, const std::vector<Letter>& ls) const {
    LocalElement res;
    int odd = i == s_.m ? 1 : 0;
    for (std::size_t p = 0; p < ls.size(); ++p) {
      const LocalElement& sub = letter_act(side, X, i, ls[p]);
      if (sub.is_zero()) continue;
      int e = X == GenSymbol::E ? kw(side, i, ls, 0, p) : -kw(side, i, ls, p + 1, ls.size());
      int par = 0;
      if (side == Side::LEFT)
        for (std::size_t u = 0; u < p; ++u) par += lpar(ls[u]);
      else
        for (std::size_t u = p + 1; u < ls.size(); ++u) par += lpar(ls[u]);
      int sign = (odd * par) & 1 ? -1 : 1;
      LocalElement t = L_.mul(L_.mul(word_elem(ls, 0, p), sub), word_elem(ls, p + 1, ls.size()));
      res.add(t, LaurentPoly::monomial(e, sign));
    }
    return res;
  }

  LocalElement gen_x(Side side, GenSymbol::Kind X, int i, int g) const {
    int k = s_.row(g), l = s_.col(g), tk = 0, tl = 0;
    if (side == Side::LEFT) {
      if (X == GenSymbol::E && k == i + 1) tk = i, tl = l;
      if (X == GenSymbol::F && k == i) tk = i + 1, tl = l;
    } else {
      if (X == GenSymbol::E && l == i) tk = k, tl = i + 1;
      if (X == GenSymbol::F && l == i + 1) tk = k, tl = i;
    }
    if (!tk) return {};
    return L_.x(tk, tl);
  }

  const LocalElement& letter_act(Side side, GenSymbol::Kind X, int i, const Letter& l) const {
    auto key = std::make_tuple(side == Side::LEFT, X == GenSymbol::E, i, static_cast<int>(l.kind), l.v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    LocalElement r;
    if (l.kind == Letter::X) {
      r = gen_x(side, X, i, l.v);
    } else if (l.kind == Letter::A && l.v == 1) {
      for (auto& [M, c] : L_.detA()) r.add(act_word(side, X, i, x_word(M)), c);
    } else if (l.kind == Letter::D && l.v == 1) {
      for (auto& [Y, c] : L_.detDp_y()) {
        std::vector<Letter> w;
        for (int g : Y.word()) w.push_back({Letter::Y, g});
        r.add(act_word(side, X, i, w), c);
      }
    } else if (l.kind == Letter::A || l.kind == Letter::D) {
      r = inverse_rule(side, X, i, Letter{l.kind, 1});
    } else {
      // y = W (det_q A)^{-1}
      for (auto& [M, c] : L_.W(s_.row(l.v), s_.col(l.v))) {
        std::vector<Letter> w = x_word(M);
        w.push_back({Letter::A, -1});
        r.add(act_word(side, X, i, w), c);
      }
    }
    return memo_.emplace(key, std::move(r)).first->second;
  }

  // X.P^{-1} from X.(P P^{-1}) = 0
  LocalElement inverse_rule(Side side, GenSymbol::Kind X, int i, const Letter& P) const {
    LocalElement XP = letter_act(side, X, i, P);
    LocalElement Pinv = letter_elem(Letter{P.kind, -1});
    int wP = kw(side, i, {P}, 0, 1);
    LocalElement t = L_.mul(L_.mul(Pinv, XP), Pinv);
    return t.scaled(LaurentPoly::monomial(X == GenSymbol::E ? -wP : wP, -1));
  }

  std::vector<Letter> x_word(const ExpMatrix& M) const {
    std::vector<Letter> w;
    for (int g : M.word()) w.push_back({Letter::X, g});
    return w;
  }

  const LocalAlgebra& L_;
  Shape s_;
  mutable std::map<std::tuple<bool, bool, int, int, int>, LocalElement> memo_;
};

}  // namespace qsuper
