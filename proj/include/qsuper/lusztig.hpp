#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "laurent.hpp"

namespace qsuper {

// a family of elements b_K, each equal to a unit times key K plus lower keys
template <class Key>
struct TriangularFamily {
  std::function<Poly<Key>(const Key&)> element;
  std::function<Poly<Key>(const Poly<Key>&)> bar;
  std::function<bool(const Key&, const Key&)> above;     // strict linear extension
  std::function<bool(const Key&, const Key&)> below_eq;  // partial order
  std::function<bool(const Key&)> is_index;
  std::function<std::string(const Key&)> name;
};

template <class Key>
struct LusztigSolution {
  Key index;
  Variant variant;
  std::map<Key, LaurentPoly> coords;  // over the family
  Poly<Key> expansion;                // over raw keys
};

/// Bar-invariant triangular elements over a TriangularFamily
template <class Key>
class LusztigSolver {
 public:
  explicit LusztigSolver(TriangularFamily<Key> fam) : f_(std::move(fam)) {}

  const TriangularFamily<Key>& family() const { return f_; }

  const Poly<Key>& element(const Key& k) const {
    auto it = elem_.find(k);
    if (it != elem_.end()) return it->second;
    return elem_.emplace(k, f_.element(k)).first->second;
  }

  /// coordinates of f over the family, by repeated removal of the top key
  std::map<Key, LaurentPoly> decompose(Poly<Key> f) const {
    std::map<Key, LaurentPoly> out;
    while (!f.is_zero()) {
      auto top = f.begin();
      for (auto it = f.begin(); it != f.end(); ++it)
        if (f_.above(it->first, top->first)) top = it;
      Key K = top->first;
      if (!f_.is_index(K)) throw TriangularityViolation("top key is not a basis index: " + label(K));
      const Poly<Key>& b = element(K);
      LaurentPoly lead = b.coeff(K);
      if (!lead.is_unit()) throw TriangularityViolation("leading coefficient is not a unit at " + label(K));
      LaurentPoly c = top->second * unit_inverse(lead);
      out[K] += c;
      f.add(b, -c);
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  }

  /// bar(b_U) over the family; asserted unitriangular
  const std::map<Key, LaurentPoly>& bar_column(const Key& U) const {
    auto it = barcol_.find(U);
    if (it != barcol_.end()) return it->second;
    auto col = decompose(f_.bar(element(U)));
    auto d = col.find(U);
    if (d == col.end() || d->second != LaurentPoly(1))
      throw TriangularityViolation("bar is not unitriangular at " + label(U));
    for (auto& [T, c] : col)
      if (!(T == U) && !f_.below_eq(T, U))
        throw TriangularityViolation("bar of " + label(U) + " meets incomparable " + label(T));
    return barcol_.emplace(U, std::move(col)).first->second;
  }

  /// indices reachable from S through bar columns, sorted from the top
  std::vector<Key> closure(const Key& S) const {
    std::set<Key> seen{S};
    std::deque<Key> todo{S};
    while (!todo.empty()) {
      Key U = todo.front();
      todo.pop_front();
      for (auto& [T, c] : bar_column(U))
        if (seen.insert(T).second) todo.push_back(T);
    }
    std::vector<Key> v(seen.begin(), seen.end());
    std::sort(v.begin(), v.end(), [&](const Key& a, const Key& b) { return f_.above(a, b); });
    return v;
  }

  LusztigSolution<Key> solve(const Key& S, Variant v) const {
    if (!f_.is_index(S)) throw PreconditionError("not a basis index: " + label(S));
    std::vector<Key> order = closure(S);
    std::map<Key, LaurentPoly> p;
    p[S] = 1;
    for (std::size_t t = 1; t < order.size(); ++t) {
      const Key& T = order[t];
      LaurentPoly k;
      for (std::size_t u = 0; u < t; ++u) {
        auto pu = p.find(order[u]);
        if (pu == p.end()) continue;
        const auto& col = bar_column(order[u]);
        auto r = col.find(T);
        if (r == col.end()) continue;
        k += r->second * pu->second.bar();
      }
      if (k.is_zero()) continue;
      LaurentPoly h = solve_bar_equation(k, v);
      if (!h.is_zero()) p[T] = h;
    }
    LusztigSolution<Key> sol{S, v, p, {}};
    for (auto& [T, c] : p) sol.expansion.add(element(T), c);
    return sol;
  }

  static LaurentPoly unit_inverse(const LaurentPoly& u) {
    if (!u.is_unit()) throw AlgebraError("not a unit: " + u.str());
    return LaurentPoly::monomial(-u.min_exp(), u.terms()[0].second);
  }

 private:
  std::string label(const Key& k) const { return f_.name ? f_.name(k) : std::string("?"); }

  TriangularFamily<Key> f_;
  mutable std::map<Key, Poly<Key>> elem_;
  mutable std::map<Key, std::map<Key, LaurentPoly>> barcol_;
};

}  // namespace qsuper
