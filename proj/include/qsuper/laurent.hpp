#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qsuper {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in q, stored as (exponent, coefficient) pairs
// sorted by exponent with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, Int>;

  LaurentPoly() = default;
  LaurentPoly(long long c) {
    if (c != 0) terms_.emplace_back(0, Int(c));
  }
  LaurentPoly(const Int& c) {
    if (c != 0) terms_.emplace_back(0, c);
  }
  LaurentPoly(std::initializer_list<std::pair<int, long long>> il) {
    for (auto& [e, c] : il) add_term(e, Int(c));
  }

  static LaurentPoly monomial(int e, const Int& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e, c);
    return p;
  }
  static LaurentPoly q(int e = 1) { return monomial(e, 1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  explicit operator bool() const { return !terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int min_exp() const {
    if (terms_.empty()) throw AlgebraError("min_exp of zero polynomial");
    return terms_.front().first;
  }
  int max_exp() const {
    if (terms_.empty()) throw AlgebraError("max_exp of zero polynomial");
    return terms_.back().first;
  }

  Int coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
  }

  // true for a single term c*q^e with c = +-1
  bool is_unit() const {
    return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
  }

  void add_term(int e, const Int& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term(e, c));
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    *this = merge(*this, o, 1);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    *this = merge(*this, o, -1);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, 1); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, -1); }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
    int lo = a.min_exp() + b.min_exp();
    int hi = a.max_exp() + b.max_exp();
    std::vector<Int> dense(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    LaurentPoly r;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
    return r;
  }

  // multiply by c*q^e
  LaurentPoly scaled(int e, const Int& c = 1) const {
    LaurentPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [ex, co] : terms_) r.terms_.emplace_back(ex + e, co * c);
    return r;
  }
  LaurentPoly shifted(int e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += e;
    return r;
  }

  // q -> q^{-1}
  LaurentPoly bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
  }

  // part with exponents strictly above / below zero
  LaurentPoly positive_part() const {
    LaurentPoly r;
    for (auto& t : terms_)
      if (t.first > 0) r.terms_.push_back(t);
    return r;
  }
  LaurentPoly negative_part() const {
    LaurentPoly r;
    for (auto& t : terms_)
      if (t.first < 0) r.terms_.push_back(t);
    return r;
  }

  bool in_qZq() const { return terms_.empty() || terms_.front().first > 0; }
  bool in_qinvZqinv() const { return terms_.empty() || terms_.back().first < 0; }

  Int content() const {
    Int g = 0;
    for (auto& t : terms_) g = boost::multiprecision::gcd(g, abs(t.second));
    return g;
  }

  LaurentPoly div_int(const Int& c) const {
    LaurentPoly r;
    for (auto& [e, v] : terms_) {
      if (v % c != 0) throw AlgebraError("inexact integer division of Laurent polynomial");
      r.terms_.emplace_back(e, v / c);
    }
    return r;
  }

  // exact division; throws if b does not divide a in Z[q,q^{-1}]
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw AlgebraError("division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.terms_.size() == 1) {
      LaurentPoly r;
      for (auto& [e, c] : a.terms_) {
        if (c % b.terms_[0].second != 0) throw AlgebraError("inexact division");
        r.terms_.emplace_back(e - b.terms_[0].first, c / b.terms_[0].second);
      }
      return r;
    }
    int ba = b.min_exp();
    int db = b.max_exp() - ba;
    int aa = a.min_exp();
    std::vector<Int> rem(static_cast<std::size_t>(a.max_exp() - aa + 1));
    for (auto& [e, c] : a.terms_) rem[static_cast<std::size_t>(e - aa)] = c;
    std::vector<Int> bv(static_cast<std::size_t>(db + 1));
    for (auto& [e, c] : b.terms_) bv[static_cast<std::size_t>(e - ba)] = c;
    const Int& lead = bv.back();
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db) throw AlgebraError("inexact division");
    std::vector<Int> quo(static_cast<std::size_t>(da - db + 1));
    for (int k = da - db; k >= 0; --k) {
      Int& top = rem[static_cast<std::size_t>(k + db)];
      if (top == 0) continue;
      if (top % lead != 0) throw AlgebraError("inexact division");
      Int f = top / lead;
      quo[static_cast<std::size_t>(k)] = f;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * bv[static_cast<std::size_t>(j)];
    }
    for (auto& v : rem)
      if (v != 0) throw AlgebraError("inexact division");
    LaurentPoly r;
    for (std::size_t i = 0; i < quo.size(); ++i)
      if (quo[i] != 0) r.terms_.emplace_back(aa - ba + static_cast<int>(i), quo[i]);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend std::weak_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ <=> b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Int a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, int sign) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.emplace_back(j->first, sign > 0 ? j->second : Int(-j->second));
        ++j;
      } else {
        Int s = sign > 0 ? Int(i->second + j->second) : Int(i->second - j->second);
        if (s != 0) r.terms_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
inline LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
inline LaurentPoly lp_bar(const LaurentPoly& p) { return p.bar(); }

// 1 + q^base + ... + q^{base(s-1)}
inline LaurentPoly q_integer(int s, int base = 2) {
  if (s < 0) throw UsageError("q_integer: negative argument");
  LaurentPoly r;
  for (int k = 0; k < s; ++k) r.add_term(base * k, 1);
  return r;
}

inline LaurentPoly q_binom(int s, int r, int base = 2) {
  if (r < 0 || s < 0 || r > s) throw UsageError("q_binom: need 0 <= r <= s");
  LaurentPoly num = 1, den = 1;
  for (int k = 0; k < r; ++k) {
    num *= q_integer(s - k, base);
    den *= q_integer(k + 1, base);
  }
  return exact_div(num, den);
}

enum class Variant { PLUS_Q, MINUS_Q };

inline const char* variant_name(Variant v) { return v == Variant::PLUS_Q ? "q" : "q^-1"; }

inline bool in_target(const LaurentPoly& h, Variant v) {
  return v == Variant::PLUS_Q ? h.in_qZq() : h.in_qinvZqinv();
}

// h with h - bar(h) = k, h in qZ[q] or q^{-1}Z[q^{-1}]
inline LaurentPoly solve_bar_equation(const LaurentPoly& k, Variant v) {
  if (k.coeff(0) != 0 || k.bar() != -k)
    throw BarEquationUnsolvable("bar equation right-hand side is not antisymmetric: " + k.str());
  return v == Variant::PLUS_Q ? k.positive_part() : k.negative_part();
}

}  // namespace qsuper
