#pragma once

#include <map>
#include <utility>

#include "laurent.hpp"

namespace qsuper {

// finite formal combination of keys with Laurent coefficients
template <class Key>
class Poly {
 public:
  using Map = std::map<Key, LaurentPoly>;

  Poly() = default;
  explicit Poly(const Key& k, const LaurentPoly& c = 1) { add(k, c); }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  auto begin() const { return t_.begin(); }
  auto end() const { return t_.end(); }

  LaurentPoly coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? LaurentPoly() : it->second;
  }

  void add(const Key& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void add(const Poly& o, const LaurentPoly& c = 1) {
    if (c.is_zero()) return;
    for (auto& [k, v] : o.t_) add(k, c * v);
  }

  Poly& operator+=(const Poly& o) {
    add(o);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    add(o, -1);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const LaurentPoly& c, const Poly& p) { return p.scaled(c); }

  Poly scaled(const LaurentPoly& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : t_) {
      LaurentPoly w = v * c;
      if (!w.is_zero()) r.t_.emplace_hint(r.t_.end(), k, std::move(w));
    }
    return r;
  }
  Poly bar_coeffs() const {
    Poly r;
    for (auto& [k, v] : t_) r.t_.emplace_hint(r.t_.end(), k, v.bar());
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

 private:
  Map t_;
};

}  // namespace qsuper
