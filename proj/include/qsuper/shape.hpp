#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace qsuper {

inline int soft_size_limit = 5;

struct Shape {
  int m = 1;
  int n = 1;

  Shape() = default;
  Shape(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw UsageError("shape needs m >= 1 and n >= 1");
    if (m + n > soft_size_limit) throw UsageError("shape exceeds size limit m+n <= " + std::to_string(soft_size_limit));
  }

  int N() const { return m + n; }
  int num_gens() const { return N() * N(); }

  // 1-based index parity
  int parity(int i) const {
    if (i < 1 || i > N()) throw UsageError("index out of range: " + std::to_string(i));
    return i <= m ? 0 : 1;
  }
  // 0-based generator g = (i-1)N + (j-1)
  int gen(int i, int j) const {
    if (i < 1 || i > N() || j < 1 || j > N()) throw UsageError("generator index out of range");
    return (i - 1) * N() + (j - 1);
  }
  int row(int g) const { return g / N() + 1; }
  int col(int g) const { return g % N() + 1; }
  int gpar(int g) const { return (parity(row(g)) + parity(col(g))) & 1; }
  bool in_A(int g) const { return row(g) <= m && col(g) <= m; }
  bool in_B(int g) const { return row(g) <= m && col(g) > m; }
  bool in_C(int g) const { return row(g) > m && col(g) <= m; }
  bool in_D(int g) const { return row(g) > m && col(g) > m; }

  friend bool operator==(const Shape&, const Shape&) = default;
};

// exponent matrix of an ordered monomial, flattened row-major
class ExpMatrix {
 public:
  ExpMatrix() = default;
  explicit ExpMatrix(int N) : N_(N), e_(static_cast<std::size_t>(N * N), 0) {}
  ExpMatrix(int N, std::vector<int> entries) : N_(N), e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) != N * N) throw UsageError("matrix entry count mismatch");
  }
  static ExpMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    int N = static_cast<int>(rows.size());
    ExpMatrix M(N);
    for (int i = 0; i < N; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != N) throw UsageError("matrix must be square");
      for (int j = 0; j < N; ++j) M.e_[static_cast<std::size_t>(i * N + j)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return M;
  }

  int N() const { return N_; }
  // 1-based access
  int operator()(int i, int j) const { return e_[static_cast<std::size_t>((i - 1) * N_ + (j - 1))]; }
  int& operator()(int i, int j) { return e_[static_cast<std::size_t>((i - 1) * N_ + (j - 1))]; }
  int at(int g) const { return e_[static_cast<std::size_t>(g)]; }
  int& at(int g) { return e_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& flat() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_zero() const {
    for (int v : e_)
      if (v) return false;
    return true;
  }
  std::vector<int> ro() const {
    std::vector<int> r(static_cast<std::size_t>(N_), 0);
    for (int g = 0; g < N_ * N_; ++g) r[static_cast<std::size_t>(g / N_)] += e_[static_cast<std::size_t>(g)];
    return r;
  }
  std::vector<int> co() const {
    std::vector<int> c(static_cast<std::size_t>(N_), 0);
    for (int g = 0; g < N_ * N_; ++g) c[static_cast<std::size_t>(g % N_)] += e_[static_cast<std::size_t>(g)];
    return c;
  }
  // last generator present, -1 if none
  int last_gen() const {
    for (int g = N_ * N_ - 1; g >= 0; --g)
      if (e_[static_cast<std::size_t>(g)]) return g;
    return -1;
  }
  // generator sequence in lexicographic order
  std::vector<int> word() const {
    std::vector<int> w;
    for (int g = 0; g < N_ * N_; ++g)
      for (int k = 0; k < e_[static_cast<std::size_t>(g)]; ++k) w.push_back(g);
    return w;
  }
  static ExpMatrix from_word(int N, const std::vector<int>& w) {
    ExpMatrix M(N);
    for (int g : w) ++M.e_[static_cast<std::size_t>(g)];
    return M;
  }

  ExpMatrix operator+(const ExpMatrix& o) const {
    ExpMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
  }
  ExpMatrix operator-(const ExpMatrix& o) const {
    ExpMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
  }

  bool valid(const Shape& s) const {
    if (N_ != s.N()) return false;
    for (int g = 0; g < N_ * N_; ++g) {
      int v = e_[static_cast<std::size_t>(g)];
      if (v < 0) return false;
      if (s.gpar(g) && v > 1) return false;
    }
    return true;
  }
  int odd_count(const Shape& s) const {
    int k = 0;
    for (int g = 0; g < N_ * N_; ++g)
      if (s.gpar(g)) k += e_[static_cast<std::size_t>(g)];
    return k;
  }
  int parity(const Shape& s) const { return odd_count(s) & 1; }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < N_; ++i) {
      if (i) s += ",";
      s += "[";
      for (int j = 0; j < N_; ++j) {
        if (j) s += ",";
        s += std::to_string(e_[static_cast<std::size_t>(i * N_ + j)]);
      }
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const ExpMatrix&, const ExpMatrix&) = default;
  friend std::strong_ordering operator<=>(const ExpMatrix& a, const ExpMatrix& b) {
    if (auto c = a.N_ <=> b.N_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(N_);
    for (int v : e_) h = h * 1000003u ^ static_cast<std::size_t>(v + 7);
    return h;
  }

 private:
  int N_ = 0;
  std::vector<int> e_;
};

struct ExpMatrixHash {
  std::size_t operator()(const ExpMatrix& M) const { return M.hash(); }
};

inline ExpMatrix identity_block(const Shape& s, bool upper) {
  ExpMatrix I(s.N());
  int lo = upper ? 1 : s.m + 1, hi = upper ? s.m : s.N();
  for (int i = lo; i <= hi; ++i) I(i, i) = 1;
  return I;
}

inline std::string vec_str(const std::vector<int>& v) {
  std::string r = "(";
  for (std::size_t k = 0; k < v.size(); ++k) r += (k ? "," : "") + std::to_string(v[k]);
  return r + ")";
}

// all valid matrices with given row and column sums, ascending by flattened entries
inline std::vector<ExpMatrix> enumerate_block(const Shape& s, const std::vector<int>& ro, const std::vector<int>& co) {
  int N = s.N();
  if (static_cast<int>(ro.size()) != N || static_cast<int>(co.size()) != N) throw UsageError("weight vector length must be m+n");
  for (int v : ro)
    if (v < 0) throw UsageError("negative row sum");
  for (int v : co)
    if (v < 0) throw UsageError("negative column sum");
  std::vector<ExpMatrix> out;
  if (std::accumulate(ro.begin(), ro.end(), 0) != std::accumulate(co.begin(), co.end(), 0)) return out;
  ExpMatrix M(N);
  std::vector<int> rrem = ro, crem = co;
  std::function<void(int)> rec = [&](int g) {
    if (g == N * N) {
      for (int v : rrem)
        if (v) return;
      for (int v : crem)
        if (v) return;
      out.push_back(M);
      return;
    }
    int i = g / N, j = g % N;
    int cap = std::min(rrem[static_cast<std::size_t>(i)], crem[static_cast<std::size_t>(j)]);
    if (s.gpar(g)) cap = std::min(cap, 1);
    // last column of a row must absorb the remaining row sum
    int lo = 0;
    if (j == N - 1) lo = rrem[static_cast<std::size_t>(i)];
    if (i == N - 1) lo = std::max(lo, crem[static_cast<std::size_t>(j)]);
    for (int v = lo; v <= cap; ++v) {
      M.at(g) = v;
      rrem[static_cast<std::size_t>(i)] -= v;
      crem[static_cast<std::size_t>(j)] -= v;
      rec(g + 1);
      rrem[static_cast<std::size_t>(i)] += v;
      crem[static_cast<std::size_t>(j)] += v;
    }
    M.at(g) = 0;
  };
  rec(0);
  return out;
}

// all valid matrices of total degree k, ascending
inline std::vector<ExpMatrix> enumerate_degree(const Shape& s, int k) {
  int N = s.N();
  std::vector<ExpMatrix> out;
  ExpMatrix M(N);
  std::function<void(int, int)> rec = [&](int g, int left) {
    if (g == N * N) {
      if (left == 0) out.push_back(M);
      return;
    }
    int cap = s.gpar(g) ? std::min(1, left) : left;
    for (int v = 0; v <= cap; ++v) {
      M.at(g) = v;
      rec(g + 1, left - v);
    }
    M.at(g) = 0;
  };
  rec(0, k);
  return out;
}

inline Int binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Int r = 1;
  for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

// number of degree-k ordered monomials: sum_r C(m^2+n^2+r-1, r) C(2mn, k-r)
inline Int monomial_count_formula(const Shape& s, int k) {
  long long even = 1LL * s.m * s.m + 1LL * s.n * s.n, odd = 2LL * s.m * s.n;
  Int total = 0;
  for (int r = 0; r <= k; ++r) total += binomial(even + r - 1, r) * binomial(odd, k - r);
  return total;
}

}  // namespace qsuper

template <>
struct std::hash<qsuper::ExpMatrix> {
  std::size_t operator()(const qsuper::ExpMatrix& M) const noexcept { return M.hash(); }
};
