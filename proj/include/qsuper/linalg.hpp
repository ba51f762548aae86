#pragma once

#include <map>
#include <set>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "laurent.hpp"

namespace qsuper {

using LMatrix = std::vector<std::vector<LaurentPoly>>;
using LVector = std::vector<LaurentPoly>;

struct Echelon {
  LMatrix R;               // d * (reduced row echelon form), zero rows dropped
  std::vector<int> pivots; // pivot column of each row
  LaurentPoly d = 1;       // common pivot value
};

// Fraction-free Gauss-Jordan elimination over Z[q,q^-1]; every division is exact.
inline Echelon gauss_jordan(LMatrix A) {
  Echelon out;
  if (A.empty()) return out;
  std::size_t rows = A.size(), cols = A[0].size();
  LaurentPoly prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    // prefer the sparsest pivot candidate
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!A[i][c].is_zero() && (best == rows || A[i][c].size() < A[best][c].size())) best = i;
    if (best == rows) continue;
    p = best;
    std::swap(A[p], A[r]);
    const LaurentPoly piv = A[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      LaurentPoly f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (f.is_zero() && A[i][j].is_zero()) continue;
        LaurentPoly v = piv * A[i][j] - f * A[r][j];
        A[i][j] = exact_div(v, prev);
      }
    }
    out.pivots.push_back(static_cast<int>(c));
    prev = piv;
    ++r;
  }
  A.resize(r);
  out.R = std::move(A);
  out.d = prev;
  return out;
}

inline int rank_of(const LMatrix& A) { return static_cast<int>(gauss_jordan(A).pivots.size()); }

// basis of {x : A x = 0}
inline std::vector<LVector> kernel_of(const LMatrix& A, std::size_t cols) {
  std::vector<LVector> out;
  if (A.empty()) {
    for (std::size_t f = 0; f < cols; ++f) {
      LVector v(cols);
      v[f] = 1;
      out.push_back(v);
    }
    return out;
  }
  Echelon E = gauss_jordan(A);
  std::set<int> piv(E.pivots.begin(), E.pivots.end());
  for (std::size_t f = 0; f < cols; ++f) {
    if (piv.count(static_cast<int>(f))) continue;
    LVector v(cols);
    v[f] = E.d;
    for (std::size_t i = 0; i < E.R.size(); ++i) v[static_cast<std::size_t>(E.pivots[i])] = -E.R[i][f];
    // strip common content and monomial factor
    Int g = 0;
    int lo = 0;
    bool first = true;
    for (auto& x : v)
      if (!x.is_zero()) {
        g = boost::multiprecision::gcd(g, x.content());
        lo = first ? x.min_exp() : std::min(lo, x.min_exp());
        first = false;
      }
    if (g > 1)
      for (auto& x : v) x = x.div_int(g);
    for (auto& x : v) x = x.shifted(-lo);
    out.push_back(std::move(v));
  }
  return out;
}

// x with A x = b; throws when b is outside the column span or x is not integral
inline LVector solve_linear(const LMatrix& A, const LVector& b, std::size_t cols) {
  LMatrix Ab = A;
  for (std::size_t i = 0; i < Ab.size(); ++i) Ab[i].push_back(b[i]);
  Echelon E = gauss_jordan(Ab);
  LVector x(cols);
  for (std::size_t i = 0; i < E.R.size(); ++i) {
    std::size_t p = static_cast<std::size_t>(E.pivots[i]);
    if (p == cols) throw LinearSolveFailure("right-hand side is outside the column span");
    try {
      x[p] = exact_div(E.R[i][cols], E.d);
    } catch (const AlgebraError&) {
      throw LinearSolveFailure("solution is not a Laurent polynomial");
    }
  }
  return x;
}

// rank of a family of elements, read as coordinate vectors over their keys
template <class Key>
int rank_of(const std::vector<Poly<Key>>& fam) {
  std::map<Key, std::size_t> idx;
  for (auto& f : fam)
    for (auto& [k, c] : f) idx.try_emplace(k, 0);
  std::size_t j = 0;
  for (auto& [k, v] : idx) v = j++;
  LMatrix A;
  for (auto& f : fam) {
    LVector row(idx.size());
    for (auto& [k, c] : f) row[idx.at(k)] = c;
    A.push_back(std::move(row));
  }
  if (idx.empty()) return 0;
  return rank_of(A);
}

}  // namespace qsuper
