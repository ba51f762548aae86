#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "shape.hpp"

namespace qsuper {

// one 2x2 sub-matrix transformation at rows i<s, columns j<t (1-based)
inline ExpMatrix apply_move(const ExpMatrix& M, int i, int j, int s, int t) {
  ExpMatrix R = M;
  --R(i, j);
  --R(s, t);
  ++R(i, t);
  ++R(s, j);
  return R;
}

// every matrix reachable by one move, without parity constraints
inline std::vector<ExpMatrix> all_moves(const ExpMatrix& M) {
  std::vector<ExpMatrix> out;
  int N = M.N();
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (!M(i, j)) continue;
      for (int s = i + 1; s <= N; ++s)
        for (int t = j + 1; t <= N; ++t)
          if (M(s, t)) out.push_back(apply_move(M, i, j, s, t));
    }
  return out;
}

/// single moves keeping odd-block entries <= 1
inline std::vector<ExpMatrix> submatrix_moves(const Shape& s, const ExpMatrix& M) {
  std::vector<ExpMatrix> out;
  for (auto& R : all_moves(M))
    if (R.valid(s)) out.push_back(R);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// north-west corner sums S(p,r) = sum_{u<=p, v<=r} m_uv
inline std::vector<int> corner_sums(const ExpMatrix& M) {
  int N = M.N();
  std::vector<int> S(static_cast<std::size_t>(N * N), 0);
  for (int p = 1; p <= N; ++p)
    for (int r = 1; r <= N; ++r) {
      int v = M(p, r);
      if (p > 1) v += S[static_cast<std::size_t>((p - 2) * N + r - 1)];
      if (r > 1) v += S[static_cast<std::size_t>((p - 1) * N + r - 2)];
      if (p > 1 && r > 1) v -= S[static_cast<std::size_t>((p - 2) * N + r - 2)];
      S[static_cast<std::size_t>((p - 1) * N + r - 1)] = v;
    }
  return S;
}

// each move lowers this by at least one
inline long potential(const ExpMatrix& M) {
  long p = 0;
  for (int v : corner_sums(M)) p += v;
  return p;
}

/// M <= N by corner-sum dominance
inline bool dominated(const ExpMatrix& M, const ExpMatrix& N) {
  if (M.ro() != N.ro() || M.co() != N.co()) return false;
  auto a = corner_sums(M), b = corner_sums(N);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

/// M <= N: M is reached from N by a sequence of moves
inline bool leq(const ExpMatrix& M, const ExpMatrix& N) {
  if (M.ro() != N.ro() || M.co() != N.co()) throw UsageError("leq: matrices have different row or column sums");
  if (M == N) return true;
  long target = potential(M);
  std::set<ExpMatrix> seen{N};
  std::queue<ExpMatrix> todo;
  todo.push(N);
  while (!todo.empty()) {
    ExpMatrix cur = todo.front();
    todo.pop();
    for (auto& R : all_moves(cur)) {
      if (R == M) return true;
      if (potential(R) <= target || seen.count(R)) continue;
      seen.insert(R);
      todo.push(R);
    }
  }
  return false;
}

/// block of matrices with fixed (ro, co), with move covers and reachability
class BlockOrder {
 public:
  BlockOrder(const Shape& s, std::vector<ExpMatrix> block) : s_(s), block_(std::move(block)) {
    for (std::size_t k = 0; k < block_.size(); ++k) pos_[block_[k]] = k;
    std::size_t n = block_.size();
    covers_.assign(n, {});
    for (std::size_t k = 0; k < n; ++k)
      for (auto& R : all_moves(block_[k])) {
        auto it = pos_.find(R);
        if (it != pos_.end()) covers_[k].push_back(it->second);
      }
    below_.assign(n, std::vector<char>(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) below_[k][j] = (j == k) || qsuper::leq(block_[j], block_[k]);
    }
  }

  const std::vector<ExpMatrix>& block() const { return block_; }
  const std::vector<std::vector<std::size_t>>& covers() const { return covers_; }
  std::size_t index(const ExpMatrix& M) const { return pos_.at(M); }
  bool contains(const ExpMatrix& M) const { return pos_.count(M) > 0; }
  bool leq(const ExpMatrix& M, const ExpMatrix& N) const { return below_[index(N)][index(M)]; }

  /// block sorted from largest to smallest; ties by enumeration order (or reversed)
  std::vector<ExpMatrix> linear_extension(bool reverse_ties = false) const {
    std::vector<ExpMatrix> v = block_;
    std::stable_sort(v.begin(), v.end(), [&](const ExpMatrix& a, const ExpMatrix& b) {
      long pa = potential(a), pb = potential(b);
      if (pa != pb) return pa > pb;
      return reverse_ties ? b < a : a < b;
    });
    return v;
  }

 private:
  Shape s_;
  std::vector<ExpMatrix> block_;
  std::map<ExpMatrix, std::size_t> pos_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::vector<char>> below_;
};

}  // namespace qsuper
