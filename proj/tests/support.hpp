#pragma once

#include <ostream>
#include <random>
#include <vector>

#include <qsuper/qsuper.hpp>

namespace qsuper {

// readable gtest failure output

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.str(); }

inline void PrintTo(const AlgebraElement& f, std::ostream* os) {
  if (f.is_zero()) *os << "0";
  for (auto& [M, c] : f) *os << " + (" << c.str() << ")" << M.str();
}

inline void PrintTo(const LocalElement& f, std::ostream* os) {
  if (f.is_zero()) *os << "0";
  for (auto& [k, c] : f) *os << " + (" << c.str() << ")detA^" << k.a << k.M.str() << "detD'^" << k.d;
}

}  // namespace qsuper

namespace qtest {

using namespace qsuper;

inline LaurentPoly random_laurent(std::mt19937& rng, int span = 3, int terms = 3) {
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) {
    int e = static_cast<int>(rng() % (2 * span + 1)) - span;
    long long c = static_cast<long long>(rng() % 7) - 3;
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

// a random short word in the generators, as an O_q(M) element
inline AlgebraElement random_word(const SuperAlgebra& A, std::mt19937& rng, int max_len = 3) {
  const Shape& s = A.shape();
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(static_cast<int>(rng() % static_cast<unsigned>(s.num_gens())));
  return A.mul_word(w);
}

inline std::vector<Shape> small_shapes() { return {Shape(1, 1), Shape(2, 1), Shape(1, 2), Shape(2, 2)}; }

// all vectors in Z_+^N with entry sum <= total
inline std::vector<std::vector<int>> vectors_up_to(int N, int total) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < N; ++i) {
    std::vector<std::vector<int>> next;
    for (auto& v : out) {
      int used = 0;
      for (int x : v) used += x;
      for (int k = 0; used + k <= total; ++k) {
        auto w = v;
        w.push_back(k);
        next.push_back(w);
      }
    }
    out = next;
  }
  return out;
}

}  // namespace qtest
