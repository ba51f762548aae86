#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "localization.hpp"
#include "lusztig.hpp"
#include "order.hpp"

namespace qsuper {

enum class Stage { BLOCK, H, C, ABC, DPRIME, GLOBAL };

inline const char* stage_name(Stage s) {
  switch (s) {
    case Stage::BLOCK: return "block";
    case Stage::H: return "H";
    case Stage::C: return "C";
    case Stage::ABC: return "ABC";
    case Stage::DPRIME: return "Dprime";
    case Stage::GLOBAL: return "global";
  }
  return "?";
}

/// A computed dual canonical basis element.
/// Sub-stages carry `poly` (x-monomials, or raw y-monomials for DPRIME);
/// the global stage carries `local`.
struct CBElement {
  Stage stage = Stage::BLOCK;
  ExpMatrix M;
  int a = 0;
  int d = 0;
  Variant variant = Variant::PLUS_Q;
  AlgebraElement poly;
  LocalElement local;
  std::map<ExpMatrix, LaurentPoly> coords;  // sub-stages: over the stage family
  std::map<LocalKey, LaurentPoly> gcoords;  // global: over the N_{a,d} family
};

struct CovariantMatch {
  LocalKey index;
  int sign = 1;
  int power = 0;
};

class CanonicalBasis {
 public:
  explicit CanonicalBasis(const LocalAlgebra& L) : L_(L), alg_(L.algebra()), s_(L.shape()) {}

  const LocalAlgebra& local() const { return L_; }
  const Shape& shape() const { return s_; }

  // ---- blocks of O_q(M) over x(M) -----------------------------------------

  /// Ω for every matrix of a full (ro, co) block
  std::vector<CBElement> solve_block(const std::vector<int>& ro, const std::vector<int>& co, Variant v,
                                     bool reverse_ties = false) const {
    auto& S = sub_solver(Stage::BLOCK, ro, co, reverse_ties);
    std::vector<CBElement> out;
    for (auto& M : enumerate_block(s_, ro, co)) out.push_back(from_sub(Stage::BLOCK, S.solve(M, v)));
    return out;
  }
  CBElement omega_block(const ExpMatrix& M, Variant v, bool reverse_ties = false) const {
    alg_.check(M);
    return from_sub(Stage::BLOCK, sub_solver(Stage::BLOCK, M.ro(), M.co(), reverse_ties).solve(M, v));
  }

  const BlockOrder& block_order(const std::vector<int>& ro, const std::vector<int>& co) const {
    auto key = std::make_pair(ro, co);
    auto it = orders_.find(key);
    if (it != orders_.end()) return *it->second;
    auto p = std::make_unique<BlockOrder>(s_, enumerate_block(s_, ro, co));
    return *orders_.emplace(key, std::move(p)).first->second;
  }

  // ---- stages --------------------------------------------------------------

  CBElement omega_H(const ExpMatrix& M, bool reverse_ties = false) const {
    require(M, Stage::H);
    return from_sub(Stage::H, sub_solver(Stage::H, M.ro(), M.co(), reverse_ties).solve(M, Variant::PLUS_Q));
  }
  CBElement omega_C(const ExpMatrix& M, bool reverse_ties = false) const {
    require(M, Stage::C);
    return from_sub(Stage::C, sub_solver(Stage::C, M.ro(), M.co(), reverse_ties).solve(M, Variant::MINUS_Q));
  }
  CBElement omega_ABC(const ExpMatrix& M, bool reverse_ties = false) const {
    require(M, Stage::ABC);
    return from_sub(Stage::ABC, sub_solver(Stage::ABC, M.ro(), M.co(), reverse_ties).solve(M, Variant::PLUS_Q));
  }
  CBElement omega_Dprime(const ExpMatrix& M, bool reverse_ties = false) const {
    require(M, Stage::DPRIME);
    return from_sub(Stage::DPRIME,
                    sub_solver(Stage::DPRIME, M.ro(), M.co(), reverse_ties).solve(M, Variant::MINUS_Q));
  }

  /// q^{-sum_i c_i(M1) c_i(M3)} Ω_H(M1,M2) Ω_C(M3)
  AlgebraElement n_abc(const ExpMatrix& M) const {
    require(M, Stage::ABC);
    ExpMatrix H(s_.N()), C(s_.N());
    int e = 0;
    for (int g = 0; g < s_.num_gens(); ++g) (s_.row(g) <= s_.m ? H : C).at(g) = M.at(g);
    for (int i = 1; i <= s_.m; ++i) {
      int c1 = 0, c3 = 0;
      for (int r = 1; r <= s_.m; ++r) c1 += M(r, i);
      for (int r = s_.m + 1; r <= s_.N(); ++r) c3 += M(r, i);
      e -= c1 * c3;
    }
    return alg_.mul(omega_H(H).poly, omega_C(C).poly).scaled(LaurentPoly::q(e));
  }

  // ---- global --------------------------------------------------------------

  /// (d-a)(S(M2)+S(M3)) + sum_j c_j(M2)c_j(M4) + sum_j r_j(M3)r_j(M4)
  int psi(const ExpMatrix& M, int a, int d) const {
    auto [cc, rr, s23] = psi_parts(M);
    return (d - a) * s23 + cc + rr;
  }
  /// the displayed form sum c_j(M2)c_j(M4) - sum r_j(M3)r_j(M4) - (a+d)(S(M2)+S(M3))
  int psi_displayed(const ExpMatrix& M, int a, int d) const {
    auto [cc, rr, s23] = psi_parts(M);
    return cc - rr - (a + d) * s23;
  }

  bool is_global_index(const LocalKey& k) const { return k.M.valid(s_) && L_.is_reduced(k); }

  /// q^Ψ (det_q A)^a Ω_ABC Ω_D' (det_{q^-1} D')^d
  LocalElement n_ad(const ExpMatrix& M, int a, int d) const {
    if (!is_global_index(LocalKey{M, a, d}))
      throw PreconditionError("index needs a zero diagonal entry in both M1 and M4: " + M.str());
    ExpMatrix X = L_.xpart(M), Y = L_.ypart(M);
    LocalElement r = L_.mul(L_.detA_pow(a), L_.to_mixed(omega_ABC(X).poly));
    r = L_.mul(r, L_.embed_y(omega_Dprime(Y).poly));
    r = L_.mul(r, L_.detD_pow(d));
    return r.scaled(LaurentPoly::q(psi(M, a, d)));
  }

  CBElement omega_global(const ExpMatrix& M, int a, int d, Variant v, bool reverse_ties = false) const {
    auto key = std::make_tuple(LocalKey{M, a, d}, v == Variant::PLUS_Q, reverse_ties);
    auto it = gcache_.find(key);
    if (it != gcache_.end()) return it->second;
    auto sol = global_solver(reverse_ties).solve(LocalKey{M, a, d}, v);
    CBElement e;
    e.stage = Stage::GLOBAL;
    e.M = M;
    e.a = a;
    e.d = d;
    e.variant = v;
    e.local = sol.expansion;
    e.gcoords = sol.coords;
    return gcache_.emplace(key, e).first->second;
  }

  /// coordinates of f over the N_{a,d} family
  std::map<LocalKey, LaurentPoly> decompose_global(const LocalElement& f) const {
    return global_solver(false).decompose(f);
  }

  const LusztigSolver<LocalKey>& global_solver(bool reverse_ties) const {
    auto& slot = global_[reverse_ties ? 1 : 0];
    if (!slot) slot = std::make_unique<LusztigSolver<LocalKey>>(global_family(reverse_ties));
    return *slot;
  }
  const LusztigSolver<ExpMatrix>& sub_solver(Stage st, const std::vector<int>& ro, const std::vector<int>& co,
                                             bool reverse_ties) const {
    auto key = std::make_tuple(static_cast<int>(st), ro, co, reverse_ties);
    auto it = subs_.find(key);
    if (it != subs_.end()) return *it->second;
    auto p = std::make_unique<LusztigSolver<ExpMatrix>>(sub_family(st, ro, co, reverse_ties));
    return *subs_.emplace(key, std::move(p)).first->second;
  }

  /// image of a global element in O_q(SL)
  LocalElement sl_element(const CBElement& e) const { return L_.sl_project(e.local); }

  // ---- covariant minors ----------------------------------------------------

  /// Ω(M;a,d) times Δ([1,r],[m+n-r+1,m+n])* (star) or Δ([m+n-r+1,m+n],[1,r])
  CovariantMatch covariant_shift_check(const ExpMatrix& M, int a, int d, Variant v, int r, bool star) const {
    int N = s_.N();
    if (r < 1 || r > std::min(s_.m, s_.n)) throw PreconditionError("covariant minor size out of range");
    for (int i = 1; i <= r; ++i) {
      bool bad = star ? M(i, N - i) != 0 : M(N - i, i) != 0;
      if (bad) throw PreconditionError("zero-entry condition fails for the covariant minor");
    }
    const Minors& mn = L_.minors();
    AlgebraElement minor = star ? mn.covariant_minor_star(r) : mn.covariant_minor(r);
    CBElement om = omega_global(M, a, d, v);
    LocalElement P = L_.mul(om.local, L_.to_mixed(minor));
    if (P.is_zero()) throw NoMatch("product with the covariant minor vanishes");
    auto co = decompose_global(P);
    LocalKey top = co.begin()->first;
    for (auto& [k, c] : co)
      if (global_above(k, top, false)) top = k;
    CBElement target = omega_global(top.M, top.a, top.d, v);
    LaurentPoly c = co.at(top);
    if (!c.is_unit() || !(P == target.local.scaled(c)))
      throw NoMatch("product is not a multiple of a basis element: top index " + top.M.str());
    CovariantMatch out;
    out.index = top;
    out.power = c.min_exp();
    out.sign = c.terms()[0].second < 0 ? -1 : 1;
    return out;
  }

  // ---- ordering ------------------------------------------------------------

  static bool global_above(const LocalKey& x, const LocalKey& y, bool reverse_ties) {
    if (x.a != y.a) return x.a < y.a;
    if (x.d != y.d) return x.d < y.d;
    long px = potential(x.M), py = potential(y.M);
    if (px != py) return px > py;
    return reverse_ties ? y.M < x.M : x.M < y.M;
  }

 private:
  std::tuple<int, int, int> psi_parts(const ExpMatrix& M) const {
    int m = s_.m, N = s_.N(), cc = 0, rr = 0, s23 = 0;
    for (int j = m + 1; j <= N; ++j) {
      int c2 = 0, c4 = 0;
      for (int i = 1; i <= m; ++i) c2 += M(i, j);
      for (int i = m + 1; i <= N; ++i) c4 += M(i, j);
      cc += c2 * c4;
    }
    for (int i = m + 1; i <= N; ++i) {
      int r3 = 0, r4 = 0;
      for (int j = 1; j <= m; ++j) r3 += M(i, j);
      for (int j = m + 1; j <= N; ++j) r4 += M(i, j);
      rr += r3 * r4;
    }
    for (int g = 0; g < s_.num_gens(); ++g)
      if (s_.in_B(g) || s_.in_C(g)) s23 += M.at(g);
    return {cc, rr, s23};
  }

  bool in_stage(const ExpMatrix& M, Stage st) const {
    if (!M.valid(s_)) return false;
    for (int g = 0; g < s_.num_gens(); ++g) {
      if (!M.at(g)) continue;
      bool ok = true;
      switch (st) {
        case Stage::BLOCK: break;
        case Stage::H: ok = s_.row(g) <= s_.m; break;
        case Stage::C: ok = s_.in_C(g); break;
        case Stage::ABC: ok = !s_.in_D(g); break;
        case Stage::DPRIME: ok = s_.in_D(g); break;
        case Stage::GLOBAL: break;
      }
      if (!ok) return false;
    }
    return true;
  }
  void require(const ExpMatrix& M, Stage st) const {
    if (!in_stage(M, st))
      throw PreconditionError(std::string("matrix outside the ") + stage_name(st) + " stage: " + M.str());
  }

  CBElement from_sub(Stage st, const LusztigSolution<ExpMatrix>& sol) const {
    CBElement e;
    e.stage = st;
    e.M = sol.index;
    e.variant = sol.variant;
    e.poly = sol.expansion;
    e.coords = sol.coords;
    return e;
  }

  TriangularFamily<ExpMatrix> sub_family(Stage st, const std::vector<int>& ro, const std::vector<int>& co,
                                         bool reverse_ties) const {
    const BlockOrder* ord = &block_order(ro, co);
    TriangularFamily<ExpMatrix> f;
    f.name = [](const ExpMatrix& M) { return M.str(); };
    f.above = [reverse_ties](const ExpMatrix& x, const ExpMatrix& y) {
      long px = potential(x), py = potential(y);
      if (px != py) return px > py;
      return reverse_ties ? y < x : x < y;
    };
    f.below_eq = [ord](const ExpMatrix& x, const ExpMatrix& y) { return ord->leq(x, y); };
    f.is_index = [this, st, ord](const ExpMatrix& M) { return ord->contains(M) && in_stage(M, st); };
    const LocalAlgebra* L = &L_;
    const SuperAlgebra* A = &alg_;
    switch (st) {
      case Stage::DPRIME:
        f.element = [A](const ExpMatrix& M) { return YPoly(M, LaurentPoly::q(A->x_norm_exponent(M))); };
        f.bar = [L](const YPoly& p) { return L->ybar(p); };
        break;
      case Stage::ABC:
        f.element = [this](const ExpMatrix& M) { return n_abc(M); };
        f.bar = [A](const AlgebraElement& p) { return A->bar(p); };
        break;
      default:
        f.element = [A](const ExpMatrix& M) { return A->x_norm(M); };
        f.bar = [A](const AlgebraElement& p) { return A->bar(p); };
        break;
    }
    return f;
  }

  TriangularFamily<LocalKey> global_family(bool reverse_ties) const {
    TriangularFamily<LocalKey> f;
    f.name = [](const LocalKey& k) {
      return k.M.str() + " a=" + std::to_string(k.a) + " d=" + std::to_string(k.d);
    };
    f.above = [reverse_ties](const LocalKey& x, const LocalKey& y) { return global_above(x, y, reverse_ties); };
    f.below_eq = [](const LocalKey& x, const LocalKey& y) {
      if (x.a != y.a) return x.a > y.a;
      if (x.d != y.d) return x.d > y.d;
      if (x.M.ro() != y.M.ro() || x.M.co() != y.M.co()) return false;
      return leq(x.M, y.M);
    };
    f.is_index = [this](const LocalKey& k) { return is_global_index(k); };
    f.element = [this](const LocalKey& k) { return n_ad(k.M, k.a, k.d); };
    f.bar = [this](const LocalElement& p) { return L_.bar(p); };
    return f;
  }

  const LocalAlgebra& L_;
  const SuperAlgebra& alg_;
  Shape s_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, std::unique_ptr<BlockOrder>> orders_;
  mutable std::map<std::tuple<int, std::vector<int>, std::vector<int>, bool>,
                   std::unique_ptr<LusztigSolver<ExpMatrix>>>
      subs_;
  mutable std::unique_ptr<LusztigSolver<LocalKey>> global_[2];
  mutable std::map<std::tuple<LocalKey, bool, bool>, CBElement> gcache_;
};

}  // namespace qsuper
