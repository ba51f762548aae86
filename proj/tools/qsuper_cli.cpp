#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qsuper/qsuper.hpp>

using namespace qsuper;

namespace {

struct Common {
  std::vector<int> shape;
  std::string format = "json";
};

struct VerifyFailed {};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--shape", c.shape, "m n")->expected(2)->required();
  sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

Shape shape_of(const Common& c) { return Shape(c.shape.at(0), c.shape.at(1)); }

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + s);
    }
  }
  return out;
}

std::vector<GenSymbol> gen_list(const std::string& s, const Shape& sh) {
  std::vector<GenSymbol> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    GenSymbol g = GenSymbol::parse(tok);
    g.check(sh);
    out.push_back(g);
  }
  return out;
}

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

// an element file, in plain or mixed coordinates
struct Input {
  bool mixed = false;
  AlgebraElement plain;
  LocalElement local;
};

Input read_element(const std::string& path, const Shape& sh) {
  Json j = read_json(path);
  try {
    if (!(shape_from_json(j) == sh)) throw UsageError("element shape does not match --shape");
    Input in;
    in.mixed = is_mixed_json(j);
    if (in.mixed)
      in.local = local_from_json(j, sh);
    else
      in.plain = element_from_json(j, sh);
    return in;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed element: ") + e.what());
  }
}

int env_degree_cap() {
  const char* v = std::getenv("QSUPER_MAX_DEGREE");
  if (!v || !*v) return -1;
  try {
    std::size_t used = 0;
    int k = std::stoi(v, &used);
    if (used != std::string(v).size() || k < 0) throw UsageError("");
    return k;
  } catch (const std::exception&) {
    throw UsageError(std::string("QSUPER_MAX_DEGREE must be a non-negative integer, got ") + v);
  }
}

int capped(int k) {
  int cap = env_degree_cap();
  return cap >= 0 && k > cap ? cap : k;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

void emit(const Common& c, const Shape& sh, const AlgebraElement& f) { emit(c, to_json(sh, f), to_text(sh, f)); }
void emit(const Common& c, const Shape& sh, const LocalElement& f) { emit(c, to_json(sh, f), to_text(sh, f)); }

std::string key_text(const Shape& sh, const LocalKey& k) {
  return to_text(sh, LocalElement(k));
}

Json key_json(const LocalKey& k) { return {{"matrix", to_json(k.M)}, {"a", k.a}, {"d", k.d}}; }

std::pair<int, int> parse_sector(const std::string& s) {
  int a = 0, d = 0;
  bool ha = false, hd = false;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError("sector must look like a=0,d=0");
    std::string name = tok.substr(0, eq);
    int v = int_list(tok.substr(eq + 1)).at(0);
    if (name == "a") {
      a = v;
      ha = true;
    } else if (name == "d") {
      d = v;
      hd = true;
    } else {
      throw UsageError("unknown sector field: " + name);
    }
  }
  if (!ha || !hd) throw UsageError("sector must give both a and d");
  return {a, d};
}

// ---- verbs ----

void run_conventions(const Common& c) {
  Shape sh = shape_of(c);
  SuperAlgebra A11(Shape(1, 1));
  LocalAlgebra L11(A11);
  auto yc = gl11_y22_coefficient(L11);
  std::vector<std::pair<std::string, std::string>> rows{
      {"parity", "[i] = 0 for i <= " + std::to_string(sh.m) + ", 1 otherwise; x_ij is odd iff [i]+[j] = 1"},
      {"bar", "reverse products, sign (-1)^{C(#odd,2)}, q -> q^-1 on coefficients"},
      {"left E", "E_i.x_kl = d_{k,i+1} x_il"},
      {"left F", "F_i.x_kl = d_{k,i} x_{i+1,l}"},
      {"right E", "x_kl.E_i = d_{l,i} x_{k,i+1}"},
      {"right F", "x_kl.F_i = d_{l,i+1} x_{k,i}"},
      {"left E table reading", "E_i.x_kl = d_{i,k-1} x_il (the x_il factor restored)"},
      {"right y reading", "y_{mu nu}.F_j = d_{nu,j+1} y_{mu,nu-1}"},
      {"K", "K_a scales a weight-w element by q^{2 (-1)^[a] w_a}"},
      {"coproduct E", "D(E_i) = E_i (x) K_i K_{i+1}^-1 + 1 (x) E_i, odd sign for i = m"},
      {"coproduct F", "D(F_i) = F_i (x) 1 + K_i^-1 K_{i+1} (x) F_i, odd sign for i = m"},
      {"mixed letters", "detA^a, x (i <= m or j <= m), y (D block), detD'^d, in this order"},
      {"normalization", "N_{a,d} = q^Psi detA^a Omega_ABC Omega_D' detD'^d"},
      {"Psi", "(d-a)(S(M2)+S(M3)) + sum_j c_j(M2) c_j(M4) + sum_j r_j(M3) r_j(M4)"},
      {"GL(1|1) y22", yc ? "y22 = x22 + c*x12*x11^-1*x21 with c = " + yc->str() : "y22 has no single-term correction"},
      {"text tokens", "x11 style for m+n <= 9, x[i,j] otherwise"},
  };
  Json j = Json::object();
  std::string t;
  for (auto& [k, v] : rows) {
    j[k] = v;
    t += k + ": " + v + "\n";
  }
  t.pop_back();
  emit(c, j, t);
}

void run_mul(const Common& c, const std::string& lhs, const std::string& rhs) {
  Shape sh = shape_of(c);
  SuperAlgebra A(sh);
  Input f = read_element(lhs, sh), g = read_element(rhs, sh);
  if (!f.mixed && !g.mixed) return emit(c, sh, A.mul(f.plain, g.plain));
  LocalAlgebra L(A);
  LocalElement lf = f.mixed ? L.reduce(f.local) : L.to_mixed(f.plain);
  LocalElement lg = g.mixed ? L.reduce(g.local) : L.to_mixed(g.plain);
  emit(c, sh, L.mul(lf, lg));
}

void run_bar(const Common& c, const std::string& path) {
  Shape sh = shape_of(c);
  SuperAlgebra A(sh);
  Input f = read_element(path, sh);
  if (!f.mixed) return emit(c, sh, A.bar(f.plain));
  LocalAlgebra L(A);
  emit(c, sh, L.bar(L.reduce(f.local)));
}

void run_minor(const Common& c, const std::string& rows, const std::string& cols, bool star) {
  Shape sh = shape_of(c);
  SuperAlgebra A(sh);
  Minors mn(A);
  emit(c, sh, mn.minor_rows_cols(int_list(rows), int_list(cols), star));
}

void run_det(const Common& c, const std::string& which, int power) {
  Shape sh = shape_of(c);
  SuperAlgebra A(sh);
  Minors mn(A);
  if (power == 1 && which == "A") return emit(c, sh, mn.det_q_A());
  if (power == 1 && which == "D") return emit(c, sh, mn.det_qinv_D());
  if (which == "D") throw UsageError("det --which D supports only --power 1");
  LocalAlgebra L(A);
  emit(c, sh, which == "A" ? L.detA_pow(power) : L.detD_pow(power));
}

void run_ber(const Common& c, int power) {
  Shape sh = shape_of(c);
  SuperAlgebra A(sh);
  LocalAlgebra L(A);
  emit(c, sh, L.mul(L.detA_pow(power), L.detD_pow(-power)));
}

void run_reduce(const Common& c, const std::string& path) {
  Shape sh = shape_of(c);
  SuperAlgebra A(sh);
  LocalAlgebra L(A);
  Input f = read_element(path, sh);
  emit(c, sh, f.mixed ? L.reduce(f.local) : L.to_mixed(f.plain));
}

void run_cb(const Common& c, const std::string& ro_s, const std::string& co_s, const std::string& sector,
            const std::string& variant) {
  Shape sh = shape_of(c);
  std::vector<int> ro = int_list(ro_s), co = int_list(co_s);
  if (static_cast<int>(ro.size()) != sh.N() || static_cast<int>(co.size()) != sh.N())
    throw UsageError("--ro and --co need m+n entries");
  Variant v = variant == "q" ? Variant::PLUS_Q : Variant::MINUS_Q;
  SuperAlgebra A(sh);
  LocalAlgebra L(A);
  CanonicalBasis CB(L);
  Json out = Json::array();
  std::string text;
  if (sector.empty()) {
    for (auto& e : CB.solve_block(ro, co, v)) {
      Json coords = Json::array();
      for (auto& [M, k] : e.coords) coords.push_back({{"matrix", to_json(M)}, {"coeff", to_json(k)}});
      out.push_back({{"index", to_json(e.M)}, {"variant", variant}, {"element", to_json(sh, e.poly)}, {"coords", coords}});
      text += "Omega" + e.M.str() + " = " + to_text(sh, e.poly) + "\n";
    }
  } else {
    auto [a, d] = parse_sector(sector);
    for (auto& M : enumerate_block(sh, ro, co)) {
      LocalKey k{M, a, d};
      if (!CB.is_global_index(k)) continue;
      CBElement e = CB.omega_global(M, a, d, v);
      Json coords = Json::array();
      for (auto& [K, x] : e.gcoords) coords.push_back({{"index", key_json(K)}, {"coeff", to_json(x)}});
      out.push_back({{"index", key_json(k)}, {"variant", variant}, {"element", to_json(sh, e.local)}, {"coords", coords}});
      text += "Omega(" + key_text(sh, k) + ") = " + to_text(sh, e.local) + "\n";
    }
  }
  if (!text.empty()) text.pop_back();
  emit(c, out, text.empty() ? "(empty block)" : text);
}

void run_inv(const Common& c, const std::string& left, const std::string& right, int max_degree,
             const std::string& det_range) {
  Shape sh = shape_of(c);
  std::vector<int> rg = int_list(det_range);
  if (rg.size() != 2 || rg[0] > rg[1]) throw UsageError("--det-range needs lo,hi with lo <= hi");
  SubalgebraSpec S{gen_list(left, sh), gen_list(right, sh)};
  SuperAlgebra A(sh);
  LocalAlgebra L(A);
  Actions Ac(L);
  CanonicalBasis CB(L);
  int deg = capped(max_degree);
  auto keys = window_keys(CB, deg, rg[0], rg[1]);
  std::vector<LocalElement> span;
  for (auto& k : keys) span.push_back(L.key(k));
  auto inv = Ac.invariants(span, S);
  Json ji = Json::array();
  std::string text = "subalgebra " + subset_name(S) + ", degree <= " + std::to_string(deg) + ", window " +
                     std::to_string(keys.size()) + ", invariant dimension " + std::to_string(inv.size());
  for (auto& f : inv) {
    ji.push_back(to_json(sh, f));
    text += "\n  " + to_text(sh, f);
  }
  emit(c,
       {{"subalgebra", subset_name(S)},
        {"max_degree", deg},
        {"window", keys.size()},
        {"dimension", inv.size()},
        {"invariants", ji}},
       text);
}

void run_act(const Common& c, const std::string& gen, const std::string& side, const std::string& path) {
  Shape sh = shape_of(c);
  GenSymbol g = GenSymbol::parse(gen);
  g.check(sh);
  SuperAlgebra A(sh);
  LocalAlgebra L(A);
  Actions Ac(L);
  Input f = read_element(path, sh);
  LocalElement lf = f.mixed ? L.reduce(f.local) : L.to_mixed(f.plain);
  emit(c, sh, Ac.act(side == "left" ? Side::LEFT : Side::RIGHT, g, lf));
}

void run_verify(const Common& c, const std::string& suite, int max_degree) {
  Shape sh = shape_of(c);
  int deg = capped(max_degree);
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  Json out = Json::array();
  std::string text;
  bool ok = true;
  for (auto& n : names) {
    SuiteReport r = run_suite(n, sh, deg);
    ok = ok && r.pass();
    Json checks = Json::array();
    text += (r.pass() ? "PASS " : "FAIL ") + r.suite + "\n";
    for (auto& k : r.checks) {
      checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
      text += std::string("  ") + (k.pass ? "ok   " : "FAIL ") + k.name + (k.detail.empty() ? "" : ": " + k.detail) + "\n";
    }
    out.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}});
  }
  text.pop_back();
  emit(c, out, text);
  if (!ok) throw VerifyFailed{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsuper: exact computations in O_q(M_{m|n}), O_q(GL_{m|n}) and their dual canonical bases"};
  app.require_subcommand(1);

  Common c;
  std::string lhs, rhs, element = "-", rows, cols, which = "A", ro, co, sector, variant = "q";
  std::string left, right, det_range = "0,0", gen, side = "left", suite;
  bool star = false;
  int power = 1, max_degree = 2, verify_degree = 3;

  auto* mul = app.add_subcommand("mul", "product of two elements");
  add_common(mul, c);
  mul->add_option("--lhs", lhs, "left factor JSON file")->required();
  mul->add_option("--rhs", rhs, "right factor JSON file")->required();

  auto* bar = app.add_subcommand("bar", "bar involution");
  add_common(bar, c);
  bar->add_option("--element", element, "element JSON file, - for stdin");

  auto* minor = app.add_subcommand("minor", "quantum minor from the coaction");
  add_common(minor, c);
  minor->add_option("--rows", rows, "comma-separated row indices")->required();
  minor->add_option("--cols", cols, "comma-separated column indices")->required();
  minor->add_flag("--star", star, "use the dual superspace");

  auto* det = app.add_subcommand("det", "quantum determinants");
  add_common(det, c);
  det->add_option("--which", which, "A, D or Dprime")->check(CLI::IsMember({"A", "D", "Dprime"}));
  det->add_option("--power", power, "integer power");

  auto* ber = app.add_subcommand("ber", "quantum Berezinian");
  add_common(ber, c);
  ber->add_option("--power", power, "integer power");

  auto* reduce = app.add_subcommand("reduce", "reduce to mixed normal form");
  add_common(reduce, c);
  reduce->add_option("--element", element, "element JSON file, - for stdin");

  auto* cb = app.add_subcommand("cb", "dual canonical basis of a block");
  add_common(cb, c);
  cb->add_option("--ro", ro, "row sums")->required();
  cb->add_option("--co", co, "column sums")->required();
  cb->add_option("--sector", sector, "a=..,d=.. for O_q(GL)");
  cb->add_option("--variant", variant, "q or qinv")->check(CLI::IsMember({"q", "qinv"}));

  auto* inv = app.add_subcommand("inv", "invariants of a degree window");
  add_common(inv, c);
  inv->add_option("--left", left, "left generators, e.g. E1,E2");
  inv->add_option("--right", right, "right generators, e.g. F1,F2");
  inv->add_option("--max-degree", max_degree, "degree bound")->check(CLI::NonNegativeNumber);
  inv->add_option("--det-range", det_range, "lo,hi for the determinant powers");

  auto* act = app.add_subcommand("act", "apply one U_q generator");
  add_common(act, c);
  act->add_option("--gen", gen, "E1, F2, K3, Kinv1")->required();
  act->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  act->add_option("--element", element, "element JSON file, - for stdin");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, c);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "suite name or all")->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-degree", verify_degree, "degree bound")->check(CLI::NonNegativeNumber);

  auto* conventions = app.add_subcommand("conventions", "print the conventions in use");
  add_common(conventions, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*mul) run_mul(c, lhs, rhs);
    else if (*bar) run_bar(c, element);
    else if (*minor) run_minor(c, rows, cols, star);
    else if (*det) run_det(c, which, power);
    else if (*ber) run_ber(c, power);
    else if (*reduce) run_reduce(c, element);
    else if (*cb) run_cb(c, ro, co, sector, variant);
    else if (*inv) run_inv(c, left, right, max_degree, det_range);
    else if (*act) run_act(c, gen, side, element);
    else if (*verify) run_verify(c, suite, verify_degree);
    else if (*conventions) run_conventions(c);
  } catch (const VerifyFailed&) {
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
