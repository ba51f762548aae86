#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "localization.hpp"
#include "superalgebra.hpp"

namespace qsuper {

using Json = nlohmann::json;

// ---- Laurent polynomials ----

inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      j[std::to_string(e)] = static_cast<long long>(c);
    else
      j[std::to_string(e)] = c.str();
  }
  return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("Laurent polynomial must be a JSON object");
  LaurentPoly p;
  for (auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) throw UsageError("bad exponent");
    } catch (const std::exception&) {
      throw UsageError("bad exponent key: " + k);
    }
    Int c;
    if (v.is_number_integer())
      c = Int(v.get<long long>());
    else if (v.is_string())
      c = Int(v.get<std::string>());
    else
      throw UsageError("coefficient must be an integer");
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

// ---- matrices ----

inline Json to_json(const ExpMatrix& M) {
  Json rows = Json::array();
  for (int i = 1; i <= M.N(); ++i) {
    Json r = Json::array();
    for (int j = 1; j <= M.N(); ++j) r.push_back(M(i, j));
    rows.push_back(r);
  }
  return rows;
}

inline ExpMatrix matrix_from_json(const Json& j, const Shape& s) {
  if (!j.is_array()) throw UsageError("matrix must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (auto& r : j) {
    if (!r.is_array()) throw UsageError("matrix row must be an array");
    std::vector<int> row;
    for (auto& v : r) {
      if (!v.is_number_integer()) throw UsageError("matrix entries must be integers");
      row.push_back(v.get<int>());
    }
    rows.push_back(row);
  }
  if (static_cast<int>(rows.size()) != s.N()) throw UsageError("matrix size does not match the shape");
  return ExpMatrix::from_rows(rows);
}

// ---- O_q(M) elements ----

inline Json to_json(const Shape& s, const AlgebraElement& f) {
  Json terms = Json::array();
  for (auto& [M, c] : f) terms.push_back({{"matrix", to_json(M)}, {"coeff", to_json(c)}});
  return {{"m", s.m}, {"n", s.n}, {"terms", terms}};
}

inline Shape shape_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n")) throw UsageError("element JSON needs m and n");
  return Shape(j.at("m").get<int>(), j.at("n").get<int>());
}

inline AlgebraElement element_from_json(const Json& j, const Shape& s) {
  if (!j.contains("terms") || !j.at("terms").is_array()) throw UsageError("element JSON needs a terms array");
  AlgebraElement f;
  for (auto& t : j.at("terms")) {
    ExpMatrix M = matrix_from_json(t.at("matrix"), s);
    if (!M.valid(s)) throw UsageError("matrix is not a valid exponent matrix: " + M.str());
    f.add(M, laurent_from_json(t.at("coeff")));
  }
  return f;
}

// ---- mixed-coordinate elements ----

inline Json to_json(const Shape& s, const LocalElement& f) {
  Json terms = Json::array();
  for (auto& [k, c] : f)
    terms.push_back({{"matrix", to_json(k.M)}, {"a", k.a}, {"d", k.d}, {"coeff", to_json(c)}});
  return {{"m", s.m}, {"n", s.n}, {"coords", "mixed"}, {"terms", terms}};
}

inline bool is_mixed_json(const Json& j) { return j.is_object() && j.value("coords", "") == "mixed"; }

inline LocalElement local_from_json(const Json& j, const Shape& s) {
  if (!j.contains("terms") || !j.at("terms").is_array()) throw UsageError("element JSON needs a terms array");
  LocalElement f;
  for (auto& t : j.at("terms")) {
    ExpMatrix M = matrix_from_json(t.at("matrix"), s);
    if (!M.valid(s)) throw UsageError("matrix is not a valid exponent matrix: " + M.str());
    f.add(LocalKey{M, t.value("a", 0), t.value("d", 0)}, laurent_from_json(t.at("coeff")));
  }
  return f;
}

// ---- text ----

namespace detail {

inline std::string power(const std::string& tok, int e) { return e == 1 ? tok : tok + "^" + std::to_string(e); }

inline std::string entry(char c, int i, int j, int N) {
  if (N <= 9) return std::string(1, c) + std::to_string(i) + std::to_string(j);
  return std::string(1, c) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

inline std::string join_terms(const std::vector<std::pair<LaurentPoly, std::vector<std::string>>>& ts) {
  if (ts.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [c, fs] : ts) {
    std::string mono;
    for (auto& f : fs) mono += (mono.empty() ? "" : "*") + f;
    bool neg = false;
    std::string coef;
    if (c.terms().size() == 1) {
      auto [e, v] = c.terms()[0];
      neg = v < 0;
      LaurentPoly a = LaurentPoly::monomial(e, neg ? Int(-v) : v);
      coef = a == LaurentPoly(1) ? "" : a.str();
    } else {
      coef = "(" + c.str() + ")";
    }
    std::string body = coef.empty() ? (mono.empty() ? "1" : mono) : (mono.empty() ? coef : coef + "*" + mono);
    if (first)
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace detail

/// x11*x22 - q^2*x12*x21 style; terms from the largest matrix down
inline std::string to_text(const Shape& s, const AlgebraElement& f) {
  std::vector<std::pair<LaurentPoly, std::vector<std::string>>> ts;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::vector<std::string> fs;
    for (int g = 0; g < s.num_gens(); ++g)
      if (int e = it->first.at(g)) fs.push_back(detail::power(detail::entry('x', s.row(g), s.col(g), s.N()), e));
    ts.push_back({it->second, fs});
  }
  return detail::join_terms(ts);
}

/// detA^a * x.. * y.. * detD'^d words
inline std::string to_text(const Shape& s, const LocalElement& f) {
  std::vector<std::pair<LaurentPoly, std::vector<std::string>>> ts;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const LocalKey& k = it->first;
    std::vector<std::string> fs;
    if (k.a) fs.push_back(detail::power("detA", k.a));
    for (int g = 0; g < s.num_gens(); ++g)
      if (!s.in_D(g))
        if (int e = k.M.at(g)) fs.push_back(detail::power(detail::entry('x', s.row(g), s.col(g), s.N()), e));
    for (int g = 0; g < s.num_gens(); ++g)
      if (s.in_D(g))
        if (int e = k.M.at(g)) fs.push_back(detail::power(detail::entry('y', s.row(g), s.col(g), s.N()), e));
    if (k.d) fs.push_back(detail::power("detD'", k.d));
    ts.push_back({it->second, fs});
  }
  return detail::join_terms(ts);
}

}  // namespace qsuper
