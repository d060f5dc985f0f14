#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lieweyl/check.hpp"
#include "lieweyl/enveloping.hpp"
#include "lieweyl/errors.hpp"
#include "lieweyl/format.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/parse.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/realization.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json exps_json(const MultiIndex& m) {
  Json a = Json::array();
  for (std::size_t k = 0; k < m.size(); ++k) a.push_back(m[k]);
  return a;
}

inline MultiIndex exps_from(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw std::invalid_argument(std::string(what) + ": expected an array of " + std::to_string(n) + " exponents");
  MultiIndex m(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!j[k].is_number_unsigned()) throw std::invalid_argument(std::string(what) + ": exponents must be non-negative");
    m.set(k, j[k].get<unsigned>());
  }
  return m;
}

inline std::size_t dim_from(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw std::invalid_argument("expected an object with a positive integer \"n\"");
  const auto n = j["n"].get<std::size_t>();
  if (n == 0 || n > kMaxDim) throw std::invalid_argument("n must be between 1 and " + std::to_string(kMaxDim));
  return n;
}

/// Line and column (1-based) of a byte offset.
inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline Json to_json(const Scalar& s) { return s.str(); }

/// Accepts "p/q" style strings and JSON integers.
inline Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("expected a scalar string such as \"-3/2\" or an integer");
}

inline Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exps", detail::exps_json(m)}, {"coeff", c.str()}});
  return {{"n", p.dim()}, {"terms", terms}, {"text", to_text(p)}};
}

inline Polynomial polynomial_from_json(const Json& j) {
  const std::size_t n = detail::dim_from(j);
  Polynomial p(n);
  for (const auto& t : j.at("terms")) p.add_term(detail::exps_from(t.at("exps"), n, "polynomial"), scalar_from_json(t.at("coeff")));
  return p;
}

inline Json to_json(const PBWElement& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) terms.push_back({{"exps", detail::exps_json(m)}, {"coeff", c.str()}});
  return {{"n", e.dim()}, {"terms", terms}, {"text", to_text(e)}};
}

inline PBWElement pbw_from_json(const Json& j) {
  const std::size_t n = detail::dim_from(j);
  PBWElement e(n);
  for (const auto& t : j.at("terms")) e.add_term(detail::exps_from(t.at("exps"), n, "pbw"), scalar_from_json(t.at("coeff")));
  return e;
}

inline Json order_json(std::size_t order) { return order == kExact ? Json("exact") : Json(order); }

inline Json to_json(const WeylOp& op) {
  Json terms = Json::array();
  for (const auto& [k, c] : op.terms())
    terms.push_back({{"x", detail::exps_json(k.x)}, {"d", detail::exps_json(k.d)}, {"coeff", c.str()}});
  return {{"n", op.dim()}, {"valid_order", order_json(op.valid_order())}, {"terms", terms}, {"text", to_text(op)}};
}

/// Either the term-list object or a text form such as "1 + 1/2·d2".
inline WeylOp weyl_from_json(const Json& j, std::size_t n) {
  if (j.is_string()) return parse_weyl(j.get<std::string>(), n);
  if (j.is_number_integer()) return WeylOp::constant(n, Scalar(j.get<long>()));
  if (!j.is_object()) throw std::invalid_argument("expected a Weyl operator (string or object)");
  std::size_t order = kExact;
  if (j.contains("valid_order") && j["valid_order"].is_number_unsigned()) order = j["valid_order"].get<std::size_t>();
  WeylOp op(n, order);
  for (const auto& t : j.at("terms"))
    op.add_term(detail::exps_from(t.at("x"), n, "weyl x"), detail::exps_from(t.at("d"), n, "weyl d"),
                scalar_from_json(t.at("coeff")));
  return op;
}

inline Json to_json(const OpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"n", m.dim()}, {"valid_order", order_json(m.valid_order())}, {"entries", rows}};
}

/// Nonzero structure constants, 1-based.
inline Json to_json(const LieAlgebra& g) {
  Json cs = Json::array();
  const std::size_t n = g.dim();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t la = 0; la < n; ++la)
        if (!g.c(mu, nu, la).is_zero())
          cs.push_back({{"mu", mu + 1}, {"nu", nu + 1}, {"lambda", la + 1}, {"c", g.c(mu, nu, la).str()}});
  return {{"n", n}, {"constants", cs}};
}

inline Json to_json(const Realization& r) {
  Json ops = Json::array();
  for (const auto& op : r.xhat) ops.push_back(to_json(op));
  return {{"kind", to_string(r.kind)}, {"order", r.order}, {"algebra", to_json(r.algebra)}, {"xhat", ops}};
}

inline Json to_json(const CheckResult& c) {
  Json j = {{"identity", c.identity}, {"order_checked", c.order_checked}, {"pass", c.pass}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

/// Parses JSON text; syntax errors become ParseError with line and column.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, col] = detail::line_col(text, offset);
    std::string what = e.what();
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(what, line, col);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// {"n": 2, "constants": [{"mu": 1, "nu": 2, "lambda": 2, "c": "1"}]}; the
/// antisymmetric partners are completed.
inline LieAlgebra lie_algebra_from_json(const Json& j, Completion mode = Completion::strict) {
  const std::size_t n = detail::dim_from(j);
  std::vector<ConstantEntry> entries;
  if (j.contains("constants")) {
    if (!j["constants"].is_array()) throw std::invalid_argument("\"constants\" must be an array");
    for (const auto& e : j["constants"]) {
      auto index = [&](const char* key) {
        if (!e.contains(key) || !e[key].is_number_unsigned())
          throw std::invalid_argument(std::string("constant entry needs a 1-based \"") + key + "\"");
        const auto k = e[key].get<std::size_t>();
        if (k == 0 || k > n) throw std::invalid_argument(std::string("index \"") + key + "\" out of range 1.." + std::to_string(n));
        return k - 1;
      };
      if (!e.contains("c")) throw std::invalid_argument("constant entry needs \"c\"");
      entries.push_back({index("mu"), index("nu"), index("lambda"), scalar_from_json(e["c"])});
    }
  }
  return from_constants(n, entries, mode);
}

inline LieAlgebra load_lie_algebra(const std::string& path, Completion mode = Completion::strict) {
  return lie_algebra_from_json(parse_json_text(read_file(path)), mode);
}

/// {"n": 2, "phi": [["1", "1/2·d2"], ["0", "1 - 1/2·d1"]]} with row index alpha and
/// column index mu, so that xhat_mu = sum_alpha x_alpha phi[alpha][mu].
inline OpMatrix phi_from_json(const Json& j) {
  const std::size_t n = detail::dim_from(j);
  if (!j.contains("phi") || !j["phi"].is_array() || j["phi"].size() != n)
    throw std::invalid_argument("\"phi\" must be an n x n array");
  OpMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = j["phi"][r];
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("\"phi\" must be an n x n array");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = weyl_from_json(row[c], n);
  }
  return m;
}

inline OpMatrix load_phi(const std::string& path) { return phi_from_json(parse_json_text(read_file(path))); }

}  // namespace lieweyl
