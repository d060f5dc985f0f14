#pragma once

#include <string>
#include <vector>

#include "lieweyl/enveloping.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/scalar.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

namespace detail {

inline constexpr const char* kDot = "\xC2\xB7";  // U+00B7 middle dot

inline void append_factors(std::string& out, const char* name, const MultiIndex& m) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += kDot;
    out += name + std::to_string(k + 1);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
}

inline std::string term_text(const Scalar& c, const std::string& mono) {
  if (mono.empty()) return c.is_real() ? c.str() : "(" + c.str() + ")";
  if (c.is_one()) return mono;
  if (c == Scalar(-1)) return "-" + mono;
  if (c.is_real()) return c.str() + kDot + mono;
  return "(" + c.str() + ")" + kDot + mono;
}

inline std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k].front() == '-')
      out += " - " + terms[k].substr(1);
    else
      out += " + " + terms[k];
  }
  return out;
}

inline void append_latex_factors(std::string& out, const char* name, const MultiIndex& m) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::string(name) + "_{" + std::to_string(k + 1) + "}";
    if (m[k] > 1) out += "^{" + std::to_string(m[k]) + "}";
  }
}

inline std::string latex_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = sgn(q) < 0 ? "-" : "";
  return sign + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string latex_scalar(const Scalar& c) {
  if (c.is_real()) return latex_rational(c.re());
  std::string im = latex_rational(c.im());
  if (sgn(c.re()) == 0) return im + " i";
  return "\\left(" + latex_rational(c.re()) + (sgn(c.im()) >= 0 ? " + " : " ") + im + " i\\right)";
}

inline std::string latex_term(const Scalar& c, const std::string& mono) {
  if (mono.empty()) return latex_scalar(c);
  if (c.is_one()) return mono;
  if (c == Scalar(-1)) return "-" + mono;
  return latex_scalar(c) + " " + mono;
}

}  // namespace detail

/// "x1^2·x3" (1-based names); empty for the zero index.
inline std::string monomial_text(const char* name, const MultiIndex& m) {
  std::string out;
  detail::append_factors(out, name, m);
  return out;
}

inline std::string weyl_monomial_text(const WeylKey& k) {
  std::string out;
  detail::append_factors(out, "x", k.x);
  detail::append_factors(out, "d", k.d);
  return out.empty() ? "1" : out;
}

/// Highest degree first, e.g. "x1·x2 + 1/2·x2".
inline std::string to_text(const Polynomial& p) {
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(detail::term_text(it->second, monomial_text("x", it->first)));
  return detail::join_terms(terms);
}

/// Highest degree first, e.g. "3/2·X1^2·X3 - X2".
inline std::string to_text(const PBWElement& e) {
  std::vector<std::string> terms;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    terms.push_back(detail::term_text(it->second, monomial_text("X", it->first)));
  return detail::join_terms(terms);
}

/// Storage order (d-degree ascending), e.g. "x2 - 1/2·x2·d1 + 1/12·x2·d1^2".
inline std::string to_text(const WeylOp& op) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : op.terms()) {
    std::string mono;
    detail::append_factors(mono, "x", k.x);
    detail::append_factors(mono, "d", k.d);
    terms.push_back(detail::term_text(c, mono));
  }
  return detail::join_terms(terms);
}

inline std::string to_latex(const Polynomial& p) {
  std::vector<std::string> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mono;
    detail::append_latex_factors(mono, "x", it->first);
    terms.push_back(detail::latex_term(it->second, mono));
  }
  return detail::join_terms(terms);
}

/// d is written \partial_{k}; terms in (d-degree, lexicographic) order.
inline std::string to_latex(const WeylOp& op) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : op.terms()) {
    std::string mono;
    detail::append_latex_factors(mono, "x", k.x);
    detail::append_latex_factors(mono, "\\partial", k.d);
    terms.push_back(detail::latex_term(c, mono));
  }
  return detail::join_terms(terms);
}

}  // namespace lieweyl
