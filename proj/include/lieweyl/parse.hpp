#pragma once

#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "lieweyl/enveloping.hpp"
#include "lieweyl/errors.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/scalar.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

/// Recursive-descent reader for expressions such as "3/2·X1^2·X3 - X2",
/// "(x1 + x2)^2" or "x1*d1^2 - (1/2+1i)*d2".
///
///   expr    := [+|-] term {(+|-) term}
///   term    := power {(*|·) power}
///   power   := primary [^ integer]
///   primary := rational [i] | i | name index | ( expr )
///
/// `T` needs +, -, and the callbacks supply constants, variables and the
/// (possibly noncommutative) product.
template <class T>
class ExprParser {
 public:
  struct Ops {
    std::function<T(const Scalar&)> constant;
    /// Returns the generator, or throws std::out_of_range for an unknown name.
    std::function<T(std::string_view name, std::size_t index)> variable;
    std::function<T(const T&, const T&)> mul;
  };

  ExprParser(std::string_view text, Ops ops) : text_(text), ops_(std::move(ops)) {}

  T parse() {
    T value = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  bool eat_minus() { return eat("-") || eat("\xE2\x88\x92"); }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  T expr() {
    bool negate = false;
    if (eat_minus())
      negate = true;
    else
      eat("+");
    T value = term();
    if (negate) value = ops_.mul(ops_.constant(-1), value);
    while (true) {
      if (eat("+")) {
        value = value + term();
      } else if (eat_minus()) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  T term() {
    T value = power();
    while (eat("*") || eat("\xC2\xB7")) value = ops_.mul(value, power());
    return value;
  }

  T power() {
    T base = primary();
    if (!eat("^")) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    T out = ops_.constant(1);
    for (unsigned k = 0; k < e; ++k) out = ops_.mul(out, base);
    return out;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  T primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      T value = expr();
      if (!eat(")")) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      mpq_class q{mpz_class(num)};
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        mpz_class d(den);
        if (d == 0) fail("zero denominator");
        q = mpq_class(mpz_class(num), d);
        q.canonicalize();
      }
      if (pos_ < text_.size() && text_[pos_] == 'i' &&
          (pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        return ops_.constant(Scalar(mpq_class(0), q));
      }
      return ops_.constant(Scalar(q));
    }
    std::string name;
    if (text_.substr(pos_, 3) == "\xE2\x88\x82") {  // U+2202 partial sign
      name = "d";
      pos_ += 3;
    } else {
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
    }
    if (name.empty()) fail("unexpected '" + std::string(1, ch) + "'");
    std::string idx = digits();
    if (idx.empty()) {
      if (name == "i") return ops_.constant(Scalar::i());
      fail("expected index after '" + name + "'");
    }
    const std::size_t k = std::stoul(idx);
    if (k == 0) fail("indices are 1-based");
    try {
      return ops_.variable(name, k - 1);
    } catch (const std::out_of_range&) {
      fail("unknown variable '" + name + idx + "'");
    }
  }

  std::string_view text_;
  Ops ops_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  ExprParser<Polynomial>::Ops ops{
      [n](const Scalar& c) { return Polynomial::constant(n, c); },
      [n](std::string_view name, std::size_t k) {
        if (name != "x" || k >= n) throw std::out_of_range("variable");
        return Polynomial::variable(n, k);
      },
      [](const Polynomial& a, const Polynomial& b) { return a * b; }};
  return ExprParser<Polynomial>(text, std::move(ops)).parse();
}

inline WeylOp parse_weyl(std::string_view text, std::size_t n) {
  ExprParser<WeylOp>::Ops ops{
      [n](const Scalar& c) { return WeylOp::constant(n, c); },
      [n](std::string_view name, std::size_t k) {
        if (k >= n) throw std::out_of_range("variable");
        if (name == "x") return WeylOp::x(n, k);
        if (name == "d") return WeylOp::d(n, k);
        throw std::out_of_range("variable");
      },
      [](const WeylOp& a, const WeylOp& b) { return a * b; }};
  return ExprParser<WeylOp>(text, std::move(ops)).parse();
}

inline PBWElement parse_pbw(std::string_view text, Enveloping& env) {
  const std::size_t n = env.dim();
  ExprParser<PBWElement>::Ops ops{
      [n](const Scalar& c) { return PBWElement::constant(n, c); },
      [n](std::string_view name, std::size_t k) {
        if (name != "X" || k >= n) throw std::out_of_range("variable");
        return PBWElement::generator(n, k);
      },
      [&env](const PBWElement& a, const PBWElement& b) { return env.mul(a, b); }};
  return ExprParser<PBWElement>(text, std::move(ops)).parse();
}

}  // namespace lieweyl
