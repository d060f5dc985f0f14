#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lieweyl/errors.hpp"

namespace lieweyl {

/// Exact Gaussian rational re + im*i.
///
/// Both parts are kept canonical (reduced, positive denominator) by GMP.
/// Real algebras simply carry im == 0 everywhere; the multiplication and
/// division paths short-circuit on that case.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, unsigned long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    re_ = mpq_class(mpz_class(num), mpz_class(den));
    re_.canonicalize();
  }
  explicit Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (o.is_real()) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / norm;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Text form: "p/q" (or "p" when q == 1) for reals, "p/q+r/si" otherwise.
  std::string str() const {
    if (is_real()) return re_.get_str();
    std::string out = re_.get_str();
    if (sgn(im_) >= 0) out += '+';
    out += im_.get_str();
    out += 'i';
    return out;
  }

  /// Parses the text form. Accepts "p", "p/q", "p/q+r/si", "p/q-r/si",
  /// "r/si" and the bare unit "i" / "-i".
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace detail {

// `unit_ok` lets an empty magnitude stand for 1, as in "i" or "2-i".
inline mpq_class parse_rational(std::string_view text, std::string_view whole, bool unit_ok = false) {
  auto bad = [&] { return ParseError("malformed scalar '" + std::string(whole) + "'", 1, 1); };
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s == "-") {
    if (!unit_ok) throw bad();
    return mpq_class(s.empty() ? 1 : -1);
  }
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw bad();
  } else {
    if (!digits_ok(std::string_view(s).substr(0, slash), true) ||
        !digits_ok(std::string_view(s).substr(slash + 1), false))
      throw bad();
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'", 1, 1);
  q.canonicalize();
  return q;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  // Unicode minus sign (U+2212) is accepted as '-'.
  for (std::size_t pos; (pos = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(pos, 3, "-");
  if (s.empty()) throw ParseError("empty scalar", 1, 1);
  if (s.back() != 'i') return Scalar(detail::parse_rational(s, text));
  s.pop_back();
  // Split "re±im" at the last sign that is not in leading position.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(mpq_class(0), detail::parse_rational(s, text, true));
  return Scalar(detail::parse_rational(std::string_view(s).substr(0, split), text),
                detail::parse_rational(std::string_view(s).substr(split), text, true));
}

}  // namespace lieweyl
