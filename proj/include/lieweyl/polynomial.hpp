#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "lieweyl/errors.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/scalar.hpp"

namespace lieweyl {

/// Commutative polynomial in x_1..x_n with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Scalar, GradedLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const Scalar& c) {
    Polynomial p(n);
    p.add_term(MultiIndex(n), c);
    return p;
  }
  static Polynomial one(std::size_t n) { return constant(n, 1); }
  static Polynomial variable(std::size_t n, std::size_t k) {
    Polynomial p(n);
    p.add_term(MultiIndex::unit(n, k), 1);
    return p;
  }
  static Polynomial monomial(const MultiIndex& m, const Scalar& c = 1) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

  Scalar coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(const MultiIndex& m, const Scalar& c) {
    require_same_dim(n_, m.size());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_dim(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_dim(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return *this * Scalar(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_dim(a.n_, b.n_);
    Polynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const {
    Polynomial out = one(n_);
    for (unsigned k = 0; k < e; ++k) out *= *this;
    return out;
  }

  /// Partial derivative with respect to x_k.
  Polynomial derivative(std::size_t k) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
      if (m[k] == 0) continue;
      MultiIndex r = m;
      r.bump(k, -1);
      out.add_term(r, c * Scalar(static_cast<long>(m[k])));
    }
    return out;
  }

  /// Mixed partial derivative d^b.
  Polynomial derivative(const MultiIndex& b) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_) {
      if (!b.divides(m)) continue;
      Scalar f = c;
      for (std::size_t k = 0; k < n_; ++k)
        for (unsigned j = 0; j < b[k]; ++j) f *= Scalar(static_cast<long>(m[k] - j));
      out.add_term(m - b, f);
    }
    return out;
  }

  /// Degree-d homogeneous part.
  Polynomial homogeneous(unsigned d) const {
    Polynomial out(n_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
  }

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

}  // namespace lieweyl
