#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/scalar.hpp"

namespace lieweyl {

/// Element of U(g) in the PBW basis X_1^{nu_1} ... X_n^{nu_n}.
class PBWElement {
 public:
  using TermMap = std::map<MultiIndex, Scalar, GradedLess>;

  PBWElement() = default;
  explicit PBWElement(std::size_t n) : n_(n) {}

  static PBWElement constant(std::size_t n, const Scalar& c) {
    PBWElement e(n);
    e.add_term(MultiIndex(n), c);
    return e;
  }
  static PBWElement one(std::size_t n) { return constant(n, 1); }
  static PBWElement generator(std::size_t n, std::size_t k) {
    PBWElement e(n);
    e.add_term(MultiIndex::unit(n, k), 1);
    return e;
  }
  static PBWElement monomial(const MultiIndex& m, const Scalar& c = 1) {
    PBWElement e(m.size());
    e.add_term(m, c);
    return e;
  }

  std::size_t dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
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
  /// this += s * o
  void add_scaled(const PBWElement& o, const Scalar& s) {
    require_same_dim(n_, o.n_);
    if (s.is_zero()) return;
    for (const auto& [m, c] : o.terms_) add_term(m, c * s);
  }

  PBWElement& operator+=(const PBWElement& o) {
    add_scaled(o, 1);
    return *this;
  }
  PBWElement& operator-=(const PBWElement& o) {
    add_scaled(o, -1);
    return *this;
  }
  PBWElement& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(PBWElement a, const Scalar& s) { return a *= s; }
  friend PBWElement operator*(const Scalar& s, PBWElement a) { return a *= s; }

  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

/// PBW arithmetic in U(g) and the shift actions T|>, T^{-1}|>, Y|> on U(g).
///
/// Results on monomials are memoized inside the instance, so an Enveloping
/// object must not be shared between threads; build one per thread.
class Enveloping {
 public:
  explicit Enveloping(LieAlgebra g) : g_(std::move(g)) {}

  const LieAlgebra& algebra() const { return g_; }
  std::size_t dim() const { return g_.dim(); }

  /// X_j * A, straightened into PBW form.
  PBWElement left_mul_generator(std::size_t j, const PBWElement& a) {
    check_index(j);
    PBWElement out(dim());
    for (const auto& [m, c] : a.terms()) out.add_scaled(left_mul_generator(j, m), c);
    return out;
  }

  PBWElement mul(const PBWElement& a, const PBWElement& b) {
    require_same_dim(a.dim(), dim());
    require_same_dim(b.dim(), dim());
    PBWElement out(dim());
    for (const auto& [m, c] : a.terms()) {
      // X^m * B, feeding the generators of m into B from the right end.
      PBWElement acc = b;
      for (std::size_t k = dim(); k-- > 0;)
        for (unsigned e = 0; e < m[k]; ++e) acc = left_mul_generator(k, acc);
      out.add_scaled(acc, c);
    }
    return out;
  }

  PBWElement pow(const PBWElement& a, unsigned e) {
    PBWElement out = PBWElement::one(dim());
    for (unsigned k = 0; k < e; ++k) out = mul(out, a);
    return out;
  }

  /// T_{mu nu} |> X, from T|>(X_a X') = X_a (T|>X') + sum_r C_{mu a r} (T_{r nu}|>X')
  /// and T_{mu nu}|>1 = delta_{mu nu}.
  PBWElement t_action(std::size_t mu, std::size_t nu, const PBWElement& x) {
    check_index(mu);
    check_index(nu);
    PBWElement out(dim());
    for (const auto& [m, c] : x.terms()) out.add_scaled(t_monomial(mu, nu, m), c);
    return out;
  }

  /// T^{-1}_{mu nu} |> X, from T^{-1}|>(X_a X') = X_a (T^{-1}|>X') - sum_r C_{r a nu} (T^{-1}_{mu r}|>X').
  PBWElement tinv_action(std::size_t mu, std::size_t nu, const PBWElement& x) {
    check_index(mu);
    check_index(nu);
    PBWElement out(dim());
    for (const auto& [m, c] : x.terms()) out.add_scaled(tinv_monomial(mu, nu, m), c);
    return out;
  }

  /// Y_mu |> X = sum_a X_a (T^{-1}_{mu a} |> X), which must equal X * X_mu.
  ///
  /// Both routes are computed; a disagreement throws std::logic_error.
  PBWElement y_action(std::size_t mu, const PBWElement& x) {
    check_index(mu);
    PBWElement via_shift(dim());
    for (std::size_t a = 0; a < dim(); ++a) via_shift += left_mul_generator(a, tinv_action(mu, a, x));
    PBWElement direct = mul(x, PBWElement::generator(dim(), mu));
    if (!(via_shift == direct)) throw std::logic_error("y_action: shift-operator route disagrees with right product");
    return direct;
  }

 private:
  void check_index(std::size_t k) const {
    if (k >= dim()) throw std::out_of_range("generator index " + std::to_string(k + 1) + " out of range");
  }

  const PBWElement& left_mul_generator(std::size_t j, const MultiIndex& m) {
    auto key = std::make_pair(j, m);
    if (auto it = left_cache_.find(key); it != left_cache_.end()) return it->second;
    PBWElement out(dim());
    const std::size_t i = m.first_nonzero();
    if (i >= j) {
      MultiIndex r = m;
      r.bump(j);
      out.add_term(r, 1);
    } else {
      // X_j X_i X' = X_i (X_j X') + sum_l C_{j i l} X_l X'
      MultiIndex rest = m;
      rest.bump(i, -1);
      PBWElement inner = left_mul_generator(j, rest);
      for (const auto& [mm, cc] : inner.terms()) out.add_scaled(left_mul_generator(i, mm), cc);
      for (std::size_t l = 0; l < dim(); ++l) {
        const Scalar& c = g_.c(j, i, l);
        if (!c.is_zero()) out.add_scaled(left_mul_generator(l, rest), c);
      }
    }
    return left_cache_.emplace(key, std::move(out)).first->second;
  }

  const PBWElement& t_monomial(std::size_t mu, std::size_t nu, const MultiIndex& m) {
    auto key = std::make_tuple(mu, nu, m);
    if (auto it = t_cache_.find(key); it != t_cache_.end()) return it->second;
    PBWElement out(dim());
    const std::size_t a = m.first_nonzero();
    if (a == dim()) {
      if (mu == nu) out.add_term(m, 1);
    } else {
      MultiIndex rest = m;
      rest.bump(a, -1);
      out += left_mul_generator(a, PBWElement(t_monomial(mu, nu, rest)));
      for (std::size_t r = 0; r < dim(); ++r) {
        const Scalar& c = g_.c(mu, a, r);
        if (!c.is_zero()) out.add_scaled(t_monomial(r, nu, rest), c);
      }
    }
    return t_cache_.emplace(key, std::move(out)).first->second;
  }

  const PBWElement& tinv_monomial(std::size_t mu, std::size_t nu, const MultiIndex& m) {
    auto key = std::make_tuple(mu, nu, m);
    if (auto it = tinv_cache_.find(key); it != tinv_cache_.end()) return it->second;
    PBWElement out(dim());
    const std::size_t a = m.first_nonzero();
    if (a == dim()) {
      if (mu == nu) out.add_term(m, 1);
    } else {
      MultiIndex rest = m;
      rest.bump(a, -1);
      out += left_mul_generator(a, PBWElement(tinv_monomial(mu, nu, rest)));
      for (std::size_t r = 0; r < dim(); ++r) {
        const Scalar& c = g_.c(r, a, nu);
        if (!c.is_zero()) out.add_scaled(tinv_monomial(mu, r, rest), -c);
      }
    }
    return tinv_cache_.emplace(key, std::move(out)).first->second;
  }

  LieAlgebra g_;
  std::map<std::pair<std::size_t, MultiIndex>, PBWElement> left_cache_;
  std::map<std::tuple<std::size_t, std::size_t, MultiIndex>, PBWElement> t_cache_;
  std::map<std::tuple<std::size_t, std::size_t, MultiIndex>, PBWElement> tinv_cache_;
};

}  // namespace lieweyl
