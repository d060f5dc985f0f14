#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieweyl/errors.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/scalar.hpp"
#include "lieweyl/series.hpp"

namespace lieweyl {

/// Validity order of an operator that was never truncated.
inline constexpr std::size_t kExact = std::numeric_limits<std::size_t>::max();

inline std::size_t order_min(std::size_t a, std::size_t b) { return std::min(a, b); }
inline std::size_t order_minus(std::size_t order, std::size_t d) {
  if (order == kExact) return kExact;
  return order > d ? order - d : 0;
}

/// Normal-ordered monomial x^a d^b.
struct WeylKey {
  MultiIndex x;
  MultiIndex d;
  friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

/// Storage order (|b|, b, a).
struct WeylKeyLess {
  bool operator()(const WeylKey& l, const WeylKey& r) const {
    unsigned dl = l.d.degree(), dr = r.d.degree();
    if (dl != dr) return dl < dr;
    if (auto c = l.d <=> r.d; c != 0) return c < 0;
    return l.x < r.x;
  }
};

/// First coefficient where two operators differ within a common order.
struct WeylMismatch {
  WeylKey key;
  Scalar lhs;
  Scalar rhs;
};

/// Element of the semicompleted Weyl algebra: polynomial in x, power series
/// in d, stored normal-ordered (all x left of all d).
///
/// Only coefficients x^a d^b with |b| <= valid_order() are determined; terms
/// above that are never stored. Polynomials in x and d carry kExact.
class WeylOp {
 public:
  using TermMap = std::map<WeylKey, Scalar, WeylKeyLess>;

  WeylOp() = default;
  explicit WeylOp(std::size_t n, std::size_t valid_order = kExact) : n_(n), valid_(valid_order) {}

  static WeylOp constant(std::size_t n, const Scalar& c) {
    WeylOp op(n);
    op.add_term(MultiIndex(n), MultiIndex(n), c);
    return op;
  }
  static WeylOp identity(std::size_t n) { return constant(n, 1); }
  static WeylOp x(std::size_t n, std::size_t k) {
    WeylOp op(n);
    op.add_term(MultiIndex::unit(n, k), MultiIndex(n), 1);
    return op;
  }
  static WeylOp d(std::size_t n, std::size_t k) {
    WeylOp op(n);
    op.add_term(MultiIndex(n), MultiIndex::unit(n, k), 1);
    return op;
  }
  static WeylOp monomial(const MultiIndex& a, const MultiIndex& b, const Scalar& c = 1) {
    WeylOp op(a.size());
    op.add_term(a, b, c);
    return op;
  }
  /// Multiplication operator by a polynomial in x.
  static WeylOp from_x_polynomial(const Polynomial& p) {
    WeylOp op(p.dim());
    for (const auto& [m, c] : p.terms()) op.add_term(m, MultiIndex(p.dim()), c);
    return op;
  }
  /// Constant-coefficient differential operator p(d).
  static WeylOp from_d_polynomial(const Polynomial& p) {
    WeylOp op(p.dim());
    for (const auto& [m, c] : p.terms()) op.add_term(MultiIndex(p.dim()), m, c);
    return op;
  }

  std::size_t dim() const { return n_; }
  std::size_t valid_order() const { return valid_; }
  bool is_exact() const { return valid_ == kExact; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest x-degree of any stored term.
  unsigned xdeg() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.x.degree());
    return d;
  }
  /// Smallest d-degree of any stored term; 0 for the zero operator.
  unsigned min_ddeg() const { return terms_.empty() ? 0 : terms_.begin()->first.d.degree(); }
  unsigned max_ddeg() const { return terms_.empty() ? 0 : terms_.rbegin()->first.d.degree(); }

  Scalar coeff(const MultiIndex& a, const MultiIndex& b) const {
    auto it = terms_.find(WeylKey{a, b});
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(const MultiIndex& a, const MultiIndex& b, const Scalar& c) {
    require_same_dim(n_, a.size());
    require_same_dim(n_, b.size());
    if (c.is_zero() || (valid_ != kExact && b.degree() > valid_)) return;
    auto [it, inserted] = terms_.try_emplace(WeylKey{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Lowers the validity order, discarding coefficients it no longer covers.
  WeylOp truncated(std::size_t order) const {
    WeylOp out(n_, order_min(valid_, order));
    for (const auto& [k, c] : terms_)
      if (out.valid_ == kExact || k.d.degree() <= out.valid_) out.terms_.emplace(k, c);
    return out;
  }

  WeylOp& operator+=(const WeylOp& o) {
    require_same_dim(n_, o.n_);
    lower_to(o.valid_);
    for (const auto& [k, c] : o.terms_) add_term(k.x, k.d, c);
    return *this;
  }
  WeylOp& operator-=(const WeylOp& o) {
    require_same_dim(n_, o.n_);
    lower_to(o.valid_);
    for (const auto& [k, c] : o.terms_) add_term(k.x, k.d, -c);
    return *this;
  }
  WeylOp& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Scalar& s) { return a *= s; }
  friend WeylOp operator*(const Scalar& s, WeylOp a) { return a *= s; }
  WeylOp operator-() const { return *this * Scalar(-1); }

  /// Normal-ordered product.
  ///
  /// d^b x^c = sum_j prod_k binom(b_k, j_k) c_k!/(c_k-j_k)! x^{c-j} d^{b-j}, so
  /// the result is valid through min(valid(A), valid(B)) - xdeg(B): dropped
  /// tails of either factor have d-degree above that bound.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    require_same_dim(a.n_, b.n_);
    const std::size_t n = a.n_;
    WeylOp out(n, order_minus(order_min(a.valid_, b.valid_), b.xdeg()));
    const std::size_t cap = out.valid_;
    std::vector<unsigned> j(n);
    for (const auto& [ka, ca] : a.terms_) {
      const unsigned da = ka.d.degree();
      for (const auto& [kb, cb] : b.terms_) {
        const unsigned db = kb.d.degree();
        // smallest reachable d-degree contracts min(b_k, c_k) in every slot
        unsigned contract = 0;
        for (std::size_t k = 0; k < n; ++k) contract += std::min(ka.d[k], kb.x[k]);
        if (cap != kExact && da + db - contract > cap) continue;
        const Scalar base = ca * cb;
        std::fill(j.begin(), j.end(), 0u);
        // enumerate j <= min(b, c) componentwise
        while (true) {
          unsigned jdeg = 0;
          for (std::size_t k = 0; k < n; ++k) jdeg += j[k];
          if (cap == kExact || da + db - jdeg <= cap) {
            mpz_class w = 1;
            MultiIndex xa = ka.x, dd = kb.d;
            for (std::size_t k = 0; k < n; ++k) {
              if (j[k] != 0) {
                w *= binomial(ka.d[k], j[k]);
                for (unsigned t = 0; t < j[k]; ++t) w *= kb.x[k] - t;
              }
              xa.set(k, ka.x[k] + kb.x[k] - j[k]);
              dd.set(k, kb.d[k] + ka.d[k] - j[k]);
            }
            out.add_term(xa, dd, w == 1 ? base : base * Scalar(mpq_class(w)));
          }
          std::size_t k = 0;
          for (; k < n; ++k) {
            if (j[k] < std::min(ka.d[k], kb.x[k])) {
              ++j[k];
              break;
            }
            j[k] = 0;
          }
          if (k == n) break;
        }
      }
    }
    return out;
  }
  WeylOp& operator*=(const WeylOp& o) { return *this = *this * o; }

  /// Formal derivative with respect to the symbol d_k, coefficientwise on
  /// normal-ordered terms; the validity order drops by one.
  WeylOp d_derivative(std::size_t k) const {
    WeylOp out(n_, order_minus(valid_, 1));
    for (const auto& [key, c] : terms_) {
      if (key.d[k] == 0) continue;
      MultiIndex b = key.d;
      b.bump(k, -1);
      out.add_term(key.x, b, c * Scalar(static_cast<long>(key.d[k])));
    }
    return out;
  }

  /// Left action on polynomials: x_k multiplies, d_k differentiates.
  Polynomial apply(const Polynomial& f) const {
    require_same_dim(n_, f.dim());
    const int deg = f.degree();
    if (deg >= 0 && valid_ != kExact && valid_ < static_cast<std::size_t>(deg))
      throw InsufficientOrder("WeylOp::apply", static_cast<std::size_t>(deg), valid_);
    Polynomial out(n_);
    for (const auto& [key, c] : terms_) {
      if (static_cast<int>(key.d.degree()) > deg) break;
      for (const auto& [m, fc] : f.terms()) {
        if (!key.d.divides(m)) continue;
        mpz_class w = 1;
        for (std::size_t k = 0; k < n_; ++k)
          for (unsigned t = 0; t < key.d[k]; ++t) w *= m[k] - t;
        out.add_term(m - key.d + key.x, c * fc * Scalar(mpq_class(w)));
      }
    }
    return out;
  }

  /// Compares coefficients with |b| <= order; nullopt when they all agree.
  friend std::optional<WeylMismatch> first_mismatch(const WeylOp& a, const WeylOp& b, std::size_t order) {
    auto in_range = [order](const WeylKey& k) { return order == kExact || k.d.degree() <= order; };
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    const WeylKeyLess less;
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && less(ia->first, ib->first))) {
        if (in_range(ia->first)) return WeylMismatch{ia->first, ia->second, Scalar()};
        ++ia;
      } else if (ia == a.terms_.end() || less(ib->first, ia->first)) {
        if (in_range(ib->first)) return WeylMismatch{ib->first, Scalar(), ib->second};
        ++ib;
      } else {
        if (in_range(ia->first) && !(ia->second == ib->second)) return WeylMismatch{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
      }
    }
    return std::nullopt;
  }

  /// Equality of stored terms and validity order.
  friend bool operator==(const WeylOp& a, const WeylOp& b) {
    return a.n_ == b.n_ && a.valid_ == b.valid_ && a.terms_ == b.terms_;
  }

 private:
  void lower_to(std::size_t order) {
    if (order >= valid_) return;
    valid_ = order;
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->first.d.degree() > valid_ ? terms_.erase(it) : std::next(it);
  }

  std::size_t n_ = 0;
  std::size_t valid_ = kExact;
  TermMap terms_;
};

inline WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

/// Sum_k f_k A^k for a single operator A with no constant term and zero
/// x-degree; valid through d-degree order(f).
inline WeylOp series_of(const TruncSeries& f, const WeylOp& a) {
  if (a.xdeg() != 0 || (!a.is_zero() && a.min_ddeg() == 0))
    throw std::invalid_argument("series_of: argument must be a pure d-series without constant term");
  const std::size_t order = f.order();
  WeylOp out = WeylOp::constant(a.dim(), f[0]).truncated(order);
  WeylOp power = WeylOp::identity(a.dim()).truncated(order);
  const WeylOp base = a.truncated(order);
  for (std::size_t k = 1; k <= order; ++k) {
    power = power * base;
    if (!f[k].is_zero()) out += power * f[k];
  }
  return out;
}

/// n x n matrix of Weyl operators, row-major.
class OpMatrix {
 public:
  OpMatrix() = default;
  explicit OpMatrix(std::size_t n, std::size_t valid_order = kExact) : n_(n), e_(n * n, WeylOp(n, valid_order)) {}

  static OpMatrix identity(std::size_t n, std::size_t valid_order = kExact) {
    OpMatrix m(n, valid_order);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = WeylOp::identity(n).truncated(valid_order);
    return m;
  }

  std::size_t dim() const { return n_; }
  WeylOp& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  const WeylOp& operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

  std::size_t valid_order() const {
    std::size_t o = kExact;
    for (const auto& e : e_) o = order_min(o, e.valid_order());
    return o;
  }

  OpMatrix truncated(std::size_t order) const {
    OpMatrix out = *this;
    for (auto& e : out.e_) e = e.truncated(order);
    return out;
  }
  OpMatrix transposed() const {
    OpMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) {
    require_same_dim(a.n_, b.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
    return a;
  }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) {
    require_same_dim(a.n_, b.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
    return a;
  }
  friend OpMatrix operator*(OpMatrix a, const Scalar& s) {
    for (auto& e : a.e_) e *= s;
    return a;
  }
  friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
    require_same_dim(a.n_, b.n_);
    const std::size_t n = a.n_;
    OpMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        WeylOp acc(n);
        for (std::size_t k = 0; k < n; ++k) acc += a(r, k) * b(k, c);
        out(r, c) = std::move(acc);
      }
    return out;
  }

  friend bool operator==(const OpMatrix& a, const OpMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  std::size_t n_ = 0;
  std::vector<WeylOp> e_;
};

/// Sum_{k=0}^{N} f_k M^k with N = order(f).
///
/// Every entry of M must be a d-series with zero constant term and zero
/// x-degree, so M^k starts at d-degree k and the result is exact through N.
inline OpMatrix matrix_series(const TruncSeries& f, const OpMatrix& m) {
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const WeylOp& e = m(r, c);
      if (e.xdeg() != 0 || (!e.is_zero() && e.min_ddeg() == 0))
        throw std::invalid_argument("matrix_series: entries must be d-series without constant term");
    }
  const std::size_t order = f.order();
  const OpMatrix base = m.truncated(order);
  OpMatrix out = OpMatrix::identity(n, order) * f[0];
  OpMatrix power = OpMatrix::identity(n, order);
  for (std::size_t k = 1; k <= order; ++k) {
    power = power * base;
    if (!f[k].is_zero()) out = out + power * f[k];
  }
  return out.truncated(order);
}

}  // namespace lieweyl
