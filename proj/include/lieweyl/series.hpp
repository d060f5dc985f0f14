#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "lieweyl/scalar.hpp"

namespace lieweyl {

enum class BernoulliConvention { minus, plus };

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// B_k with B_1 = -1/2 (minus) or +1/2 (plus).
///
/// Memoized table filled by sum_{j=0}^{m} binom(m+1, j) B_j = 0.
inline mpq_class bernoulli(unsigned k, BernoulliConvention convention = BernoulliConvention::minus) {
  static std::mutex mutex;
  static std::vector<mpq_class> table{mpq_class(1)};
  mpq_class value;
  {
    std::lock_guard lock(mutex);
    while (table.size() <= k) {
      const auto m = static_cast<unsigned long>(table.size());
      mpq_class acc = 0;
      for (unsigned long j = 0; j < m; ++j) acc += mpq_class(binomial(m + 1, j)) * table[j];
      mpq_class next = -acc / mpq_class(m + 1);
      next.canonicalize();
      table.push_back(next);
    }
    value = table[k];
  }
  if (k == 1 && convention == BernoulliConvention::plus) value = -value;
  return value;
}

/// Univariate power series truncated after degree `order()`.
class TruncSeries {
 public:
  TruncSeries() : c_(1) {}
  explicit TruncSeries(std::size_t order) : c_(order + 1) {}
  TruncSeries(std::size_t order, std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1); }

  std::size_t order() const { return c_.size() - 1; }
  const Scalar& operator[](std::size_t k) const { return c_[k]; }
  Scalar& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  TruncSeries truncated(std::size_t order) const {
    return TruncSeries(order, std::vector<Scalar>(c_.begin(), c_.begin() + std::min(c_.size(), order + 1)));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
    return out;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
    return out;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  friend TruncSeries operator*(TruncSeries a, const Scalar& s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }

  /// Multiplicative inverse; the constant term must be nonzero.
  TruncSeries inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("TruncSeries: inverse of a series without constant term");
    TruncSeries out(order());
    out[0] = Scalar(1) / c_[0];
    for (std::size_t k = 1; k <= order(); ++k) {
      Scalar acc;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out[k - j];
      out[k] = -acc * out[0];
    }
    return out;
  }
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

  /// (f(t) - f(0)) / t, with the order lowered by one.
  TruncSeries shift_down() const {
    if (order() == 0) throw std::domain_error("TruncSeries: cannot shift an order-0 series");
    TruncSeries out(order() - 1);
    for (std::size_t k = 0; k <= out.order(); ++k) out[k] = c_[k + 1];
    return out;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Scalar> c_;
};

enum class SeriesKind { psi, psi_tilde, exp, exp_neg };

/// psi(t) = t/(1-e^{-t}), psi_tilde(t) = e^{-t} psi(t), e^{t}, e^{-t}.
inline TruncSeries series_coeffs(SeriesKind kind, std::size_t order) {
  TruncSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) {
    mpq_class c = 1 / mpq_class(factorial(k));
    const bool odd = (k % 2) == 1;
    switch (kind) {
      case SeriesKind::psi:
        c *= bernoulli(static_cast<unsigned>(k), BernoulliConvention::minus);
        if (odd) c = -c;
        break;
      case SeriesKind::psi_tilde:
        c *= bernoulli(static_cast<unsigned>(k), BernoulliConvention::plus);
        if (odd) c = -c;
        break;
      case SeriesKind::exp:
        break;
      case SeriesKind::exp_neg:
        if (odd) c = -c;
        break;
    }
    out[k] = Scalar(c);
  }
  return out;
}

/// Bivariate series sum c[p][q] u^p v^q truncated at total degree order().
class BiTruncSeries {
 public:
  explicit BiTruncSeries(std::size_t order) : order_(order), c_((order + 1) * (order + 1)) {}

  std::size_t order() const { return order_; }
  const Scalar& at(std::size_t p, std::size_t q) const { return c_[p * (order_ + 1) + q]; }
  Scalar& at(std::size_t p, std::size_t q) { return c_[p * (order_ + 1) + q]; }

  /// f(u + v).
  static BiTruncSeries of_sum(const TruncSeries& f) {
    BiTruncSeries out(f.order());
    for (std::size_t k = 0; k <= f.order(); ++k)
      for (std::size_t p = 0; p <= k; ++p) out.at(p, k - p) = f[k] * Scalar(mpq_class(binomial(k, p)));
    return out;
  }
  /// f(u) when `in_u`, f(v) otherwise.
  static BiTruncSeries of_one(const TruncSeries& f, bool in_u) {
    BiTruncSeries out(f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) (in_u ? out.at(k, 0) : out.at(0, k)) = f[k];
    return out;
  }

  friend BiTruncSeries operator*(const BiTruncSeries& a, const BiTruncSeries& b) {
    const std::size_t n = std::min(a.order_, b.order_);
    BiTruncSeries out(n);
    for (std::size_t p1 = 0; p1 <= n; ++p1)
      for (std::size_t q1 = 0; p1 + q1 <= n; ++q1) {
        if (a.at(p1, q1).is_zero()) continue;
        for (std::size_t p2 = 0; p1 + q1 + p2 <= n; ++p2)
          for (std::size_t q2 = 0; p1 + q1 + p2 + q2 <= n; ++q2) out.at(p1 + p2, q1 + q2) += a.at(p1, q1) * b.at(p2, q2);
      }
    return out;
  }
  friend BiTruncSeries operator-(const BiTruncSeries& a, const BiTruncSeries& b) {
    BiTruncSeries out(std::min(a.order_, b.order_));
    for (std::size_t p = 0; p <= out.order_; ++p)
      for (std::size_t q = 0; p + q <= out.order_; ++q) out.at(p, q) = a.at(p, q) - b.at(p, q);
    return out;
  }

  /// Inverse of a series with nonzero constant term, by the recursion
  /// sum_{i<=p, j<=q} a_ij r_{p-i,q-j} = [p=q=0].
  BiTruncSeries inverse() const {
    if (at(0, 0).is_zero()) throw std::domain_error("BiTruncSeries: inverse without constant term");
    BiTruncSeries out(order_);
    const Scalar inv0 = Scalar(1) / at(0, 0);
    for (std::size_t d = 0; d <= order_; ++d)
      for (std::size_t p = 0; p <= d; ++p) {
        const std::size_t q = d - p;
        if (d == 0) {
          out.at(0, 0) = inv0;
          continue;
        }
        Scalar acc;
        for (std::size_t i = 0; i <= p; ++i)
          for (std::size_t j = 0; j <= q; ++j)
            if (i + j > 0) acc += at(i, j) * out.at(p - i, q - j);
        out.at(p, q) = -acc * inv0;
      }
    return out;
  }
  friend BiTruncSeries operator/(const BiTruncSeries& a, const BiTruncSeries& b) { return a * b.inverse(); }

  friend bool operator==(const BiTruncSeries& a, const BiTruncSeries& b) {
    if (a.order_ != b.order_) return false;
    for (std::size_t p = 0; p <= a.order_; ++p)
      for (std::size_t q = 0; p + q <= a.order_; ++q)
        if (!(a.at(p, q) == b.at(p, q))) return false;
    return true;
  }

 private:
  std::size_t order_;
  std::vector<Scalar> c_;
};

}  // namespace lieweyl
