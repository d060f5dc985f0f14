#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieweyl/check.hpp"
#include "lieweyl/errors.hpp"
#include "lieweyl/lie_algebra.hpp"
#include "lieweyl/multi_index.hpp"
#include "lieweyl/polynomial.hpp"
#include "lieweyl/realization.hpp"
#include "lieweyl/series.hpp"
#include "lieweyl/star.hpp"
#include "lieweyl/weyl.hpp"

namespace lieweyl {

/// [X_mu, X_nu] = b_mu X_nu - b_nu X_mu, with A = b.d.
struct KappaParams {
  std::vector<Scalar> b;
  WeylOp A;

  explicit KappaParams(std::vector<Scalar> bv) : b(std::move(bv)), A(b.size()) {
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!b[k].is_zero()) A += WeylOp::d(b.size(), k) * b[k];
  }

  std::size_t dim() const { return b.size(); }
  LieAlgebra algebra() const { return kappa_algebra(b); }
};

namespace detail {

/// (b (x) d)_{mu nu} = b_mu d_nu
inline OpMatrix b_tensor_d(const KappaParams& p) {
  const std::size_t n = p.dim();
  OpMatrix m(n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      if (!p.b[mu].is_zero()) m(mu, nu) = WeylOp::d(n, nu) * p.b[mu];
  return m;
}

/// (g(0) - g(t)) / t through order N, from g at order N + 1.
inline TruncSeries one_minus_over_t(SeriesKind g, std::size_t order) {
  const TruncSeries s = series_coeffs(g, order + 1);
  return (TruncSeries(order + 1, {s[0]}) - s).shift_down();
}

inline OpMatrix closed_matrix(const KappaParams& p, const TruncSeries& diag, const TruncSeries& ratio,
                              std::size_t order) {
  const std::size_t n = p.dim();
  const WeylOp ed = series_of(diag, p.A);
  const WeylOp er = series_of(ratio, p.A);
  OpMatrix m(n, order);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      WeylOp e(n, order);
      if (mu == nu) e += ed;
      if (!p.b[mu].is_zero()) e += (WeylOp::d(n, nu) * er * p.b[mu]).truncated(order);
      m(mu, nu) = std::move(e);
    }
  return m;
}

/// x_mu f(A) + b_mu (x.d) h(A), h = (f(0) - f)/A.
inline Realization closed_realization(const KappaParams& p, SeriesKind f, std::size_t order, LieAlgebra g,
                                      RealizationKind kind) {
  const std::size_t n = p.dim();
  const WeylOp fa = series_of(series_coeffs(f, order), p.A);
  const WeylOp ha = series_of(one_minus_over_t(f, order), p.A);
  WeylOp euler(n);
  for (std::size_t a = 0; a < n; ++a) euler += WeylOp::x(n, a) * WeylOp::d(n, a);
  const WeylOp eh = (euler * ha).truncated(order);
  std::vector<WeylOp> xhat;
  for (std::size_t mu = 0; mu < n; ++mu) {
    WeylOp op = WeylOp::x(n, mu) * fa;
    if (!p.b[mu].is_zero()) op += eh * p.b[mu];
    xhat.push_back(std::move(op));
  }
  return {std::move(g), std::move(xhat), kind, order};
}

}  // namespace detail

/// C^k = (-1)^{k-1} A^{k-1} (b (x) d) + (-1)^k A^k I against the direct power.
inline bool kappa_power_check(const KappaParams& p, std::size_t k, std::size_t order) {
  if (k == 0) throw std::invalid_argument("kappa_power_check: k must be at least 1");
  const std::size_t n = p.dim();
  const OpMatrix c = adjoint_matrix(p.algebra());
  OpMatrix direct = c;
  for (std::size_t t = 1; t < k; ++t) direct = direct * c;
  WeylOp a_pow = WeylOp::identity(n);
  for (std::size_t t = 1; t < k; ++t) a_pow = a_pow * p.A;
  const WeylOp a_k = a_pow * p.A;
  const Scalar s_prev = (k - 1) % 2 ? Scalar(-1) : Scalar(1);
  const OpMatrix bd = detail::b_tensor_d(p);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      WeylOp formula = a_pow * bd(mu, nu) * s_prev;
      if (mu == nu) formula -= a_k * s_prev;
      if (first_mismatch(direct(mu, nu), formula, order)) return false;
    }
  return true;
}

/// xhat_mu = x_mu psi~(A) + b_mu (x.d)(1 - psi~(A))/A.
inline Realization kappa_closed_realization(const KappaParams& p, std::size_t order) {
  return detail::closed_realization(p, SeriesKind::psi_tilde, order, p.algebra(), RealizationKind::weyl_symmetric);
}

/// yhat_mu = x_mu psi(A) + b_mu (x.d)(1 - psi(A))/A, realizing the dual algebra.
inline Realization kappa_dual_closed(const KappaParams& p, std::size_t order) {
  return detail::closed_realization(p, SeriesKind::psi, order, dual_algebra(p.algebra()),
                                    RealizationKind::dual_weyl_symmetric);
}

/// T_{mu nu} = e^{-A} delta - b_mu d_nu (e^{-A} - 1)/A and the inverse with A -> -A.
inline std::pair<OpMatrix, OpMatrix> kappa_t_closed(const KappaParams& p, std::size_t order) {
  // -(e^{-A} - 1)/A = (1 - e^{-A})/A and likewise for e^{A}
  const OpMatrix t = detail::closed_matrix(p, series_coeffs(SeriesKind::exp_neg, order),
                                           detail::one_minus_over_t(SeriesKind::exp_neg, order), order);
  const OpMatrix tinv = detail::closed_matrix(p, series_coeffs(SeriesKind::exp, order),
                                              detail::one_minus_over_t(SeriesKind::exp, order), order);
  return {t, tinv};
}

/// Bidifferential operator sum P_{ij}(x) L^i R^j acting on (f, g) as
/// sum P_{ij} (d^i f)(d^j g). x, L and R are treated as commuting symbols.
class BiDiffOperator {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;

  BiDiffOperator(std::size_t n, std::size_t order) : n_(n), order_(order) {}

  static BiDiffOperator identity(std::size_t n, std::size_t order) {
    BiDiffOperator op(n, order);
    op.add_term(MultiIndex(n), MultiIndex(n), Polynomial::one(n));
    return op;
  }

  std::size_t dim() const { return n_; }
  std::size_t order() const { return order_; }
  const std::map<Key, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Terms of total derivative degree above order() are dropped.
  void add_term(const MultiIndex& i, const MultiIndex& j, const Polynomial& c) {
    if (c.is_zero() || i.degree() + j.degree() > order_) return;
    auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BiDiffOperator& operator+=(const BiDiffOperator& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }

  friend BiDiffOperator operator*(const BiDiffOperator& a, const BiDiffOperator& b) {
    BiDiffOperator out(a.n_, std::min(a.order_, b.order_));
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        if (ka.first.degree() + ka.second.degree() + kb.first.degree() + kb.second.degree() > out.order_) continue;
        out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
      }
    return out;
  }
  friend BiDiffOperator operator*(BiDiffOperator a, const Scalar& s) {
    for (auto& [k, c] : a.terms_) c *= s;
    if (s.is_zero()) a.terms_.clear();
    return a;
  }

  Polynomial apply(const Polynomial& f, const Polynomial& g) const {
    const int need = std::max(f.degree(), 0) + std::max(g.degree(), 0);
    if (static_cast<std::size_t>(need) > order_)
      throw InsufficientOrder("BiDiffOperator::apply", static_cast<std::size_t>(need), order_);
    Polynomial out(n_);
    for (const auto& [k, c] : terms_) {
      if (static_cast<int>(k.first.degree()) > f.degree() || static_cast<int>(k.second.degree()) > g.degree()) continue;
      const Polynomial df = f.derivative(k.first);
      if (df.is_zero()) continue;
      const Polynomial dg = g.derivative(k.second);
      if (dg.is_zero()) continue;
      out += c * df * dg;
    }
    return out;
  }

 private:
  std::size_t n_;
  std::size_t order_;
  std::map<Key, Polynomial> terms_;
};

/// exp(sum_a x_a [L_a (R1(U,V) - 1) + R_a (R2(U,V) - 1)]) with U = b.L, V = b.R,
/// R1 = psi~(U+V)/psi~(U), R2 = psi(U+V)/psi(V); psi and psi~ swap for the dual.
inline BiDiffOperator kappa_star_operator(const KappaParams& p, std::size_t order, bool dual = false) {
  const std::size_t n = p.dim();
  const std::size_t so = order == 0 ? 0 : order - 1;
  const TruncSeries left = series_coeffs(dual ? SeriesKind::psi : SeriesKind::psi_tilde, so);
  const TruncSeries right = series_coeffs(dual ? SeriesKind::psi_tilde : SeriesKind::psi, so);
  const BiTruncSeries one = BiTruncSeries::of_sum(TruncSeries(so, {Scalar(1)}));
  const BiTruncSeries r1 = BiTruncSeries::of_sum(left) / BiTruncSeries::of_one(left, true) - one;
  const BiTruncSeries r2 = BiTruncSeries::of_sum(right) / BiTruncSeries::of_one(right, false) - one;

  // powers of b.y as polynomials in n symbols
  Polynomial by(n);
  for (std::size_t k = 0; k < n; ++k) by += Polynomial::variable(n, k) * p.b[k];
  std::vector<Polynomial> bp{Polynomial::one(n)};
  for (std::size_t k = 1; k <= so; ++k) bp.push_back(bp.back() * by);

  BiDiffOperator d(n, order);
  for (std::size_t a = 0; a < n; ++a) {
    const Polynomial xa = Polynomial::variable(n, a);
    const MultiIndex ea = MultiIndex::unit(n, a);
    for (std::size_t pu = 0; pu <= so; ++pu)
      for (std::size_t qv = 0; pu + qv <= so; ++qv) {
        const Scalar& c1 = r1.at(pu, qv);
        const Scalar& c2 = r2.at(pu, qv);
        if (c1.is_zero() && c2.is_zero()) continue;
        for (const auto& [mu, su] : bp[pu].terms())
          for (const auto& [mv, sv] : bp[qv].terms()) {
            if (!c1.is_zero()) d.add_term(mu + ea, mv, xa * (c1 * su * sv));
            if (!c2.is_zero()) d.add_term(mu, mv + ea, xa * (c2 * su * sv));
          }
      }
  }

  BiDiffOperator out = BiDiffOperator::identity(n, order);
  BiDiffOperator power = BiDiffOperator::identity(n, order);
  // every term of d has derivative degree >= 2
  for (std::size_t k = 1; 2 * k <= order; ++k) {
    power = power * d * Scalar(1, static_cast<unsigned long>(k));
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

/// f * g by the closed bidifferential formula; requires order >= deg f + deg g.
inline Polynomial bidiff_star(const KappaParams& p, const Polynomial& f, const Polynomial& g, std::size_t order,
                              bool dual = false) {
  const int need = std::max(f.degree(), 0) + std::max(g.degree(), 0);
  if (static_cast<std::size_t>(need) > order) throw InsufficientOrder("bidiff_star", static_cast<std::size_t>(need), order);
  return kappa_star_operator(p, order, dual).apply(f, g);
}

/// Leading correction of f * g equals 1/2 {f, g}, and that of f * g - g * f
/// equals {f, g}; `op` is a primal star operator of sufficient order.
inline bool kappa_poisson_check(const KappaParams& p, const BiDiffOperator& op, const Polynomial& f,
                                const Polynomial& g) {
  auto star = [&op](const Polynomial& a, const Polynomial& b) { return op.apply(a, b); };
  auto commutator_star = [&op](const Polynomial& a, const Polynomial& b) { return op.apply(a, b) - op.apply(b, a); };
  const Polynomial bracket = poisson_first_order(p.algebra(), f, g);
  return first_order_part(star, f, g) == bracket * Scalar(1, 2) && first_order_part(commutator_star, f, g) == bracket;
}

inline bool kappa_poisson_check(const KappaParams& p, const Polynomial& f, const Polynomial& g) {
  const std::size_t order = static_cast<std::size_t>(std::max(f.degree(), 0) + std::max(g.degree(), 0));
  return kappa_poisson_check(p, kappa_star_operator(p, order), f, g);
}

/// Closed forms against the generic matrix-series engine through order N.
inline std::vector<CheckResult> kappa_cross_check(const KappaParams& p, std::size_t order) {
  const std::size_t n = p.dim();
  const LieAlgebra g = p.algebra();
  using detail::idx;
  std::vector<CheckResult> out;
  auto compare_ops = [&](const char* name, const std::vector<WeylOp>& a, const std::vector<WeylOp>& b) {
    CheckResult r = detail::open_check(name);
    for (std::size_t mu = 0; mu < n; ++mu) detail::compare_into(r, a[mu], b[mu], "mu=" + idx(mu));
    detail::close_check(r, order);
    out.push_back(r);
  };
  auto compare_mat = [&](const char* name, const OpMatrix& a, const OpMatrix& b) {
    CheckResult r = detail::open_check(name);
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        detail::compare_into(r, a(mu, nu), b(mu, nu), "mu=" + idx(mu) + ",nu=" + idx(nu));
    detail::close_check(r, order);
    out.push_back(r);
  };
  compare_ops("kappa_realization", kappa_closed_realization(p, order).xhat, weyl_realization(g, order).xhat);
  compare_ops("kappa_dual_realization", kappa_dual_closed(p, order).xhat, dual_realization(g, order).xhat);
  const auto [tc, tic] = kappa_t_closed(p, order);
  const auto [tg, tig] = t_realization(g, order);
  compare_mat("kappa_shift", tc, tg);
  compare_mat("kappa_inverse_shift", tic, tig);
  return out;
}

}  // namespace lieweyl
